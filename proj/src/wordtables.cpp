#include "lcs/wordtables.hpp"

#include "lcs/errors.hpp"

namespace lcs {

uint32_t WordTable::of(const Word& w) const {
  auto it = index.find(w.letters());
  if (it == index.end()) throw EngineError("word not in table");
  return it->second;
}

std::map<Multidegree, std::vector<uint32_t>> WordTable::blocks(
    int ngens) const {
  std::map<Multidegree, std::vector<uint32_t>> out;
  for (uint32_t i = 0; i < size(); ++i)
    out[words[i].multidegree(ngens)].push_back(i);
  return out;
}

WordTables::WordTables(std::vector<GeneratorSpec> gens, int maxdeg,
                       std::size_t cell_guard)
    : gens_(std::move(gens)), maxdeg_(maxdeg) {
  if (maxdeg_ < 0) throw UsageError("maxdeg must be nonnegative");
  tables_.resize(static_cast<std::size_t>(maxdeg_) + 1);
  std::size_t total = 0;
  for (int d = 0; d <= maxdeg_; ++d) {
    auto& t = tables_[static_cast<std::size_t>(d)];
    t.words = enumerate_words(gens_, d);
    total += t.words.size();
    if (total > cell_guard)
      throw UsageError(
          "degree window too large: word tables exceed the memory guard (" +
          std::to_string(cell_guard) + " words); lower --maxdeg");
    t.index.reserve(t.words.size() * 2);
    for (uint32_t i = 0; i < t.words.size(); ++i)
      t.index.emplace(t.words[i].letters(), i);
  }
}

const WordTable& WordTables::at(int d) const {
  if (d < 0 || d > maxdeg_) throw EngineError("degree outside computed window");
  return tables_[static_cast<std::size_t>(d)];
}

SparseVec WordTables::from_poly(const NCPoly& p, int d) const {
  const WordTable& t = at(d);
  SparseVec v;
  for (const auto& [w, c] : p.terms()) {
    if (w.degree() != d) throw EngineError("from_poly: inhomogeneous input");
    v.push(t.of(w), c);
  }
  v.normalize();
  return v;
}

NCPoly WordTables::to_poly(const SparseVec& v, int d) const {
  const WordTable& t = at(d);
  NCPoly p;
  for (const auto& en : v.entries()) p.add_term(t.words[en.col], en.val);
  return p;
}

SparseVec WordTables::mul_word_left(const Word& w, const SparseVec& v,
                                    int dv) const {
  if (w.is_one()) return v;
  const WordTable& src = at(dv);
  const WordTable& dst = at(dv + w.degree());
  SparseVec out;
  for (const auto& en : v.entries())
    out.push(dst.of(w.concat(src.words[en.col])), en.val);
  out.normalize();
  return out;
}

SparseVec WordTables::mul_word_right(const SparseVec& v, int dv,
                                     const Word& w) const {
  if (w.is_one()) return v;
  const WordTable& src = at(dv);
  const WordTable& dst = at(dv + w.degree());
  SparseVec out;
  for (const auto& en : v.entries())
    out.push(dst.of(src.words[en.col].concat(w)), en.val);
  out.normalize();
  return out;
}

SparseVec WordTables::commutator_row(const Word& w, const SparseVec& v,
                                     int dv) const {
  SparseVec out = mul_word_left(w, v, dv);
  SparseVec right = mul_word_right(v, dv, w);
  out.axpy(Rat(-1), right);
  return out;
}

SparseVec WordTables::mul_rows(const SparseVec& a, int da, const SparseVec& b,
                               int db) const {
  const WordTable& ta = at(da);
  const WordTable& tb = at(db);
  const WordTable& dst = at(da + db);
  SparseVec out;
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      out.push(dst.of(ta.words[ea.col].concat(tb.words[eb.col])),
               ea.val * eb.val);
  out.normalize();
  return out;
}

}  // namespace lcs
