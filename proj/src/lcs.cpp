#include "lcs/lcs.hpp"

#include <algorithm>
#include <set>

#include "lcs/errors.hpp"

namespace lcs {

void Presentation::validate() const {
  if (generators.empty()) throw UsageError("presentation has no generators");
  if (generators.size() > 64) throw UsageError("too many generators");
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw UsageError("generator with empty name");
    if (g.degree < 1)
      throw UsageError("generator '" + g.name + "' has degree " +
                       std::to_string(g.degree) + "; degrees must be >= 1");
    if (!names.insert(g.name).second)
      throw UsageError("duplicate generator name '" + g.name + "'");
  }
  for (const auto& r : relations) {
    if (r.is_zero()) throw UsageError("zero relation");
    auto deg = r.homogeneous_degree();
    if (!deg) throw UsageError("inhomogeneous relation: " + r.str(generators));
    if (*deg < 1) throw UsageError("relation of degree 0");
  }
}

bool ContainmentReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Filtration::Filtration(Presentation pres, EngineOptions opt)
    : pres_(std::move(pres)), opt_(opt) {
  pres_.validate();
  if (opt_.kmax < 1 || opt_.kmax > 8)
    throw UsageError("kmax must be between 1 and 8");
  if (opt_.maxdeg < 1 || opt_.maxdeg > 12)
    throw UsageError("maxdeg must be between 1 and 12");
  if (opt_.threads < 1) opt_.threads = 1;
  tables_ = std::make_unique<WordTables>(pres_.generators, opt_.maxdeg,
                                         opt_.word_guard);
}

const EchelonBasis& Filtration::lseries(int k, int d) const {
  if (k < 1 || k > opt_.kmax + 1) throw EngineError("lseries: k out of range");
  return l_[static_cast<std::size_t>(k)].at(d);
}

const EchelonBasis& Filtration::mseries(int k, int d) const {
  if (k < 1 || k > opt_.kmax + 1) throw EngineError("mseries: k out of range");
  return m_[static_cast<std::size_t>(k)].at(d);
}

int Filtration::dim_algebra(int d) const {
  return static_cast<int>(tables_->at(d).size()) - ideal_.dim(d);
}

int Filtration::dim_n(int k, int d) const {
  int v = dim_m(k, d) - dim_m(k + 1, d);
  if (v < 0) throw EngineError("negative dim N_k: chain containment violated");
  return v;
}

int Filtration::dim_b(int k, int d) const {
  int v = dim_l(k, d) - dim_l(k + 1, d);
  if (v < 0) throw EngineError("negative dim B_k: chain containment violated");
  return v;
}

SparseVec Filtration::reduce_ideal(SparseVec v, int d) const {
  if (pres_.is_free()) return v;
  return reduce(ideal_.at(d), std::move(v));
}

SparseVec Filtration::nk_class(SparseVec v, int k, int d) const {
  return reduce(mseries(k + 1, d), reduce_ideal(std::move(v), d));
}

// Word representatives of a basis of A(d): all words for a free presentation,
// the non-pivot columns of I(d) otherwise.
const std::vector<uint32_t>& Filtration::word_reps(int d) const {
  auto it = reps_cache_.find(d);
  if (it != reps_cache_.end()) return it->second;
  std::vector<uint32_t> reps;
  uint32_t n = tables_->at(d).size();
  if (pres_.is_free()) {
    reps.resize(n);
    for (uint32_t i = 0; i < n; ++i) reps[i] = i;
  } else {
    const auto& piv = ideal_.at(d).pivots();
    std::size_t j = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (j < piv.size() && piv[j] == i) {
        ++j;
        continue;
      }
      reps.push_back(i);
    }
  }
  return reps_cache_.emplace(d, std::move(reps)).first->second;
}

EchelonBasis Filtration::echelonize_graded(std::vector<SparseVec> rows,
                                           int d) const {
  if (rows.empty()) return EchelonBasis();
  if (!pres_.is_free()) return echelonize(std::move(rows));

  // Every generated vector is multihomogeneous, so blocks of columns indexed
  // by multidegree eliminate independently.
  const WordTable& t = tables_->at(d);
  int n = pres_.ngens();
  std::map<Multidegree, std::vector<SparseVec>> groups;
  for (auto& r : rows) {
    if (r.empty()) continue;
    groups[t.words[r.leading_col()].multidegree(n)].push_back(std::move(r));
  }
  std::vector<std::vector<SparseVec>*> jobs;
  std::vector<EchelonBasis> results(groups.size());
  jobs.reserve(groups.size());
  for (auto& [md, g] : groups) jobs.push_back(&g);
  parallel_for_jobs(opt_.threads, static_cast<int>(jobs.size()), [&](int i) {
    results[static_cast<std::size_t>(i)] = echelonize(std::move(*jobs[static_cast<std::size_t>(i)]));
  });

  std::vector<std::pair<uint32_t, std::pair<std::size_t, std::size_t>>> order;
  for (std::size_t g = 0; g < results.size(); ++g)
    for (std::size_t r = 0; r < results[g].rows().size(); ++r)
      order.emplace_back(results[g].pivots()[r], std::make_pair(g, r));
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseVec> mrows;
  std::vector<uint32_t> mpivots;
  mrows.reserve(order.size());
  mpivots.reserve(order.size());
  for (auto& [piv, loc] : order) {
    mpivots.push_back(piv);
    mrows.push_back(std::move(
        const_cast<SparseVec&>(results[loc.first].rows()[loc.second])));
  }
  return EchelonBasis(std::move(mrows), std::move(mpivots));
}

void Filtration::build_ideal() {
  if (pres_.is_free()) return;
  std::span<const GeneratorSpec> gens(pres_.generators);
  for (int d = 0; d <= opt_.maxdeg; ++d) {
    const WordTable& dst = tables_->at(d);
    std::vector<SparseVec> rows;
    for (const auto& rel : pres_.relations) {
      int dr = *rel.homogeneous_degree();
      if (dr > d) continue;
      for (int a = 0; a + dr <= d; ++a) {
        int b = d - dr - a;
        for (const Word& u : tables_->at(a).words) {
          for (const Word& v : tables_->at(b).words) {
            SparseVec row;
            for (const auto& [wr, c] : rel.terms())
              row.push(dst.of(u.concat(wr).concat(v)), c);
            row.normalize();
            if (!row.empty()) rows.push_back(std::move(row));
          }
        }
      }
    }
    ideal_.set(d, echelonize(std::move(rows)));
  }
}

EchelonBasis Filtration::complement_of_ideal(int d) const {
  std::vector<SparseVec> rows;
  std::vector<uint32_t> pivots = word_reps(d);
  rows.reserve(pivots.size());
  for (uint32_t c : pivots) {
    SparseVec v;
    v.push(c, Rat(1));
    rows.push_back(std::move(v));
  }
  return EchelonBasis(std::move(rows), std::move(pivots));
}

EchelonBasis Filtration::build_l(int k, int d) const {
  std::span<const GeneratorSpec> gens(pres_.generators);
  std::vector<SparseVec> rows;
  for (int j = 1; j <= d; ++j) {
    const EchelonBasis& prev = l_[static_cast<std::size_t>(k - 1)].at(d - j);
    if (prev.dim() == 0) continue;
    const WordTable& tj = tables_->at(j);
    for (uint32_t wi : word_reps(j)) {
      const Word& w = tj.words[wi];
      for (const auto& v : prev.rows()) {
        SparseVec row = tables_->commutator_row(w, v, d - j);
        row = reduce_ideal(std::move(row), d);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return echelonize_graded(std::move(rows), d);
}

EchelonBasis Filtration::build_m(int k, int d) const {
  std::span<const GeneratorSpec> gens(pres_.generators);
  const EchelonBasis& lk = l_[static_cast<std::size_t>(k)].at(d);
  std::vector<SparseVec> rows(lk.rows());
  for (int i = 0; i < pres_.ngens(); ++i) {
    int di = pres_.generators[static_cast<std::size_t>(i)].degree;
    if (d - di < 0) continue;
    const EchelonBasis& lower = m_[static_cast<std::size_t>(k)].at(d - di);
    Word xi = Word::generator(gens, i);
    for (const auto& v : lower.rows()) {
      SparseVec row = tables_->mul_word_left(xi, v, d - di);
      row = reduce_ideal(std::move(row), d);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return echelonize_graded(std::move(rows), d);
}

void Filtration::compute() {
  if (computed_) return;
  int kk = opt_.kmax + 1;
  l_.assign(static_cast<std::size_t>(kk) + 1, GradedSubspace());
  m_.assign(static_cast<std::size_t>(kk) + 1, GradedSubspace());
  build_ideal();
  for (int d = 0; d <= opt_.maxdeg; ++d) {
    l_[1].set(d, complement_of_ideal(d));
    for (int k = 2; k <= kk; ++k) l_[static_cast<std::size_t>(k)].set(d, build_l(k, d));
    m_[1].set(d, l_[1].at(d));
    for (int k = 2; k <= kk; ++k) m_[static_cast<std::size_t>(k)].set(d, build_m(k, d));
  }
  computed_ = true;
}

const EchelonBasis& Filtration::nk_complement(int k, int d) {
  auto key = std::make_pair(k, d);
  auto it = nk_cache_.find(key);
  if (it != nk_cache_.end()) return it->second;
  const EchelonBasis& mk = mseries(k, d);
  const EchelonBasis& mk1 = mseries(k + 1, d);
  std::vector<SparseVec> residues;
  residues.reserve(static_cast<std::size_t>(mk.dim()));
  for (const auto& r : mk.rows()) {
    SparseVec res = reduce(mk1, r);
    if (!res.empty()) residues.push_back(std::move(res));
  }
  EchelonBasis q = echelonize_graded(std::move(residues), d);
  if (q.dim() != dim_n(k, d))
    throw EngineError("nk_complement: dimension mismatch with dim N_k");
  return nk_cache_.emplace(key, std::move(q)).first->second;
}

DimTable Filtration::dim_table() {
  compute();
  DimTable t;
  t.kmax = opt_.kmax;
  t.maxdeg = opt_.maxdeg;
  for (int k = 1; k <= opt_.kmax; ++k) {
    for (int d = 0; d <= opt_.maxdeg; ++d) {
      // Chain containment, row by row; a failure is an engine bug.
      for (const auto& r : mseries(k + 1, d).rows())
        if (!member(r, mseries(k, d)))
          throw EngineError("chain violated: M_" + std::to_string(k + 1) +
                            "(" + std::to_string(d) + ") not inside M_" +
                            std::to_string(k));
      for (const auto& r : lseries(k + 1, d).rows())
        if (!member(r, lseries(k, d)))
          throw EngineError("chain violated: L_" + std::to_string(k + 1) +
                            "(" + std::to_string(d) + ") not inside L_" +
                            std::to_string(k));
      t.rows.push_back(DimRow{k, d, dim_l(k, d), dim_m(k, d), dim_b(k, d),
                              dim_n(k, d)});
    }
  }
  return t;
}

ContainmentReport verify_containments(Filtration& f, int maxdeg) {
  f.compute();
  if (f.kmax() < 3)
    throw UsageError("verify requires kmax >= 3 (needs M_4 and L_4 slices)");
  int D = std::min(maxdeg, f.maxdeg());
  const WordTables& wt = f.words();
  ContainmentReport rep;

  // Products of spanning rows: every row of M_{ka}(da) * row of Xb(db) must
  // lie in M_{kc}(da+db).
  auto product_check = [&](const std::string& claim, int ka,
                           bool right_is_l, int kb, int kc) {
    ContainmentCheck c{claim, D, 0, true};
    for (int da = 1; da < D; ++da) {
      const EchelonBasis& A = f.mseries(ka, da);
      if (A.dim() == 0) continue;
      for (int db = 1; da + db <= D; ++db) {
        const EchelonBasis& B =
            right_is_l ? f.lseries(kb, db) : f.mseries(kb, db);
        const EchelonBasis& target = f.mseries(kc, da + db);
        for (const auto& a : A.rows()) {
          for (const auto& b : B.rows()) {
            SparseVec p = f.reduce_ideal(wt.mul_rows(a, da, b, db), da + db);
            ++c.checked;
            if (!member(p, target)) c.passed = false;
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  };

  product_check("M3*M2 in M4", 3, false, 2, 4);
  product_check("M2*L3 in M4", 2, true, 3, 4);

  // [A, [A, M_k]] in M_{k+1}, k = 2, 3.
  for (int k = 2; k <= 3; ++k) {
    ContainmentCheck c{"[A,[A,M" + std::to_string(k) + "]] in M" +
                           std::to_string(k + 1),
                       D, 0, true};
    for (int dc = 1; dc <= D - 2; ++dc) {
      const EchelonBasis& V = f.mseries(k, dc);
      if (V.dim() == 0) continue;
      for (int b = 1; dc + b < D; ++b) {
        const WordTable& tb = wt.at(b);
        std::vector<SparseVec> inner;
        for (uint32_t wbi : f.word_reps(b)) {
          for (const auto& v : V.rows()) {
            SparseVec t = f.reduce_ideal(
                wt.commutator_row(tb.words[wbi], v, dc), dc + b);
            if (!t.empty()) inner.push_back(std::move(t));
          }
        }
        for (int a = 1; dc + b + a <= D; ++a) {
          const WordTable& ta = wt.at(a);
          const EchelonBasis& target = f.mseries(k + 1, a + b + dc);
          for (uint32_t wai : f.word_reps(a)) {
            for (const auto& t : inner) {
              SparseVec r = f.reduce_ideal(
                  wt.commutator_row(ta.words[wai], t, dc + b), a + b + dc);
              ++c.checked;
              if (!member(r, target)) c.passed = false;
            }
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // [A, M_3] in L_4.
  {
    ContainmentCheck c{"[A,M3] in L4", D, 0, true};
    for (int dc = 1; dc < D; ++dc) {
      const EchelonBasis& V = f.mseries(3, dc);
      if (V.dim() == 0) continue;
      for (int a = 1; dc + a <= D; ++a) {
        const WordTable& ta = wt.at(a);
        const EchelonBasis& target = f.lseries(4, a + dc);
        for (uint32_t wai : f.word_reps(a)) {
          for (const auto& v : V.rows()) {
            SparseVec r = f.reduce_ideal(
                wt.commutator_row(ta.words[wai], v, dc), a + dc);
            ++c.checked;
            if (!member(r, target)) c.passed = false;
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // Chain containments for the computed window.
  {
    ContainmentCheck c{"chain M(k+1) in M(k), L(k+1) in L(k)", D, 0, true};
    for (int k = 1; k <= f.kmax(); ++k) {
      for (int d = 0; d <= D; ++d) {
        for (const auto& r : f.mseries(k + 1, d).rows()) {
          ++c.checked;
          if (!member(r, f.mseries(k, d))) c.passed = false;
        }
        for (const auto& r : f.lseries(k + 1, d).rows()) {
          ++c.checked;
          if (!member(r, f.lseries(k, d))) c.passed = false;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace lcs
