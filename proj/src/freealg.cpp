#include "lcs/freealg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lcs/errors.hpp"

namespace lcs {

Word Word::make(std::span<const GeneratorSpec> gens, std::string letters) {
  int deg = 0;
  for (char ch : letters) {
    auto i = static_cast<uint8_t>(ch);
    if (i >= gens.size()) throw UsageError("word letter out of range");
    deg += gens[i].degree;
  }
  return Word(std::move(letters), deg);
}

Word Word::generator(std::span<const GeneratorSpec> gens, int i) {
  return Word(std::string(1, static_cast<char>(i)), gens[i].degree);
}

Word Word::subword(int pos, int len, std::span<const GeneratorSpec> gens) const {
  return make(gens, letters_.substr(pos, len));
}

Multidegree Word::multidegree(int ngens) const {
  Multidegree md(ngens, 0);
  for (char ch : letters_) md[static_cast<uint8_t>(ch)]++;
  return md;
}

std::vector<Word> enumerate_words(std::span<const GeneratorSpec> gens, int d) {
  std::vector<Word> out;
  if (d < 0) return out;
  if (d == 0) {
    out.push_back(Word::one());
    return out;
  }
  int n = static_cast<int>(gens.size());
  if (n == 0) return out;
  int dmin = gens[0].degree, dmax = gens[0].degree;
  for (const auto& g : gens) {
    dmin = std::min(dmin, g.degree);
    dmax = std::max(dmax, g.degree);
  }
  std::string cur;
  // Lengths ascending, lexicographic within a length.
  for (int len = (d + dmax - 1) / dmax; len <= d / dmin; ++len) {
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      int left = len - pos;
      if (left == 0) {
        if (rem == 0) out.emplace_back(Word::make(gens, cur));
        return;
      }
      if (rem < left * dmin || rem > left * dmax) return;
      for (int i = 0; i < n; ++i) {
        if (gens[i].degree > rem) continue;
        cur.push_back(static_cast<char>(i));
        rec(pos + 1, rem - gens[i].degree);
        cur.pop_back();
      }
    };
    rec(0, d);
  }
  return out;
}

Rat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> NCPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    if (!deg) deg = w.degree();
    else if (*deg != w.degree()) return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

int NCPoly::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string NCPoly::str(std::span<const GeneratorSpec> gens) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    std::vector<std::string> parts;
    if (a != 1 || w.is_one()) parts.push_back(a.get_str());
    for (int i = 0; i < w.length(); ++i)
      parts.push_back(gens[w.letter(i)].name);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) s += ' ';
      s += parts[i];
    }
  }
  return s;
}

NCPoly mul(const NCPoly& p, const NCPoly& q) {
  NCPoly r;
  for (const auto& [wp, cp] : p.terms())
    for (const auto& [wq, cq] : q.terms()) r.add_term(wp.concat(wq), cp * cq);
  return r;
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) {
  return mul(p, q) - mul(q, p);
}

Derivation Derivation::euler(std::span<const GeneratorSpec> gens) {
  std::vector<NCPoly> images;
  images.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    images.emplace_back(Word::generator(gens, static_cast<int>(i)),
                        Rat(gens[i].degree));
  return Derivation(std::move(images));
}

NCPoly Derivation::apply(const NCPoly& p,
                         std::span<const GeneratorSpec> gens) const {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    for (int pos = 0; pos < w.length(); ++pos) {
      const NCPoly& img = images_[w.letter(pos)];
      if (img.is_zero()) continue;
      Word prefix = w.subword(0, pos, gens);
      Word suffix = w.subword(pos + 1, w.length() - pos - 1, gens);
      for (const auto& [wi, ci] : img.terms())
        r.add_term(prefix.concat(wi).concat(suffix), c * ci);
    }
  }
  return r;
}

std::optional<int> Derivation::graded_weight(
    std::span<const GeneratorSpec> gens) const {
  std::optional<int> weight;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero()) continue;
    auto deg = images_[i].homogeneous_degree();
    if (!deg) return std::nullopt;
    int w = *deg - gens[i].degree;
    if (!weight) weight = w;
    else if (*weight != w) return std::nullopt;
  }
  return weight ? weight : std::optional<int>(0);
}

Derivation Derivation::bracket(const Derivation& d1, const Derivation& d2,
                               std::span<const GeneratorSpec> gens) {
  std::vector<NCPoly> images;
  images.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    images.push_back(d1.apply(d2.image(static_cast<int>(i)), gens) -
                     d2.apply(d1.image(static_cast<int>(i)), gens));
  return Derivation(std::move(images));
}

NCPoly symmetrized_monomial(std::span<const GeneratorSpec> gens,
                            const Multidegree& alpha) {
  std::string sorted;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    sorted.append(static_cast<std::size_t>(alpha[i]), static_cast<char>(i));
  // Enumerate distinct permutations of the multiset via std::next_permutation.
  std::vector<std::string> perms;
  std::string s = sorted;
  do {
    perms.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  NCPoly r;
  Rat c(1, static_cast<unsigned long>(perms.size()));
  c.canonicalize();
  for (auto& p : perms) r.add_term(Word::make(gens, std::move(p)), c);
  return r;
}

}  // namespace lcs
