#pragma once

#include <span>

#include "lcs/freealg.hpp"
#include "lcs/linalg.hpp"
#include "lcs/rng.hpp"

namespace lcs {

// Random homogeneous polynomial of the given degree: a few distinct words
// with small nonzero rational coefficients.
inline NCPoly random_homog_poly(Rng& rng, std::span<const GeneratorSpec> gens,
                                int degree, int nterms = 3) {
  static const std::pair<long, long> pool[] = {
      {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {3, 1}, {-3, 2}};
  std::vector<Word> words = enumerate_words(gens, degree);
  NCPoly p;
  if (words.empty()) return p;
  for (int t = 0; t < nterms; ++t) {
    const Word& w = words[rng.below(words.size())];
    auto [num, den] = pool[rng.below(std::size(pool))];
    Rat c(num, den);
    c.canonicalize();
    p.add_term(w, c);
  }
  return p;
}

// Random combination of basis rows with small integer coefficients.
inline SparseVec random_combination(Rng& rng, const EchelonBasis& basis,
                                    int nterms = 3) {
  SparseVec v;
  if (basis.dim() == 0) return v;
  for (int t = 0; t < nterms; ++t) {
    const SparseVec& row =
        basis.rows()[rng.below(static_cast<uint64_t>(basis.dim()))];
    v.axpy(Rat(rng.range(-3, 3)), row);
  }
  return v;
}

}  // namespace lcs
