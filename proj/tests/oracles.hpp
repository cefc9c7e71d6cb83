#pragma once

// Independent oracles used by the tests.  Each one is a separate code path
// from the module it checks: dense fraction-free elimination instead of the
// sparse engine, direct enumeration instead of incremental generation.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "lcs/freealg.hpp"
#include "lcs/linalg.hpp"
#include "lcs/rng.hpp"
#include "lcs/wordtables.hpp"

namespace oracle {

using lcs::Int;
using lcs::Rat;

// Dense Bareiss (fraction-free) rank with row pivoting and column skipping.
inline int bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = num / prev;  // exact in the Bareiss sequence
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

inline std::vector<std::vector<Int>> to_dense(
    const std::vector<lcs::SparseVec>& rows, uint32_t ncols) {
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  for (const auto& v : rows) {
    Int l = 1;
    for (const auto& e : v.entries()) l = lcm(l, e.val.get_den());
    std::vector<Int> dense(ncols, Int(0));
    for (const auto& e : v.entries())
      dense[e.col] = e.val.get_num() * (l / e.val.get_den());
    m.push_back(std::move(dense));
  }
  return m;
}

inline int rank_of(const std::vector<lcs::SparseVec>& rows, uint32_t ncols) {
  return bareiss_rank(to_dense(rows, ncols));
}

// Number of words of total degree d: compositions of d into generator
// degrees, counted by dynamic programming.
inline long long word_count(const std::vector<lcs::GeneratorSpec>& gens,
                            int d) {
  std::vector<long long> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int s = 1; s <= d; ++s)
    for (const auto& g : gens)
      if (s - g.degree >= 0) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - g.degree)];
  return ways[static_cast<std::size_t>(d)];
}

// Number of commutative monomials of total degree d, excluding multiples of
// the given monomial generators (exponent vectors).  Handles weighted
// degrees.  Used as the N_1 = A_ab oracle.
inline long long monomial_count(const std::vector<lcs::GeneratorSpec>& gens,
                                int d,
                                const std::vector<std::vector<int>>& avoid = {}) {
  int n = static_cast<int>(gens.size());
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  long long count = 0;
  auto blocked = [&]() {
    for (const auto& a : avoid) {
      bool divides = true;
      for (int i = 0; i < n; ++i)
        if (e[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i)]) divides = false;
      if (divides) return true;
    }
    return false;
  };
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n) {
      if (rem == 0 && !blocked()) ++count;
      return;
    }
    for (int v = 0; v * gens[static_cast<std::size_t>(i)].degree <= rem; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      rec(i + 1, rem - v * gens[static_cast<std::size_t>(i)].degree);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, d);
  return count;
}

// Permutation sign by bubble-sort swap counting.
inline int permutation_sign(std::vector<int> p) {
  int swaps = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = 0; j + 1 < p.size() - i; ++j)
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

// All raw k-fold bracket vectors [w1,[w2,[...,wk]...]] of total degree d; no
// intermediate reduction, so the span comes from the full bracket-shape
// enumeration rather than the engine's incremental generation.
inline void brute_bracket_polys(std::span<const lcs::GeneratorSpec> gens,
                                int k, int d, std::vector<lcs::NCPoly>& out) {
  if (k == 1) {
    for (const auto& w : lcs::enumerate_words(gens, d))
      out.emplace_back(w);
    return;
  }
  for (int j = 1; j < d; ++j) {
    std::vector<lcs::NCPoly> inner;
    brute_bracket_polys(gens, k - 1, d - j, inner);
    for (const auto& w : lcs::enumerate_words(gens, j))
      for (const auto& v : inner) {
        lcs::NCPoly b = commutator(lcs::NCPoly(w), v);
        if (!b.is_zero()) out.push_back(std::move(b));
      }
  }
}

inline int brute_lk_rank(const lcs::WordTables& wt, int k, int d) {
  std::vector<lcs::NCPoly> polys;
  brute_bracket_polys(wt.gens(), k, d, polys);
  std::vector<lcs::SparseVec> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(wt.from_poly(p, d));
  return rank_of(rows, wt.at(d).size());
}

// Random sparse rational matrix rows.
inline std::vector<lcs::SparseVec> random_sparse_rows(lcs::Rng& rng, int nrows,
                                                      uint32_t ncols,
                                                      int max_nnz) {
  std::vector<lcs::SparseVec> rows;
  rows.reserve(static_cast<std::size_t>(nrows));
  for (int i = 0; i < nrows; ++i) {
    lcs::SparseVec v;
    int nnz = static_cast<int>(rng.range(0, max_nnz));
    for (int t = 0; t < nnz; ++t) {
      long num = rng.range(-9, 9);
      long den = rng.range(1, 4);
      if (num == 0) continue;
      Rat c(num, den);
      c.canonicalize();
      lcs::SparseVec one;
      one.push(static_cast<uint32_t>(rng.below(ncols)), c);
      v.axpy(Rat(1), one);
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace oracle
