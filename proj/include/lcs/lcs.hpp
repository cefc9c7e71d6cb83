#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcs/wordtables.hpp"

namespace lcs {

// Generators with positive integer degrees plus homogeneous noncommutative
// relations; defines A as the quotient of the free algebra.
struct Presentation {
  std::vector<GeneratorSpec> generators;
  std::vector<NCPoly> relations;

  bool is_free() const { return relations.empty(); }
  int ngens() const { return static_cast<int>(generators.size()); }
  // Throws UsageError on degree-0 generators, duplicate names, or
  // inhomogeneous / degree-0 / zero relations.
  void validate() const;
};

struct EngineOptions {
  int kmax = 3;    // N_k and B_k reported for k <= kmax
  int maxdeg = 6;  // truncation degree D; slices are exact for d <= D
  int threads = 1;
  std::size_t word_guard = 2'000'000;
};

struct DimRow {
  int k, d;
  int dimL, dimM, dimB, dimN;
};

struct DimTable {
  int kmax = 0, maxdeg = 0;
  std::vector<DimRow> rows;  // (k, d) ascending, d inner
};

struct ContainmentCheck {
  std::string claim;
  int maxdeg = 0;
  long checked = 0;
  bool passed = true;
};

struct ContainmentReport {
  std::vector<ContainmentCheck> checks;
  bool all_passed() const;
};

// Degree-truncated lower central series data for one presentation:
// I(d), L_k(d), M_k(d) for d <= maxdeg and k <= kmax+1.
//
// The quotient's series is computed as the image of the free-algebra series
// (the series is functorial under surjections): every generated vector is
// reduced against the ideal slice immediately, so all spans live in the
// canonical complement of I(d) and dimensions are quotient dimensions.
//
// Truncation is exact below maxdeg: L_k(d) is generated by brackets [w, v]
// with deg w >= 1 and v in L_{k-1}(d - deg w), and M_k(d) by L_k(d) together
// with x_i * M_k(d - deg x_i), so every slice depends only on strictly lower
// degrees of previously completed families.
class Filtration {
 public:
  Filtration(Presentation pres, EngineOptions opt);

  void compute();
  bool computed() const { return computed_; }

  const Presentation& presentation() const { return pres_; }
  const WordTables& words() const { return *tables_; }
  const EngineOptions& options() const { return opt_; }
  int kmax() const { return opt_.kmax; }
  int maxdeg() const { return opt_.maxdeg; }

  const EchelonBasis& ideal_slice(int d) const { return ideal_.at(d); }
  // k in [1, kmax+1].
  const EchelonBasis& lseries(int k, int d) const;
  const EchelonBasis& mseries(int k, int d) const;

  int dim_algebra(int d) const;  // dim A(d) in the quotient
  int dim_l(int k, int d) const { return lseries(k, d).dim(); }
  int dim_m(int k, int d) const { return mseries(k, d).dim(); }
  int dim_n(int k, int d) const;  // k <= kmax
  int dim_b(int k, int d) const;  // k <= kmax

  // Canonical complement basis of M_{k+1}(d) in M_k(d): representatives of
  // N_k(d).  Cached; not safe to call concurrently.
  const EchelonBasis& nk_complement(int k, int d);

  SparseVec reduce_ideal(SparseVec v, int d) const;
  // Representative of the class of v in N_k(d): reduce mod I, then mod M_{k+1}.
  SparseVec nk_class(SparseVec v, int k, int d) const;

  // Assembles the four dimension families, verifying the chain containments
  // M_{k+1}(d) in M_k(d) and L_{k+1}(d) in L_k(d) row by row.  A failure
  // throws EngineError: the containments are theorems, so it means a bug.
  DimTable dim_table();

  // Canonical RREF of the row span, split by multidegree block in the free
  // case so independent blocks eliminate independently (and in parallel).
  EchelonBasis echelonize_graded(std::vector<SparseVec> rows, int d) const;

  // Column indices of words representing a basis of A(d): all words when
  // free, the non-pivot columns of I(d) otherwise.
  const std::vector<uint32_t>& word_reps(int d) const;

 private:
  void build_ideal();
  EchelonBasis complement_of_ideal(int d) const;
  EchelonBasis build_l(int k, int d) const;
  EchelonBasis build_m(int k, int d) const;

  Presentation pres_;
  EngineOptions opt_;
  std::unique_ptr<WordTables> tables_;
  GradedSubspace ideal_;
  std::vector<GradedSubspace> l_, m_;  // index k, 1..kmax+1
  std::map<std::pair<int, int>, EchelonBasis> nk_cache_;
  mutable std::map<int, std::vector<uint32_t>> reps_cache_;
  bool computed_ = false;
};

// Brute-force verification of the containment lemmas over all spanning
// vectors up to total degree maxdeg.  Requires kmax >= 3.  A FAIL entry is a
// correctness alarm for the engine, never a property of the input.
ContainmentReport verify_containments(Filtration& f, int maxdeg);

}  // namespace lcs
