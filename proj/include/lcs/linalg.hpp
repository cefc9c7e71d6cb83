#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

// Sparse rational vector: entries sorted by column, no stored zeros.
class SparseVec {
 public:
  struct Entry {
    uint32_t col;
    Rat val;
  };

  SparseVec() = default;

  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  uint32_t leading_col() const { return e_.front().col; }
  const Rat& leading_val() const { return e_.front().val; }
  const std::vector<Entry>& entries() const { return e_; }

  // The coefficient at col, or 0.
  Rat at(uint32_t col) const;
  const Rat* find(uint32_t col) const;

  // Append an entry; cols must be pushed in strictly increasing order.
  void push(uint32_t col, Rat val);
  // Sort by column and merge duplicate columns; drops zeros.
  void normalize();

  // *this += c * o.
  void axpy(const Rat& c, const SparseVec& o);
  void scale(const Rat& c);
  void negate();

  friend bool operator==(const SparseVec& a, const SparseVec& b);

 private:
  std::vector<Entry> e_;
};

// Reduced row echelon basis: each pivot entry is 1, pivot columns vanish in
// every other row, rows sorted by pivot.  echelonize() always returns the
// canonical RREF of the row span, so equal spans compare equal row-by-row.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(std::vector<SparseVec> rows, std::vector<uint32_t> pivots)
      : rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }
  bool has_pivot(uint32_t col) const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);

 private:
  std::vector<SparseVec> rows_;   // canonical RREF rows
  std::vector<uint32_t> pivots_;  // strictly increasing
};

// Canonical reduced row echelon basis of the span of `rows`.
// Fraction-free forward elimination (integer rows kept primitive) processing
// the minimal leading column of the active rows, pivoting on the sparsest
// candidate row; a final back-substitution/division pass produces the RREF.
EchelonBasis echelonize(std::vector<SparseVec> rows);

// v reduced against B: the canonical representative of v + span(B) supported
// off B's pivot columns.  Zero iff v is a member of span(B).
SparseVec reduce(const EchelonBasis& b, SparseVec v);
bool member(const SparseVec& v, const EchelonBasis& b);

EchelonBasis subspace_sum(const EchelonBasis& a, const EchelonBasis& b);
// Zassenhaus block-matrix intersection; ncols is the width of the column
// table both bases are indexed against.
EchelonBasis subspace_intersection(const EchelonBasis& a, const EchelonBasis& b,
                                   uint32_t ncols);
// dim(b/a) when a is contained in b; throws EngineError otherwise.
int quotient_dim(const EchelonBasis& a, const EchelonBasis& b);

// Basis of the left-kernel {c : sum_i c_i rows[i] = 0}, indexed by row number.
// ncols is the width of the column table the rows live in.
EchelonBasis row_dependencies(const std::vector<SparseVec>& rows,
                              uint32_t ncols);

// Per-degree echelon bases of subspaces of the word span.
class GradedSubspace {
 public:
  const EchelonBasis& at(int d) const;
  EchelonBasis& slot(int d) { return slices_[d]; }
  void set(int d, EchelonBasis b) { slices_[d] = std::move(b); }
  int dim(int d) const;
  bool has(int d) const { return slices_.count(d) != 0; }

 private:
  std::map<int, EchelonBasis> slices_;
};

// Runs f(0..njobs-1) on up to nthreads workers.  Each job writes only its own
// slot, so results are identical to the sequential order.
void parallel_for_jobs(int nthreads, int njobs,
                       const std::function<void(int)>& f);

}  // namespace lcs
