#include "lcs/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "lcs/errors.hpp"

namespace lcs {

Rat SparseVec::at(uint32_t col) const {
  const Rat* p = find(col);
  return p ? *p : Rat(0);
}

const Rat* SparseVec::find(uint32_t col) const {
  auto it = std::lower_bound(
      e_.begin(), e_.end(), col,
      [](const Entry& a, uint32_t c) { return a.col < c; });
  if (it != e_.end() && it->col == col) return &it->val;
  return nullptr;
}

void SparseVec::push(uint32_t col, Rat val) {
  if (val == 0) return;
  e_.push_back(Entry{col, std::move(val)});
}

void SparseVec::normalize() {
  std::sort(e_.begin(), e_.end(),
            [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::vector<Entry> out;
  out.reserve(e_.size());
  for (auto& en : e_) {
    if (!out.empty() && out.back().col == en.col) {
      out.back().val += en.val;
      if (out.back().val == 0) out.pop_back();
    } else {
      out.push_back(std::move(en));
    }
  }
  e_ = std::move(out);
}

void SparseVec::axpy(const Rat& c, const SparseVec& o) {
  if (c == 0 || o.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].col < o.e_[j].col) {
      out.push_back(std::move(e_[i++]));
    } else if (e_[i].col > o.e_[j].col) {
      out.push_back(Entry{o.e_[j].col, c * o.e_[j].val});
      ++j;
    } else {
      Rat v = std::move(e_[i].val);
      v += c * o.e_[j].val;
      if (v != 0) out.push_back(Entry{e_[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  while (i < e_.size()) out.push_back(std::move(e_[i++]));
  while (j < o.e_.size()) {
    out.push_back(Entry{o.e_[j].col, c * o.e_[j].val});
    ++j;
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Rat& c) {
  if (c == 0) {
    e_.clear();
    return;
  }
  for (auto& en : e_) en.val *= c;
}

void SparseVec::negate() {
  for (auto& en : e_) en.val = -en.val;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.e_.size() != b.e_.size()) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i].col != b.e_[i].col || a.e_[i].val != b.e_[i].val) return false;
  return true;
}

bool EchelonBasis::has_pivot(uint32_t col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
  return a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

namespace {

// Primitive integer row: sorted columns, gcd of entries 1, leading entry > 0.
struct IRow {
  std::vector<std::pair<uint32_t, Int>> e;

  bool empty() const { return e.empty(); }
  uint32_t lead() const { return e.front().first; }

  void make_primitive() {
    if (e.empty()) return;
    Int g = 0;
    for (auto& [c, v] : e) {
      g = gcd(g, v);
      if (g == 1) break;
    }
    bool flip = e.front().second < 0;
    if (g != 1 || flip) {
      if (flip) g = -g;
      for (auto& [c, v] : e) v /= g;
    }
  }

  std::string key() const {
    std::string s;
    for (const auto& [c, v] : e) {
      s += std::to_string(c);
      s += ':';
      s += v.get_str();
      s += ';';
    }
    return s;
  }
};

IRow to_irow(const SparseVec& v) {
  IRow r;
  if (v.empty()) return r;
  Int l = 1;
  for (const auto& en : v.entries()) l = lcm(l, en.val.get_den());
  r.e.reserve(v.nnz());
  for (const auto& en : v.entries())
    r.e.emplace_back(en.col, en.val.get_num() * (l / en.val.get_den()));
  r.make_primitive();
  return r;
}

// out = (pa/g)*a - (pb/g)*b with g = gcd(pa, pb); both rows lead at the same
// column, which cancels.
IRow combine(const IRow& a, const Int& pa, const IRow& b, const Int& pb) {
  Int g = gcd(pa, pb);
  Int ca = pa / g, cb = pb / g;
  IRow out;
  out.e.reserve(a.e.size() + b.e.size());
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first) {
      out.e.emplace_back(a.e[i].first, ca * a.e[i].second);
      ++i;
    } else if (a.e[i].first > b.e[j].first) {
      out.e.emplace_back(b.e[j].first, -cb * b.e[j].second);
      ++j;
    } else {
      Int v = ca * a.e[i].second - cb * b.e[j].second;
      if (v != 0) out.e.emplace_back(a.e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < a.e.size(); ++i) out.e.emplace_back(a.e[i].first, ca * a.e[i].second);
  for (; j < b.e.size(); ++j) out.e.emplace_back(b.e[j].first, -cb * b.e[j].second);
  out.make_primitive();
  return out;
}

}  // namespace

EchelonBasis echelonize(std::vector<SparseVec> rows) {
  // Fraction-free forward phase on primitive integer rows, bucketed by
  // leading column; duplicates are dropped up front.
  std::map<uint32_t, std::vector<IRow>> buckets;
  {
    std::unordered_set<std::string> seen;
    for (auto& v : rows) {
      IRow r = to_irow(v);
      v = SparseVec();
      if (r.empty()) continue;
      if (!seen.insert(r.key()).second) continue;
      uint32_t c = r.lead();
      buckets[c].push_back(std::move(r));
    }
  }

  std::vector<std::pair<uint32_t, IRow>> pivot_rows;
  while (!buckets.empty()) {
    auto it = buckets.begin();
    uint32_t c = it->first;
    std::vector<IRow> cand = std::move(it->second);
    buckets.erase(it);
    // Sparsest candidate as pivot; key() as deterministic tie-break.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cand.size(); ++i) {
      if (cand[i].e.size() < cand[best].e.size() ||
          (cand[i].e.size() == cand[best].e.size() &&
           cand[i].key() < cand[best].key()))
        best = i;
    }
    IRow piv = std::move(cand[best]);
    const Int& pv = piv.e.front().second;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (i == best) continue;
      IRow r = combine(cand[i], pv, piv, cand[i].e.front().second);
      if (!r.empty()) buckets[r.lead()].push_back(std::move(r));
    }
    pivot_rows.emplace_back(c, std::move(piv));
  }

  // Division pass: normalize pivots to 1, then clear pivot columns from the
  // other rows, working upward so every subtracted row is already reduced.
  std::sort(pivot_rows.begin(), pivot_rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<uint32_t> pivots;
  std::vector<SparseVec> out(pivot_rows.size());
  pivots.reserve(pivot_rows.size());
  for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
    pivots.push_back(pivot_rows[i].first);
    SparseVec v;
    const Int& pv = pivot_rows[i].second.e.front().second;
    for (auto& [c, val] : pivot_rows[i].second.e) {
      Rat q(val, pv);
      q.canonicalize();
      v.push(c, std::move(q));
    }
    out[i] = std::move(v);
  }
  for (std::size_t ii = out.size(); ii-- > 0;) {
    // Collect hits once: reduced rows carry no other pivot columns, so
    // subtracting them introduces no new hits.
    std::vector<std::pair<std::size_t, Rat>> hits;
    for (const auto& en : out[ii].entries()) {
      if (en.col == pivots[ii]) continue;
      auto pit = std::lower_bound(pivots.begin(), pivots.end(), en.col);
      if (pit != pivots.end() && *pit == en.col)
        hits.emplace_back(static_cast<std::size_t>(pit - pivots.begin()),
                          en.val);
    }
    for (auto& [idx, c] : hits) out[ii].axpy(-c, out[idx]);
  }
  return EchelonBasis(std::move(out), std::move(pivots));
}

SparseVec reduce(const EchelonBasis& b, SparseVec v) {
  if (b.dim() == 0 || v.empty()) return v;
  const auto& pivots = b.pivots();
  std::vector<std::pair<std::size_t, Rat>> hits;
  for (const auto& en : v.entries()) {
    auto pit = std::lower_bound(pivots.begin(), pivots.end(), en.col);
    if (pit != pivots.end() && *pit == en.col)
      hits.emplace_back(static_cast<std::size_t>(pit - pivots.begin()), en.val);
  }
  for (auto& [idx, c] : hits) v.axpy(-c, b.rows()[idx]);
  return v;
}

bool member(const SparseVec& v, const EchelonBasis& b) {
  return reduce(b, v).empty();
}

EchelonBasis subspace_sum(const EchelonBasis& a, const EchelonBasis& b) {
  std::vector<SparseVec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return echelonize(std::move(rows));
}

EchelonBasis subspace_intersection(const EchelonBasis& a, const EchelonBasis& b,
                                   uint32_t ncols) {
  std::vector<SparseVec> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& r : a.rows()) {
    SparseVec v;
    for (const auto& en : r.entries()) v.push(en.col, en.val);
    for (const auto& en : r.entries()) v.push(en.col + ncols, en.val);
    rows.push_back(std::move(v));
  }
  for (const auto& r : b.rows()) rows.push_back(r);
  EchelonBasis full = echelonize(std::move(rows));
  // Rows supported entirely in the shadow block span the intersection.
  std::vector<SparseVec> irows;
  std::vector<uint32_t> ipivots;
  for (std::size_t i = 0; i < full.rows().size(); ++i) {
    if (full.pivots()[i] < ncols) continue;
    SparseVec v;
    for (const auto& en : full.rows()[i].entries()) v.push(en.col - ncols, en.val);
    irows.push_back(std::move(v));
    ipivots.push_back(full.pivots()[i] - ncols);
  }
  return EchelonBasis(std::move(irows), std::move(ipivots));
}

int quotient_dim(const EchelonBasis& a, const EchelonBasis& b) {
  for (const auto& r : a.rows())
    if (!member(r, b))
      throw EngineError("quotient_dim: inner subspace not contained in outer");
  return b.dim() - a.dim();
}

EchelonBasis row_dependencies(const std::vector<SparseVec>& rows,
                              uint32_t ncols) {
  std::vector<SparseVec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec v = rows[i];
    v.push(ncols + static_cast<uint32_t>(i), Rat(1));
    aug.push_back(std::move(v));
  }
  EchelonBasis full = echelonize(std::move(aug));
  std::vector<SparseVec> drows;
  std::vector<uint32_t> dpivots;
  for (std::size_t i = 0; i < full.rows().size(); ++i) {
    if (full.pivots()[i] < ncols) continue;
    SparseVec v;
    for (const auto& en : full.rows()[i].entries()) v.push(en.col - ncols, en.val);
    drows.push_back(std::move(v));
    dpivots.push_back(full.pivots()[i] - ncols);
  }
  return EchelonBasis(std::move(drows), std::move(dpivots));
}

const EchelonBasis& GradedSubspace::at(int d) const {
  static const EchelonBasis empty;
  auto it = slices_.find(d);
  return it == slices_.end() ? empty : it->second;
}

int GradedSubspace::dim(int d) const {
  auto it = slices_.find(d);
  return it == slices_.end() ? 0 : it->second.dim();
}

void parallel_for_jobs(int nthreads, int njobs,
                       const std::function<void(int)>& f) {
  if (njobs <= 0) return;
  nthreads = std::min(nthreads, njobs);
  if (nthreads <= 1) {
    for (int i = 0; i < njobs; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(nthreads));
  std::exception_ptr err;
  std::mutex err_m;
  for (int t = 0; t < nthreads; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= njobs) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_m);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace lcs
