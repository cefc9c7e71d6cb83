#include <algorithm>

#include "doctest.h"
#include "lcs/errors.hpp"
#include "lcs/linalg.hpp"
#include "lcs/rng.hpp"
#include "oracles.hpp"

using namespace lcs;

namespace {

SparseVec vec(std::initializer_list<std::pair<uint32_t, long>> entries) {
  SparseVec v;
  for (auto [c, val] : entries) v.push(c, Rat(val));
  return v;
}

}  // namespace

TEST_CASE("echelonize: examples") {
  CHECK(echelonize({}).dim() == 0);
  EchelonBasis b = echelonize({vec({{0, 1}}), vec({{1, 1}}), vec({{0, 1}, {1, 1}})});
  CHECK(b.dim() == 2);
  CHECK(b.pivots() == std::vector<uint32_t>{0, 1});
}

TEST_CASE("echelonize rank matches the dense Bareiss oracle") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    auto rows = oracle::random_sparse_rows(rng, 30, 40, 6);
    EchelonBasis b = echelonize(rows);
    CHECK(b.dim() == oracle::rank_of(rows, 40));
  }
}

TEST_CASE("echelonize output is canonical: invariant under scaling and permutation") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto rows = oracle::random_sparse_rows(rng, 12, 15, 5);
    EchelonBasis base = echelonize(rows);
    // Scale each row and shuffle deterministically.
    std::vector<SparseVec> mixed = rows;
    for (auto& r : mixed) {
      long num = rng.range(1, 5);
      long den = rng.range(1, 5);
      Rat c(rng.below(2) ? num : -num, den);
      c.canonicalize();
      r.scale(c);
    }
    for (std::size_t i = mixed.size(); i > 1; --i)
      std::swap(mixed[i - 1], mixed[rng.below(i)]);
    EchelonBasis again = echelonize(mixed);
    CHECK(base == again);
  }
}

TEST_CASE("member: examples and rank agreement") {
  EchelonBasis b = echelonize({vec({{0, 1}, {2, 3}}), vec({{1, 2}, {2, 1}})});

  SparseVec two_rows;
  two_rows.axpy(Rat(1), b.rows()[0]);
  two_rows.axpy(Rat(1), b.rows()[1]);
  CHECK(member(two_rows, b));

  CHECK(!member(vec({{3, 1}}), b));
  CHECK(!reduce(b, vec({{3, 1}})).empty());

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto rows = oracle::random_sparse_rows(rng, 8, 12, 4);
    EchelonBasis basis = echelonize(rows);
    SparseVec v = oracle::random_sparse_rows(rng, 1, 12, 4)[0];
    std::vector<SparseVec> with = rows;
    with.push_back(v);
    bool in_span = (echelonize(with).dim() == basis.dim());
    CHECK(member(v, basis) == in_span);
  }

  // Every input row is a member of its own span.
  auto rows = oracle::random_sparse_rows(rng, 10, 12, 4);
  EchelonBasis basis = echelonize(rows);
  for (const auto& r : rows) CHECK(member(r, basis));
}

TEST_CASE("subspace sum and intersection") {
  EchelonBasis b1 = echelonize({vec({{0, 1}}), vec({{1, 1}})});
  CHECK(subspace_sum(b1, b1) == b1);
  CHECK(subspace_intersection(b1, b1, 4) == b1);

  EchelonBasis b2 = echelonize({vec({{2, 1}}), vec({{3, 1}})});
  CHECK(subspace_intersection(b1, b2, 4).dim() == 0);
  CHECK(subspace_sum(b1, b2).dim() == 4);

  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    EchelonBasis u = echelonize(oracle::random_sparse_rows(rng, 6, 10, 4));
    EchelonBasis w = echelonize(oracle::random_sparse_rows(rng, 6, 10, 4));
    EchelonBasis s = subspace_sum(u, w);
    EchelonBasis i = subspace_intersection(u, w, 10);
    CHECK(u.dim() + w.dim() == s.dim() + i.dim());
    for (const auto& r : i.rows()) {
      CHECK(member(r, u));
      CHECK(member(r, w));
    }
  }
}

TEST_CASE("quotient dimension requires containment") {
  EchelonBasis big = echelonize({vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})});
  EchelonBasis small = echelonize({vec({{0, 1}, {1, 1}})});
  CHECK(quotient_dim(small, big) == 2);
  EchelonBasis outside = echelonize({vec({{3, 1}})});
  CHECK_THROWS_AS(quotient_dim(outside, big), EngineError);
}

TEST_CASE("row dependencies recover the left kernel") {
  std::vector<SparseVec> rows = {vec({{0, 1}, {1, 2}}), vec({{0, 2}, {1, 4}}),
                                 vec({{2, 1}})};
  EchelonBasis dep = row_dependencies(rows, 3);
  REQUIRE(dep.dim() == 1);
  // The dependency combination must annihilate the rows.
  SparseVec combo;
  for (const auto& e : dep.rows()[0].entries()) {
    SparseVec scaled = rows[e.col];
    scaled.scale(e.val);
    combo.axpy(Rat(1), scaled);
  }
  CHECK(combo.empty());
}
