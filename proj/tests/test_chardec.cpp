#include "doctest.h"
#include "lcs/chardec.hpp"
#include "lcs/errors.hpp"
#include "lcs/rng.hpp"
#include "test_helpers.hpp"

using namespace lcs;

namespace {

std::vector<Partition> partitions_up_to(int maxsize, int maxlen) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (!cur.empty()) out.push_back(cur);
    if (rem == 0 || static_cast<int>(cur.size()) == maxlen) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(maxsize, maxsize);
  // Deduplicate (the recursion above emits prefixes repeatedly).
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("schur_expand: small examples at n = 2") {
  Character s1 = schur_expand({1}, 2);
  CHECK(s1.coeffs == std::map<std::vector<int>, long>{{{1, 0}, 1}, {{0, 1}, 1}});

  Character s21 = schur_expand({2, 1}, 2);
  CHECK(s21.coeffs == std::map<std::vector<int>, long>{{{2, 1}, 1}, {{1, 2}, 1}});
  CHECK(schur_dim({2, 1}, 2) == 2);

  Character s22 = schur_expand({2, 2}, 2);
  CHECK(s22.coeffs == std::map<std::vector<int>, long>{{{2, 2}, 1}});
  CHECK(schur_dim({2, 2}, 2) == 1);
}

TEST_CASE("schur_expand validates input") {
  CHECK_THROWS_AS(schur_expand({1, 2}, 2), UsageError);
  CHECK_THROWS_AS(schur_expand({1, 1, 1}, 2), UsageError);
}

TEST_CASE("decompose round-trips single Schur expansions") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : partitions_up_to(6, n)) {
      SchurDecomp d = decompose(schur_expand(lam, n));
      REQUIRE(d.mult.size() == 1);
      CHECK(d.mult.begin()->first == lam);
      CHECK(d.mult.begin()->second == 1);
    }
  }
}

TEST_CASE("decompose is additive and handles random nonnegative combinations") {
  Rng rng(83);
  for (int n = 2; n <= 3; ++n) {
    auto parts = partitions_up_to(6, n);
    for (int trial = 0; trial < 10; ++trial) {
      std::map<Partition, long> want;
      Character sum;
      sum.n = n;
      for (int pick = 0; pick < 3; ++pick) {
        const Partition& lam = parts[rng.below(parts.size())];
        long mult = rng.range(1, 3);
        want[lam] += mult;
        Character c = schur_expand(lam, n);
        for (const auto& [e, m] : c.coeffs) sum.add(e, m * mult);
      }
      SchurDecomp d = decompose(sum);
      CHECK(d.mult == want);
      // Dimension accounting.
      long total = 0;
      for (const auto& [lam, m] : d.mult) total += m * schur_dim(lam, n);
      CHECK(total == sum.total());
    }
  }
}

TEST_CASE("decompose rejects non-characters") {
  Character bad;
  bad.n = 2;
  bad.add({0, 1}, 1);  // not symmetric: lex-greatest exponent not a partition
  CHECK_THROWS_AS(decompose(bad), UsageError);

  Character neg;
  neg.n = 2;
  neg.add({1, 0}, -1);
  CHECK_THROWS_AS(decompose(neg), UsageError);
}

TEST_CASE("character_of the standard fibers of A_2") {
  EngineOptions o;
  o.kmax = 4;
  o.maxdeg = 6;
  Filtration f(helpers::free_algebra(2), o);
  f.compute();

  StandardFiber fb3 = standard_fiber(f, 3);
  Character c3 = character_of(fb3, 2);
  CHECK(c3.coeffs == std::map<std::vector<int>, long>{
                         {{2, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}});
  SchurDecomp d3 = decompose(c3);
  CHECK(d3.mult == std::map<Partition, long>{{{2, 1}, 1}, {{2, 2}, 1}});

  StandardFiber fb2 = standard_fiber(f, 2);
  Character c2 = character_of(fb2, 2);
  CHECK(c2.coeffs == std::map<std::vector<int>, long>{{{1, 1}, 1}});

  // Empty fiber gives the empty character.
  StandardFiber empty;
  CHECK(character_of(empty, 2).is_zero());
}

TEST_CASE("character_of flags asymmetric weight data") {
  StandardFiber fake;
  fake.k = 2;
  fake.maxdeg = 3;
  FiberVector v;
  v.weight = {2, 0};
  fake.perdegree[2].push_back(v);
  fake.total_dim = 1;
  CHECK_THROWS_AS(character_of(fake, 2), EngineError);
}

TEST_CASE("partition degree bound") {
  CHECK(partition_degree_bound(3, 2) == 4);
  CHECK(partition_degree_bound(5, 3) == 8);
  CHECK(partition_degree_bound(4, 2) == 6);
  CHECK(partition_degree_bound(4, 3) == 6);
  CHECK(partition_degree_bound(4, 4) == 8);
}
