#pragma once

#include <cstdint>

namespace lcs {

// Small deterministic generator (splitmix64).  Used for property sampling in
// the `verify` subcommand and in tests; output is platform-independent so a
// fixed seed gives byte-identical reports everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.  Simple modulo; bias is irrelevant here.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace lcs
