#pragma once

#include <gmpxx.h>

#include <string>

namespace lcs {

// All coefficient arithmetic is exact; there is no floating point anywhere in
// the engine.  Ranks of these matrices are the output, so rounding is fatal.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace lcs
