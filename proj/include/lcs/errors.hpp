#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

// User-facing problem: bad input file, out-of-range flag, window too large.
// The CLI maps this to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed invariant failed (chain containment, a lemma containment, a
// residue that must lie in a span but does not).  These are theorems at the
// degrees we compute, so a throw means the engine itself is wrong.  The CLI
// maps this to exit code 2.
struct EngineError : std::logic_error {
  explicit EngineError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lcs
