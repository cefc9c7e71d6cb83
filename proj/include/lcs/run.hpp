#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcs {

// Full command surface.  args excludes the program name.  Reports go to the
// --out path or to `out`; diagnostics go to `err`.  Exit codes: 0 success,
// 1 usage error, 2 internal invariant violation (including any FAIL from
// `verify`, which is a bug alarm, not a property of the input).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lcs
