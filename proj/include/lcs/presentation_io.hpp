#pragma once

#include <string>
#include <vector>

#include "lcs/errors.hpp"
#include "lcs/lcs.hpp"

namespace lcs {

// Parse failure with position and a caret excerpt of the offending line.
struct ParseError : UsageError {
  ParseError(const std::string& msg, int line, int col,
             const std::string& source_line);
  int line = 0, col = 0;
};

struct ParseResult {
  Presentation pres;
  // Identically-zero relations are dropped with a warning, not an error.
  std::vector<std::string> warnings;
};

// Text format:
//   generators: x:1, y:1
//   relations:
//     y y
//     [x,y] x - 2 x [x,y]
// Relations are separated by newlines or ';'.  Expressions use +, -, rational
// scalars, juxtaposition for products, parentheses, and [a,b] for
// commutators, expanded at parse time.  '#' starts a comment.
ParseResult parse_presentation(const std::string& text);

ParseResult parse_presentation_file(const std::string& path);

// Canonical text form; parse_presentation(pretty_print(p)) == p.
std::string pretty_print(const Presentation& p);

bool operator==(const GeneratorSpec& a, const GeneratorSpec& b);
bool operator==(const Presentation& a, const Presentation& b);

}  // namespace lcs
