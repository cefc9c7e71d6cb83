#include "lcs/presentation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lcs {

namespace {

std::string caret_excerpt(const std::string& msg, int line, int col,
                          const std::string& source_line) {
  std::ostringstream os;
  os << msg << "\n  --> line " << line << ", column " << col << "\n  "
     << source_line << "\n  " << std::string(static_cast<std::size_t>(col > 0 ? col - 1 : 0), ' ')
     << "^";
  return os.str();
}

enum class Tok { Ident, Number, Symbol, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { split_lines(); }

  const std::string& line_text(int line) const {
    static const std::string empty;
    std::size_t i = static_cast<std::size_t>(line - 1);
    return i < lines_.size() ? lines_[i] : empty;
  }

  std::vector<Token> tokens() {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '#') {  // comment to end of line
        while (i < text_.size() && text_[i] != '\n') {
          advance(text_[i]);
          ++i;
        }
        continue;
      }
      if (c == '\n') {
        out.push_back({Tok::Newline, "\n", line, col});
        advance(c);
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(c);
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Token t{Tok::Ident, "", line, col};
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '_')) {
          t.text += text_[i];
          advance(text_[i]);
          ++i;
        }
        out.push_back(std::move(t));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t{Tok::Number, "", line, col};
        while (i < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i]))) {
          t.text += text_[i];
          advance(text_[i]);
          ++i;
        }
        out.push_back(std::move(t));
        continue;
      }
      static const std::string symbols = "+-*/:,;()[]";
      if (symbols.find(c) != std::string::npos) {
        out.push_back({Tok::Symbol, std::string(1, c), line, col});
        advance(c);
        ++i;
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "'",
                       line, col, line_text(line));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
  }

 private:
  void split_lines() {
    std::string cur;
    for (char c : text_) {
      if (c == '\n') {
        lines_.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines_.push_back(cur);
  }

  const std::string& text_;
  std::vector<std::string> lines_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Lexer& lx)
      : toks_(std::move(toks)), lx_(lx) {}

  ParseResult parse() {
    ParseResult res;
    skip_newlines();
    expect_keyword("generators");
    expect_symbol(":");
    parse_generators(res.pres);
    skip_newlines();
    if (peek().kind == Tok::Ident && peek().text == "relations") {
      next();
      expect_symbol(":");
      parse_relations(res);
    }
    skip_newlines();
    if (peek().kind != Tok::End) fail("unexpected trailing input", peek());
    res.pres.validate();
    return res;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col, lx_.line_text(t.line));
  }

  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + static_cast<std::size_t>(ahead);
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  void expect_keyword(const std::string& kw) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != kw)
      fail("expected '" + kw + ":'", t);
    next();
  }

  void expect_symbol(const std::string& s) {
    const Token& t = peek();
    if (t.kind != Tok::Symbol || t.text != s) fail("expected '" + s + "'", t);
    next();
  }

  bool at_symbol(const std::string& s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  void parse_generators(Presentation& p) {
    // name:degree pairs separated by commas or whitespace, until the
    // 'relations' keyword or end of input.
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      if (peek().kind == Tok::Ident && peek().text == "relations") break;
      if (at_symbol(",")) {
        next();
        continue;
      }
      const Token& name = peek();
      if (name.kind != Tok::Ident) fail("expected generator name", name);
      if (name.text == "generators") fail("duplicate generators block", name);
      next();
      expect_symbol(":");
      const Token& deg = peek();
      if (deg.kind != Tok::Number) fail("expected generator degree", deg);
      next();
      long d = std::stol(deg.text);
      if (d < 1)
        fail("generator degree must be a positive integer", deg);
      p.generators.push_back({name.text, static_cast<int>(d)});
    }
    if (p.generators.empty())
      fail("expected at least one generator", peek());
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      gen_index_.emplace(p.generators[i].name, static_cast<int>(i));
    if (gen_index_.size() != p.generators.size())
      fail("duplicate generator name", peek());
  }

  void parse_relations(ParseResult& res) {
    int count = 0;
    for (;;) {
      skip_newlines();
      while (at_symbol(";")) {
        next();
        skip_newlines();
      }
      if (peek().kind == Tok::End) break;
      const Token& start = peek();
      NCPoly rel = parse_expr(res.pres);
      ++count;
      if (!at_symbol(";") && peek().kind != Tok::Newline &&
          peek().kind != Tok::End)
        fail("expected end of relation", peek());
      if (rel.is_zero()) {
        res.warnings.push_back(
            "relation " + std::to_string(count) +
            " expands to zero and was dropped (line " +
            std::to_string(start.line) + ")");
        continue;
      }
      auto deg = rel.homogeneous_degree();
      if (!deg) {
        int d1 = -1, d2 = -1;
        for (const auto& [w, c] : rel.terms()) {
          if (d1 < 0) d1 = w.degree();
          else if (w.degree() != d1) {
            d2 = w.degree();
            break;
          }
        }
        fail("inhomogeneous relation: mixes degrees " + std::to_string(d1) +
                 " and " + std::to_string(d2),
             start);
      }
      if (*deg < 1) fail("relation has degree 0", start);
      res.pres.relations.push_back(std::move(rel));
    }
  }

  // expr := ['-'] term (('+'|'-') term)*
  NCPoly parse_expr(const Presentation& p) {
    bool neg = false;
    if (at_symbol("-")) {
      next();
      neg = true;
    }
    NCPoly acc = parse_term(p);
    if (neg) acc *= Rat(-1);
    for (;;) {
      if (at_symbol("+")) {
        next();
        acc += parse_term(p);
      } else if (at_symbol("-")) {
        next();
        acc -= parse_term(p);
      } else {
        return acc;
      }
    }
  }

  // term := factor+ with juxtaposition as the product
  NCPoly parse_term(const Presentation& p) {
    NCPoly acc = parse_factor(p);
    while (starts_factor()) acc = mul(acc, parse_factor(p));
    return acc;
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Tok::Number) return true;
    if (t.kind == Tok::Ident) return t.text != "relations" && t.text != "generators";
    return at_symbol("(") || at_symbol("[");
  }

  // factor := rational | generator | '(' expr ')' | '[' expr ',' expr ']'
  NCPoly parse_factor(const Presentation& p) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      Int num(t.text);
      if (at_symbol("/")) {
        next();
        const Token& dt = peek();
        if (dt.kind != Tok::Number) fail("expected denominator", dt);
        next();
        Int den(dt.text);
        if (den == 0) fail("zero denominator", dt);
        Rat r(num, den);
        r.canonicalize();
        return NCPoly::scalar(r);
      }
      return NCPoly::scalar(Rat(num));
    }
    if (t.kind == Tok::Ident) {
      auto it = gen_index_.find(t.text);
      if (it == gen_index_.end())
        fail("unknown generator '" + t.text + "'", t);
      next();
      return NCPoly(Word::generator(p.generators, it->second));
    }
    if (at_symbol("(")) {
      next();
      NCPoly e = parse_expr(p);
      expect_symbol(")");
      return e;
    }
    if (at_symbol("[")) {
      next();
      NCPoly a = parse_expr(p);
      expect_symbol(",");
      NCPoly b = parse_expr(p);
      expect_symbol("]");
      return commutator(a, b);
    }
    fail("expected a factor", t);
  }

  std::vector<Token> toks_;
  const Lexer& lx_;
  std::size_t pos_ = 0;
  std::map<std::string, int> gen_index_;
};

}  // namespace

ParseError::ParseError(const std::string& msg, int line_, int col_,
                       const std::string& source_line)
    : UsageError(caret_excerpt(msg, line_, col_, source_line)),
      line(line_),
      col(col_) {}

ParseResult parse_presentation(const std::string& text) {
  Lexer lx(text);
  Parser p(lx.tokens(), lx);
  return p.parse();
}

ParseResult parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open presentation file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string pretty_print(const Presentation& p) {
  std::ostringstream os;
  os << "generators: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i].name << ":" << p.generators[i].degree;
  }
  os << "\n";
  if (!p.relations.empty()) {
    os << "relations:\n";
    for (const auto& r : p.relations)
      os << "  " << r.str(p.generators) << "\n";
  }
  return os.str();
}

bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
  return a.name == b.name && a.degree == b.degree;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.generators == b.generators && a.relations == b.relations;
}

}  // namespace lcs
