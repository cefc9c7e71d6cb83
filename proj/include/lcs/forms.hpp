#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lcs/freealg.hpp"
#include "lcs/linalg.hpp"

namespace lcs {

// Monomial differential form x^exps dx_{wedge} on n coordinates; wedge is a
// strictly increasing index set.  Degree = |exps| + |wedge| (coordinates all
// have degree 1 here).
struct FormTerm {
  std::vector<int> exps;
  std::vector<int> wedge;

  int degree() const;
  friend auto operator<=>(const FormTerm&, const FormTerm&) = default;
};

// Rational combination of form terms.  Even wedge parity throughout the
// public algebra; odd intermediates appear inside the Fedosov formula.
class Form {
 public:
  Form() = default;
  explicit Form(int nvars) : n_(nvars) {}
  static Form one(int nvars);
  static Form coordinate(int nvars, int i);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormTerm, Rat>& terms() const { return terms_; }
  void add_term(FormTerm t, const Rat& c);
  std::optional<int> homogeneous_degree() const;
  // 0 for even-only, 1 for odd-only, nullopt for mixed or zero.
  std::optional<int> parity() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rat& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  std::map<FormTerm, Rat> terms_;
};

// Graded-commutative exterior product; repeated wedge index kills the term.
Form wedge(const Form& a, const Form& b);
// Exterior derivative; d(d(f)) = 0.
Form dee(const Form& a);
// The Fedosov product a∧b + da∧db; associative on even forms.
Form fedosov_mul(const Form& a, const Form& b);

// The unique algebra map from the free algebra on n degree-1 generators to
// (even forms, Fedosov product) sending x_i to the i-th coordinate, evaluated
// word by word left-to-right.  Throws UsageError on weighted generators.
Form fs_map(const NCPoly& p, std::span<const GeneratorSpec> gens);

// Column indexing for the even forms of one degree.
struct FormBasis {
  int n = 0, degree = 0;
  std::vector<FormTerm> terms;
  std::map<FormTerm, uint32_t> index;

  static FormBasis even(int n, int degree);
  uint32_t size() const { return static_cast<uint32_t>(terms.size()); }
  SparseVec coords(const Form& f) const;
};

int dim_even_forms(int n, int degree);
// Dimension of the wedge-size-j component in one degree.
int dim_forms_component(int n, int degree, int j);

}  // namespace lcs
