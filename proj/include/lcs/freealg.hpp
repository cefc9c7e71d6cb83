#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

struct GeneratorSpec {
  std::string name;
  int degree = 1;  // >= 1; enforced when a Presentation is built
};

using Multidegree = std::vector<int>;  // letter counts per generator

// A word in the generators, stored as a byte string of generator indices.
// The empty word is the unit.  Total degree (sum of letter degrees) is
// cached; words are ordered by (degree, length, lex on indices), which is the
// global column order of every matrix in the engine.
class Word {
 public:
  Word() = default;
  Word(std::string letters, int degree)
      : letters_(std::move(letters)), degree_(degree) {}

  static Word one() { return Word(); }
  static Word make(std::span<const GeneratorSpec> gens, std::string letters);
  static Word generator(std::span<const GeneratorSpec> gens, int i);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_one() const { return letters_.empty(); }
  uint8_t letter(int i) const { return static_cast<uint8_t>(letters_[i]); }
  const std::string& letters() const { return letters_; }

  Word concat(const Word& o) const {
    return Word(letters_ + o.letters_, degree_ + o.degree_);
  }
  Word subword(int pos, int len, std::span<const GeneratorSpec> gens) const;
  Multidegree multidegree(int ngens) const;

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() <=> b.letters_.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  int degree_ = 0;
};

// All words of total degree exactly d, in (length, lex) order.  This order is
// fixed: it defines the column indexing of every per-degree matrix.
std::vector<Word> enumerate_words(std::span<const GeneratorSpec> gens, int d);

// Finite rational linear combination of words; the universal element
// container.  No zero coefficients are stored.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Word& w, Rat c = Rat(1)) {
    if (c != 0) terms_[w] = std::move(c);
  }
  static NCPoly zero() { return NCPoly(); }
  static NCPoly one() { return NCPoly(Word::one()); }
  static NCPoly scalar(const Rat& c) { return NCPoly(Word::one(), c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rat>& terms() const { return terms_; }
  Rat coeff(const Word& w) const;

  void add_term(const Word& w, const Rat& c);

  // The common degree of all words, if the polynomial is homogeneous;
  // nullopt otherwise (and for 0, which is homogeneous of every degree).
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rat& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rat& c) { return a *= c; }
  friend NCPoly operator*(const Rat& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string str(std::span<const GeneratorSpec> gens) const;

 private:
  std::map<Word, Rat> terms_;
};

// Bilinear extension of word concatenation; exact rational arithmetic.
NCPoly mul(const NCPoly& p, const NCPoly& q);
// pq - qp.
NCPoly commutator(const NCPoly& p, const NCPoly& q);

// A derivation of the free algebra, given by its values on the generators and
// extended to products by the Leibniz rule.  If every image is homogeneous of
// degree deg(x_i) + w, the derivation is graded of weight w.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<NCPoly> images) : images_(std::move(images)) {}

  static Derivation euler(std::span<const GeneratorSpec> gens);

  int ngens() const { return static_cast<int>(images_.size()); }
  const NCPoly& image(int i) const { return images_[i]; }

  NCPoly apply(const NCPoly& p, std::span<const GeneratorSpec> gens) const;
  std::optional<int> graded_weight(std::span<const GeneratorSpec> gens) const;

  // Commutator of derivations: x_i -> D1(D2(x_i)) - D2(D1(x_i)).
  static Derivation bracket(const Derivation& d1, const Derivation& d2,
                            std::span<const GeneratorSpec> gens);

 private:
  std::vector<NCPoly> images_;
};

// Fully symmetrized noncommutative lift of the commutative monomial x^alpha:
// the average over all distinct orderings of the letter multiset.
NCPoly symmetrized_monomial(std::span<const GeneratorSpec> gens,
                            const Multidegree& alpha);

}  // namespace lcs
