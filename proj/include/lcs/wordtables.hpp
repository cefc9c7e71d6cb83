#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcs/freealg.hpp"
#include "lcs/linalg.hpp"

namespace lcs {

// Index table for the words of one degree: column i of every degree-d matrix
// is words[i], in the global (length, lex) order.
struct WordTable {
  std::vector<Word> words;
  std::unordered_map<std::string, uint32_t> index;

  uint32_t size() const { return static_cast<uint32_t>(words.size()); }
  uint32_t of(const Word& w) const;
  // Column groups by multidegree (every word is multihomogeneous).
  std::map<Multidegree, std::vector<uint32_t>> blocks(int ngens) const;
};

// Word tables for degrees 0..maxdeg, with a hard guard on total size.
class WordTables {
 public:
  WordTables(std::vector<GeneratorSpec> gens, int maxdeg,
             std::size_t cell_guard = 2'000'000);

  const std::vector<GeneratorSpec>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  int maxdeg() const { return maxdeg_; }
  const WordTable& at(int d) const;

  SparseVec from_poly(const NCPoly& p, int d) const;
  NCPoly to_poly(const SparseVec& v, int d) const;

  // w * v and v * w for a word w and a degree-dv row v.
  SparseVec mul_word_left(const Word& w, const SparseVec& v, int dv) const;
  SparseVec mul_word_right(const SparseVec& v, int dv, const Word& w) const;
  // wv - vw.
  SparseVec commutator_row(const Word& w, const SparseVec& v, int dv) const;
  // Concatenation product of two rows.
  SparseVec mul_rows(const SparseVec& a, int da, const SparseVec& b,
                     int db) const;

 private:
  std::vector<GeneratorSpec> gens_;
  int maxdeg_;
  std::vector<WordTable> tables_;
};

}  // namespace lcs
