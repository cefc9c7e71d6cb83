#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcs/star.hpp"

namespace lcs {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// Multidegree-indexed dimension counts of a torus action.  Characters of
// GL_n-modules are symmetric in the exponents; character_of enforces this.
struct Character {
  int n = 0;
  std::map<std::vector<int>, long> coeffs;

  long total() const;
  bool is_zero() const { return coeffs.empty(); }
  void add(const std::vector<int>& e, long c);
  friend bool operator==(const Character&, const Character&) = default;
};

struct SchurDecomp {
  std::map<Partition, long> mult;
  friend bool operator==(const SchurDecomp&, const SchurDecomp&) = default;
};

// Weight histogram of the fiber's homogeneous basis vectors.  Throws
// EngineError if the result is not permutation-symmetric (an engine bug).
Character character_of(const StandardFiber& fb, int n);

// Monomial expansion of the Schur function s_lambda in n variables by
// semistandard tableau enumeration.
Character schur_expand(const Partition& lambda, int n);
long schur_dim(const Partition& lambda, int n);

// Greedy dominant-monomial peeling.  Terminates with all multiplicities >= 0
// exactly when the input is a genuine character; otherwise throws UsageError
// ("not a character").
SchurDecomp decompose(const Character& c);

// Degree bound for partitions appearing in St(N_k(A_n)).
int partition_degree_bound(int k, int n);

std::string partition_str(const Partition& p);

}  // namespace lcs
