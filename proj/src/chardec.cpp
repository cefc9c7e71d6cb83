#include "lcs/chardec.hpp"

#include <algorithm>
#include <functional>

#include "lcs/errors.hpp"

namespace lcs {

long Character::total() const {
  long t = 0;
  for (const auto& [e, c] : coeffs) t += c;
  return t;
}

void Character::add(const std::vector<int>& e, long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Character character_of(const StandardFiber& fb, int n) {
  Character c;
  c.n = n;
  for (const auto& [d, vecs] : fb.perdegree)
    for (const auto& v : vecs) c.add(v.weight, 1);
  // GL_n characters are symmetric under permuting the exponents.
  for (const auto& [e, m] : c.coeffs) {
    std::vector<int> p = e;
    std::sort(p.begin(), p.end());
    do {
      auto it = c.coeffs.find(p);
      if (it == c.coeffs.end() || it->second != m)
        throw EngineError("standard fiber character is not symmetric");
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return c;
}

Character schur_expand(const Partition& lambda, int n) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw UsageError("partition parts must be weakly decreasing");
  }
  if (static_cast<int>(lambda.size()) > n)
    throw UsageError("partition has more rows than variables");
  Character out;
  out.n = n;
  if (lambda.empty()) {
    out.add(std::vector<int>(static_cast<std::size_t>(n), 0), 1);
    return out;
  }
  // Fill the tableau cell by cell: rows weakly increase, columns strictly.
  int rows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int r, int col) {
    if (r == rows) {
      out.add(weight, 1);
      return;
    }
    int nr = r, nc = col + 1;
    if (nc >= lambda[static_cast<std::size_t>(r)]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(col - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = v;
      weight[static_cast<std::size_t>(v - 1)]++;
      fill(nr, nc);
      weight[static_cast<std::size_t>(v - 1)]--;
    }
  };
  fill(0, 0);
  return out;
}

long schur_dim(const Partition& lambda, int n) {
  return schur_expand(lambda, n).total();
}

SchurDecomp decompose(const Character& c) {
  for (const auto& [e, m] : c.coeffs)
    if (m < 0) throw UsageError("not a character: negative multiplicity");
  Character rest = c;
  SchurDecomp out;
  while (!rest.coeffs.empty()) {
    auto it = std::prev(rest.coeffs.end());  // lex-greatest exponent vector
    std::vector<int> e = it->first;
    long m = it->second;
    if (m < 0) throw UsageError("not a character: negative multiplicity while peeling");
    Partition lam;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0 && e[i] > e[i - 1])
        throw UsageError("not a character: dominant exponent is not a partition");
      if (e[i] > 0) lam.push_back(e[i]);
      else if (e[i] < 0)
        throw UsageError("not a character: negative exponent");
    }
    Character s = schur_expand(lam, c.n);
    for (const auto& [se, sc] : s.coeffs) rest.add(se, -m * sc);
    out.mult[lam] += m;
  }
  return out;
}

int partition_degree_bound(int k, int n) {
  if (k % 2 == 1) return 2 * k - 2;
  return 2 * k - 2 + 2 * std::max(0, (n - 2) / 2);
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ')';
  return s;
}

}  // namespace lcs
