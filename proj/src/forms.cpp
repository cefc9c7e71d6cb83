#include "lcs/forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lcs/errors.hpp"

namespace lcs {

int FormTerm::degree() const {
  int d = static_cast<int>(wedge.size());
  for (int e : exps) d += e;
  return d;
}

Form Form::one(int nvars) {
  Form f(nvars);
  f.add_term(FormTerm{std::vector<int>(static_cast<std::size_t>(nvars), 0), {}},
             Rat(1));
  return f;
}

Form Form::coordinate(int nvars, int i) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  Form f(nvars);
  f.add_term(FormTerm{std::move(e), {}}, Rat(1));
  return f;
}

void Form::add_term(FormTerm t, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(t), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Form::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [t, c] : terms_) {
    if (!deg) deg = t.degree();
    else if (*deg != t.degree()) return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

std::optional<int> Form::parity() const {
  std::optional<int> p;
  for (const auto& [t, c] : terms_) {
    int q = static_cast<int>(t.wedge.size()) % 2;
    if (!p) p = q;
    else if (*p != q) return std::nullopt;
  }
  return p;
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Form& Form::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

namespace {

// Merge two increasing wedge sets; sign is the parity of the number of
// transpositions, i.e. pairs (s in a, t in b) with s > t.  Shared index: 0.
bool merge_wedge(const std::vector<int>& a, const std::vector<int>& b,
                 std::vector<int>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  sign = (inversions % 2 == 0) ? 1 : -1;
  return true;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  Form r(std::max(a.nvars(), b.nvars()));
  std::vector<int> w;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      int sign = 1;
      if (!merge_wedge(ta.wedge, tb.wedge, w, sign)) continue;
      std::vector<int> e(ta.exps);
      for (std::size_t i = 0; i < e.size() && i < tb.exps.size(); ++i)
        e[i] += tb.exps[i];
      Rat c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(FormTerm{std::move(e), w}, c);
    }
  }
  return r;
}

Form dee(const Form& a) {
  Form r(a.nvars());
  for (const auto& [t, c] : a.terms()) {
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      int idx = static_cast<int>(i);
      if (std::binary_search(t.wedge.begin(), t.wedge.end(), idx)) continue;
      std::vector<int> e(t.exps);
      e[i] -= 1;
      std::vector<int> w;
      w.reserve(t.wedge.size() + 1);
      int below = 0;
      for (int s : t.wedge)
        if (s < idx) ++below;
      w.assign(t.wedge.begin(), t.wedge.end());
      w.insert(std::lower_bound(w.begin(), w.end(), idx), idx);
      Rat coeff = c * t.exps[i];
      if (below % 2 == 1) coeff = -coeff;
      r.add_term(FormTerm{std::move(e), std::move(w)}, coeff);
    }
  }
  return r;
}

Form fedosov_mul(const Form& a, const Form& b) {
  Form r = wedge(a, b);
  r += wedge(dee(a), dee(b));
  return r;
}

Form fs_map(const NCPoly& p, std::span<const GeneratorSpec> gens) {
  for (const auto& g : gens)
    if (g.degree != 1)
      throw UsageError("fs_map supports all-degree-1 generators only");
  int n = static_cast<int>(gens.size());
  Form r(n);
  for (const auto& [w, c] : p.terms()) {
    Form acc = Form::one(n);
    for (int i = 0; i < w.length(); ++i)
      acc = fedosov_mul(acc, Form::coordinate(n, w.letter(i)));
    acc *= c;
    r += acc;
  }
  return r;
}

FormBasis FormBasis::even(int n, int degree) {
  FormBasis b;
  b.n = n;
  b.degree = degree;
  // All even wedge subsets, then all exponent vectors of the right degree.
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    if (static_cast<int>(s.size()) <= degree) subsets.push_back(std::move(s));
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, const std::vector<int>&)> rec =
      [&](int pos, int rem, const std::vector<int>& s) {
        if (pos == n - 1) {
          e[static_cast<std::size_t>(pos)] = rem;
          b.terms.push_back(FormTerm{e, s});
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          e[static_cast<std::size_t>(pos)] = v;
          rec(pos + 1, rem - v, s);
        }
      };
  for (const auto& s : subsets) {
    if (n == 0) break;
    rec(0, degree - static_cast<int>(s.size()), s);
  }
  std::sort(b.terms.begin(), b.terms.end());
  for (uint32_t i = 0; i < b.terms.size(); ++i) b.index.emplace(b.terms[i], i);
  return b;
}

SparseVec FormBasis::coords(const Form& f) const {
  SparseVec v;
  for (const auto& [t, c] : f.terms()) {
    auto it = index.find(t);
    if (it == index.end())
      throw EngineError("form term outside the basis degree");
    v.push(it->second, c);
  }
  v.normalize();
  return v;
}

int dim_forms_component(int n, int degree, int j) {
  if (j < 0 || j > n || j > degree) return 0;
  // C(n, j) * #monomials of degree (degree - j) in n variables.
  long long binom = 1;
  for (int i = 0; i < j; ++i) binom = binom * (n - i) / (i + 1);
  long long mono = 1;
  int m = degree - j;
  for (int i = 1; i < n; ++i) mono = mono * (m + i) / i;
  return static_cast<int>(binom * mono);
}

int dim_even_forms(int n, int degree) {
  int total = 0;
  for (int j = 0; j <= std::min(n, degree); j += 2)
    total += dim_forms_component(n, degree, j);
  return total;
}

}  // namespace lcs
