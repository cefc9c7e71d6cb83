#include "lcs/hilbert.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lcs/errors.hpp"

namespace lcs {

namespace {

// (1 - t^{d_1}) ... (1 - t^{d_m}) repeated `exponent` times, truncated.
std::vector<long long> denominator_poly(const std::vector<int>& degs,
                                        int exponent, int maxdeg) {
  std::vector<long long> den(static_cast<std::size_t>(maxdeg) + 1, 0);
  den[0] = 1;
  for (int rep = 0; rep < exponent; ++rep) {
    for (int d : degs) {
      for (int j = maxdeg; j >= d; --j) den[static_cast<std::size_t>(j)] -= den[static_cast<std::size_t>(j - d)];
    }
  }
  return den;
}

void trim(std::vector<long long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

SeriesFit fit_series(const std::vector<long long>& dims,
                     std::span<const GeneratorSpec> gens, int maxdeg) {
  if (static_cast<int>(dims.size()) < maxdeg + 1)
    throw UsageError("fit_series: dims must cover degrees 0..maxdeg");
  std::vector<int> degs;
  degs.reserve(gens.size());
  for (const auto& g : gens) degs.push_back(g.degree);

  int window = (maxdeg + 3) / 4;  // ceil(maxdeg / 4)
  SeriesFit best;
  for (int e : {1, 2, 4}) {
    std::vector<long long> den = denominator_poly(degs, e, maxdeg);
    std::vector<long long> num(static_cast<std::size_t>(maxdeg) + 1, 0);
    for (int i = 0; i <= maxdeg; ++i) {
      if (dims[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= maxdeg; ++j)
        num[static_cast<std::size_t>(i + j)] +=
            dims[static_cast<std::size_t>(i)] * den[static_cast<std::size_t>(j)];
    }
    bool stable = true;
    for (int d = maxdeg - window + 1; d <= maxdeg; ++d)
      if (num[static_cast<std::size_t>(d)] != 0) stable = false;
    trim(num);
    best.numerator = std::move(num);
    best.denom_degrees = degs;
    best.denom_exponent = e;
    best.fit_from = 0;
    best.fit_to = maxdeg;
    best.stable = stable;
    if (stable) break;
  }
  return best;
}

std::vector<long long> expand_series(const SeriesFit& fit, int maxdeg) {
  std::vector<long long> den =
      denominator_poly(fit.denom_degrees, fit.denom_exponent, maxdeg);
  std::vector<long long> out(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (int d = 0; d <= maxdeg; ++d) {
    long long v = d < static_cast<int>(fit.numerator.size())
                      ? fit.numerator[static_cast<std::size_t>(d)]
                      : 0;
    for (int j = 1; j <= d; ++j)
      v -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(d - j)];
    out[static_cast<std::size_t>(d)] = v;  // den[0] == 1
  }
  return out;
}

std::string series_numerator_str(const SeriesFit& fit) {
  if (fit.numerator.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t d = 0; d < fit.numerator.size(); ++d) {
    long long c = fit.numerator[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || d == 0) s += std::to_string(a);
    if (d > 0) {
      if (a != 1) s += "*";
      s += "t";
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

std::string series_denominator_str(const SeriesFit& fit) {
  std::map<int, int> counts;
  for (int d : fit.denom_degrees) counts[d] += fit.denom_exponent;
  std::string s;
  for (const auto& [d, m] : counts) {
    if (!s.empty()) s += "*";
    s += "(1-t";
    if (d > 1) s += "^" + std::to_string(d);
    s += ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

}  // namespace lcs
