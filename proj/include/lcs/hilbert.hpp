#pragma once

#include <span>
#include <vector>

#include "lcs/freealg.hpp"

namespace lcs {

// Rational-function fit for a Hilbert series: numerator over
// prod_i (1 - t^{d_i})^exponent, with the numerator read off the data window.
// stable means the trailing ceil(D/4) numerator coefficients vanish; if not,
// the denominator is squared and the fit retried (exponents 1, 2, 4).
// Instability is data, not an error.
struct SeriesFit {
  std::vector<long long> numerator;  // index = degree, trimmed
  std::vector<int> denom_degrees;    // the generator degrees d_i
  int denom_exponent = 1;
  int fit_from = 0, fit_to = 0;
  bool stable = false;

  friend bool operator==(const SeriesFit&, const SeriesFit&) = default;
};

// dims[d] for 0 <= d <= maxdeg must be complete.
SeriesFit fit_series(const std::vector<long long>& dims,
                     std::span<const GeneratorSpec> gens, int maxdeg);

// Power-series expansion of the fit up to degree maxdeg; round-trips the
// input dims on every stable fit.
std::vector<long long> expand_series(const SeriesFit& fit, int maxdeg);

std::string series_numerator_str(const SeriesFit& fit);
std::string series_denominator_str(const SeriesFit& fit);

}  // namespace lcs
