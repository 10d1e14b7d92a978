#pragma once

#include "elcal/distributions.hpp"
#include "elcal/probability.hpp"

#include <cstddef>

namespace elcal {

/// Closed form of the integral of (x^2 - 1) phi(x) over [-sqrt(c), sqrt(c)]:
///   -sqrt(2/pi) * sqrt(c) * exp(-c/2),
/// strictly negative for every c > 0 (limit 0 as c -> 0+, not returned).
/// Throws std::domain_error for c <= 0.
double hermite_integral(double c);

/// s2/2 - s1^2/3. Strictly positive for any moment pair allowed by the
/// Pearson inequality s2 >= s1^2 + 1. Throws if skewness or kurtosis is
/// undefined in `moments`.
double pearson_gap(const MomentSummary& moments);

/// Second-order approximation to the realized size of the asymptotic
/// chi-square(1) test at nominal level alpha and sample size n:
///   alpha - (1/(2n)) * (s2/2 - s1^2/3) * hermite_integral(c_alpha),
/// with c_alpha the (1-alpha) chi-square(1) quantile. Always > alpha.
/// The approximation carries an O(n^{-3/2}) remainder and presumes a finite
/// eighth moment; callers filter on MomentSummary::eighth_moment_finite
/// where that matters.
Probability predicted_size(std::size_t n, Probability alpha, const MomentSummary& moments);

}  // namespace elcal
