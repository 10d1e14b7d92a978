#pragma once

#include "elcal/probability.hpp"

namespace elcal::sf {

// Self-contained numerical special functions. All functions are pure and
// total on their stated domains; invalid arguments throw std::domain_error.

/// Natural log of the gamma function, z > 0. Lanczos-type series,
/// accurate to ~1e-14 relative.
double log_gamma(double z);

/// Standard normal density phi(x) = exp(-x^2/2)/sqrt(2*pi).
double std_normal_pdf(double x);

/// Standard normal distribution function Phi(x), via erfc.
Probability std_normal_cdf(double x);

/// Inverse of Phi. Rational approximation polished by one Newton step on
/// the cdf, giving full double accuracy over (0, 1).
double std_normal_quantile(Probability p);

/// Chi-square(1) distribution function, F(x) = 2*Phi(sqrt(x)) - 1, x >= 0.
Probability chisq1_cdf(double x);

/// Chi-square(1) quantile, the inverse of chisq1_cdf on (0, 1).
/// Uses the identity F^{-1}(p) = Phi^{-1}((1+p)/2)^2.
double chisq1_quantile(Probability p);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction otherwise.
Probability regularized_incomplete_gamma(double a, double x);

/// Inverse of P(a, .) in x for fixed a: returns x with P(a, x) = p.
double inverse_regularized_incomplete_gamma(double a, Probability p);

/// Chi-square(nu) distribution function, P(nu/2, x/2). Used by sampler
/// distribution checks; the d = 1 calibration path goes through chisq1_*.
Probability chisq_cdf(double x, double nu);

}  // namespace elcal::sf
