#pragma once

#include "elcal/random.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace elcal {

enum class Family {
    Normal,      ///< normal(mu, sigma2), sigma2 is the variance
    Exponential, ///< exponential(lambda), rate
    Uniform,     ///< uniform(a, b), a < b
    Gamma,       ///< gamma(alpha, beta), shape and rate
    ChiSquare,   ///< chisquare(nu)
    Laplace,     ///< laplace(mu, b), location and scale
    StudentT,    ///< t(nu)
};

/// A named parent distribution with parameters. Immutable and shareable;
/// samplers draw only from a caller-owned RandomStream.
struct DistributionSpec {
    Family family;
    double p1 = 0.0;
    double p2 = 0.0;  // unused for one-parameter families
};

/// Exact moments of a parent distribution. Kurtosis uses the non-excess
/// convention (normal = 3). Skewness/kurtosis are absent when the
/// corresponding moment does not exist (Student-t with small nu).
struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;  // +infinity for Student-t with 1 < nu <= 2
    std::optional<double> skewness;
    std::optional<double> kurtosis;
    bool eighth_moment_finite = true;
};

/// Construct a validated spec; throws std::domain_error on bad parameters.
DistributionSpec make_spec(Family family, double p1, double p2 = 0.0);

/// Parse the text grammar used on the command line, e.g. "normal(0,1)",
/// "gamma(2,1)", "t(5)". Family names are case-insensitive; the aliases
/// exp, unif, chisq, chi2, lap and studentt are accepted. A few named
/// presets (std-normal, std-exp, std-uniform, gamma21, chisq1,
/// skew-pair-gamma, skew-pair-laplace, tail-pair-normal, tail-pair-t)
/// resolve to fixed parameterizations.
DistributionSpec parse_spec(const std::string& text);

/// Canonical text form, e.g. "normal(0,1)"; parse_spec round-trips it.
std::string to_string(const DistributionSpec& spec);
std::string family_name(Family family);

/// Closed-form exact moments. Throws std::domain_error for Student-t with
/// nu <= 1 (the mean does not exist).
MomentSummary moments(const DistributionSpec& spec);

/// Lebesgue density at y; zero outside the support.
double density(const DistributionSpec& spec, double y);

/// n i.i.d. draws. Deterministic given the stream state. Inverse-cdf
/// samplers for Exponential/Uniform/Laplace, Box-Muller pairs for Normal,
/// Marsaglia-Tsang rejection for Gamma (and ChiSquare via gamma(nu/2, 1/2)),
/// Student-t as normal over sqrt(chisq/nu).
void sample(const DistributionSpec& spec, std::span<double> out, RandomStream& stream);
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, RandomStream& stream);

/// The catalog of parent distributions exercised by curves and tables:
/// N(0,1), Exp(1), Unif(0,1), Gamma(2,1), ChiSquare(1), plus the
/// matched-moment pairs Laplace(2,1) (same mean/variance/kurtosis as
/// Gamma(2,1)) and N(0,5/3) versus t(5) (same mean/variance/skewness).
std::vector<DistributionSpec> catalog();

}  // namespace elcal
