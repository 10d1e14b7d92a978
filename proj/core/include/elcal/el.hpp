#pragma once

#include "elcal/probability.hpp"

#include <span>
#include <vector>

namespace elcal {

enum class ElStatus {
    Interior,       ///< mu0 strictly inside the sample hull; weights exist
    HullViolation,  ///< mu0 on or outside [min y, max y]; statistic +infinity
    Degenerate,     ///< all observations equal mu0; statistic 0
};

/// Outcome of the constrained nonparametric likelihood maximization at a
/// hypothesized mean mu0. When Interior, weights satisfy sum p_i = 1,
/// sum p_i (y_i - mu0) = 0 and p_i = 1 / (n (1 + lambda (y_i - mu0))),
/// and statistic = 2 * sum log(1 + lambda (y_i - mu0)) >= 0.
struct ElResult {
    double statistic = 0.0;  ///< -2 log of the likelihood ratio; +inf on hull violation
    double lambda = 0.0;     ///< dual multiplier of the mean constraint
    std::vector<double> weights;  ///< empty unless Interior or Degenerate
    ElStatus status = ElStatus::Interior;
};

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    Probability level;
    double critical_value = 0.0;
};

/// Empirical likelihood ratio statistic for the mean.
///
/// The dual multiplier lambda is the unique root of
///   g(lambda) = sum (y_i - mu0) / (1 + lambda (y_i - mu0))
/// on the interval where all 1 + lambda (y_i - mu0) stay positive; g is
/// strictly decreasing there. Solved by Newton iteration with a bisection
/// safeguard after centering and scaling the data by the sample mean and
/// range. Ties among observations are allowed.
ElResult el_statistic(std::span<const double> sample, double mu0);

/// Statistic-only path used by the Monte Carlo engine; identical solver,
/// no weight vector allocation.
double el_log_ratio_statistic(std::span<const double> sample, double mu0);

/// The set {mu : el_statistic(sample, mu) <= c}, an interval around the
/// sample mean with endpoints strictly inside the sample hull. Endpoints
/// located by safeguarded Newton (d statistic / d mu = -2 n lambda) so the
/// statistic at each endpoint equals c to 1e-8 or better.
ConfidenceInterval el_confidence_interval(std::span<const double> sample, double critical_value,
                                          Probability level = Probability(0.95));

}  // namespace elcal
