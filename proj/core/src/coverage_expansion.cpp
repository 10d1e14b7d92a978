#include "elcal/coverage_expansion.hpp"

#include "elcal/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elcal {

double hermite_integral(double c) {
    if (!(c > 0.0)) {
        throw std::domain_error("hermite_integral requires c > 0");
    }
    return -std::sqrt(2.0 / std::numbers::pi) * std::sqrt(c) * std::exp(-0.5 * c);
}

double pearson_gap(const MomentSummary& moments) {
    if (!moments.skewness || !moments.kurtosis) {
        throw std::domain_error("pearson_gap requires defined skewness and kurtosis");
    }
    const double s1 = *moments.skewness;
    const double s2 = *moments.kurtosis;
    return 0.5 * s2 - s1 * s1 / 3.0;
}

Probability predicted_size(std::size_t n, Probability alpha, const MomentSummary& moments) {
    if (n < 1) {
        throw std::domain_error("predicted_size requires n >= 1");
    }
    const double a = alpha.value();
    if (a <= 0.0 || a >= 1.0) {
        throw std::domain_error("predicted_size requires 0 < alpha < 1");
    }
    const double c = sf::chisq1_quantile(Probability(1.0 - a));
    const double size = a - pearson_gap(moments) * hermite_integral(c) / (2.0 * static_cast<double>(n));
    return Probability(std::min(size, 1.0));
}

}  // namespace elcal
