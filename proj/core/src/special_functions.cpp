#include "elcal/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace elcal::sf {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kSqrt2 = 1.4142135623730950488016887;

// Coefficients of Acklam's rational approximation for the normal quantile.
constexpr double kQa[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                           -2.759285104469687e+02, 1.383577518672690e+02,
                           -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kQb[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                           -1.556989798598866e+02, 6.680131188771972e+01,
                           -1.328068155288572e+01};
constexpr double kQc[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                           -2.400758277161838e+00, -2.549732539343734e+00,
                           4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kQd[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                           2.445134137142996e+00, 3.754408661907416e+00};

double acklam_initial(double p) {
    const double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((kQc[0] * q + kQc[1]) * q + kQc[2]) * q + kQc[3]) * q + kQc[4]) * q + kQc[5]) /
               ((((kQd[0] * q + kQd[1]) * q + kQd[2]) * q + kQd[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((kQc[0] * q + kQc[1]) * q + kQc[2]) * q + kQc[3]) * q + kQc[4]) * q + kQc[5]) /
               ((((kQd[0] * q + kQd[1]) * q + kQd[2]) * q + kQd[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((kQa[0] * r + kQa[1]) * r + kQa[2]) * r + kQa[3]) * r + kQa[4]) * r + kQa[5]) * q /
           (((((kQb[0] * r + kQb[1]) * r + kQb[2]) * r + kQb[3]) * r + kQb[4]) * r + 1.0);
}

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon()) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), valid for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) break;
    }
    return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}

}  // namespace

double log_gamma(double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("log_gamma requires z > 0, got " + std::to_string(z));
    }
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    double x = z;
    double y = z;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) {
        ser += cof[j] / ++y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double std_normal_pdf(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("std_normal_pdf requires finite x");
    }
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

Probability std_normal_cdf(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("std_normal_cdf requires finite x");
    }
    return Probability(0.5 * std::erfc(-x / kSqrt2));
}

double std_normal_quantile(Probability p) {
    const double pv = p.value();
    if (pv <= 0.0 || pv >= 1.0) {
        throw std::domain_error("std_normal_quantile requires 0 < p < 1");
    }
    double x = acklam_initial(pv);
    // One Newton step on the cdf. Work on the smaller tail to avoid
    // cancellation in Phi(x) - p near 1.
    if (pv > 0.5) {
        const double q = 1.0 - pv;
        const double err = 0.5 * std::erfc(x / kSqrt2) - q;
        x += err / std_normal_pdf(x);
    } else {
        const double err = 0.5 * std::erfc(-x / kSqrt2) - pv;
        x -= err / std_normal_pdf(x);
    }
    return x;
}

Probability chisq1_cdf(double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("chisq1_cdf requires x >= 0, got " + std::to_string(x));
    }
    const double r = std::sqrt(x);
    // 2*Phi(r) - 1 = erf(r/sqrt(2)); erf avoids cancellation for small x.
    return Probability(std::erf(r / kSqrt2));
}

double chisq1_quantile(Probability p) {
    const double pv = p.value();
    if (pv <= 0.0 || pv >= 1.0) {
        throw std::domain_error("chisq1_quantile requires 0 < p < 1");
    }
    const double z = std_normal_quantile(Probability(0.5 * (1.0 + pv)));
    return z * z;
}

Probability regularized_incomplete_gamma(double a, double x) {
    if (!(a > 0.0)) {
        throw std::domain_error("regularized_incomplete_gamma requires a > 0");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("regularized_incomplete_gamma requires x >= 0");
    }
    if (x == 0.0) return Probability(0.0);
    if (x < a + 1.0) {
        return Probability(gamma_p_series(a, x));
    }
    return Probability(1.0 - gamma_q_contfrac(a, x));
}

double inverse_regularized_incomplete_gamma(double a, Probability p) {
    const double pv = p.value();
    if (!(a > 0.0)) {
        throw std::domain_error("inverse_regularized_incomplete_gamma requires a > 0");
    }
    if (pv <= 0.0 || pv >= 1.0) {
        throw std::domain_error("inverse_regularized_incomplete_gamma requires 0 < p < 1");
    }
    // Initial guess: Wilson-Hilferty for a > 1, small-x power law otherwise,
    // then safeguarded Newton on P(a, x) - p.
    const double gln = log_gamma(a);
    double x;
    if (a > 1.0) {
        const double z = std_normal_quantile(p);
        const double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
        x = a * t * t * t;
        if (x <= 0.0) x = 1e-8;
    } else {
        const double t = 1.0 - a * (0.253 + a * 0.12);
        x = (pv < t) ? std::pow(pv / t, 1.0 / a) : 1.0 - std::log1p(-(pv - t) / (1.0 - t));
    }
    for (int it = 0; it < 60; ++it) {
        if (x <= 0.0) x = 0.5 * (x + 1e-300);
        const double err = regularized_incomplete_gamma(a, x).value() - pv;
        const double dens = std::exp(-x + (a - 1.0) * std::log(x) - gln);
        if (dens <= 0.0) break;
        double dx = err / dens;
        // Halley correction stabilizes the step for small a.
        dx /= std::max(0.5, 1.0 - 0.5 * dx * ((a - 1.0) / x - 1.0));
        const double xn = x - dx;
        x = (xn <= 0.0) ? 0.5 * x : xn;
        if (std::fabs(dx) < 1e-12 * std::max(x, 1e-300)) break;
    }
    return x;
}

Probability chisq_cdf(double x, double nu) {
    if (!(nu > 0.0)) {
        throw std::domain_error("chisq_cdf requires nu > 0");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("chisq_cdf requires x >= 0");
    }
    return regularized_incomplete_gamma(0.5 * nu, 0.5 * x);
}

}  // namespace elcal::sf
