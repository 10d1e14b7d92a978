#include "elcal/el.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace elcal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DualSolution {
    double lambda_scaled = 0.0;  // multiplier in centered/scaled coordinates
    double statistic = 0.0;
};

// g(lambda) = sum w_i / (1 + lambda w_i) and its derivative, on scaled data.
struct GEval {
    double g = 0.0;
    double dg = 0.0;
};

GEval eval_g(std::span<const double> w, double lambda) {
    GEval e;
    for (double wi : w) {
        const double d = 1.0 + lambda * wi;
        const double r = wi / d;
        e.g += r;
        e.dg -= r * r;
    }
    return e;
}

// Root of g on the feasibility interval (lo, hi) where every 1 + lambda w_i
// is positive. g is strictly decreasing with g -> +inf at lo and -inf at hi.
DualSolution solve_dual(std::span<const double> w) {
    const std::size_t n = w.size();
    const auto [min_it, max_it] = std::minmax_element(w.begin(), w.end());
    const double w_min = *min_it;  // < 0 in the interior case
    const double w_max = *max_it;  // > 0

    double lo = -1.0 / w_max;
    double hi = -1.0 / w_min;
    const double g_tol = 1e-10 * static_cast<double>(n);

    double lambda = 0.0;  // g(0) = sum w_i; a valid interior start
    GEval e = eval_g(w, lambda);
    for (int it = 0; it < 100 && std::fabs(e.g) > g_tol; ++it) {
        if (e.g > 0.0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        double next = lambda - e.g / e.dg;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        lambda = next;
        e = eval_g(w, lambda);
    }
    // Fallback: bisect the bracket down to 1e-13 relative width.
    while (std::fabs(e.g) > g_tol &&
           hi - lo > 1e-13 * std::max({std::fabs(lo), std::fabs(hi), 1.0})) {
        if (e.g > 0.0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        lambda = 0.5 * (lo + hi);
        e = eval_g(w, lambda);
    }

    double stat = 0.0;
    for (double wi : w) {
        stat += std::log1p(lambda * wi);
    }
    return {lambda, 2.0 * stat};
}

struct Prepared {
    ElStatus status = ElStatus::Interior;
    double mean = 0.0;
    double range = 1.0;
    double mu_scaled = 0.0;  // (mu0 - mean) / range
};

Prepared prepare(std::span<const double> sample, double mu0) {
    if (sample.empty()) {
        throw std::domain_error("el_statistic requires a nonempty sample");
    }
    if (!std::isfinite(mu0)) {
        throw std::domain_error("el_statistic requires finite mu0");
    }
    Prepared p;
    const auto [min_it, max_it] = std::minmax_element(sample.begin(), sample.end());
    const double y_min = *min_it;
    const double y_max = *max_it;
    if (y_min == y_max) {
        p.status = (mu0 == y_min) ? ElStatus::Degenerate : ElStatus::HullViolation;
        return p;
    }
    if (!(mu0 > y_min && mu0 < y_max)) {
        p.status = ElStatus::HullViolation;  // boundary counts as violation
        return p;
    }
    double mean = 0.0;
    for (double y : sample) mean += y;
    mean /= static_cast<double>(sample.size());
    p.mean = mean;
    p.range = y_max - y_min;
    p.mu_scaled = (mu0 - mean) / p.range;
    return p;
}

}  // namespace

double el_log_ratio_statistic(std::span<const double> sample, double mu0) {
    const Prepared p = prepare(sample, mu0);
    if (p.status == ElStatus::HullViolation) return kInf;
    if (p.status == ElStatus::Degenerate) return 0.0;

    const std::size_t n = sample.size();
    // Fixed-size stack buffer covers the Monte Carlo sample sizes; larger
    // samples fall back to the heap.
    double stack_w[256];
    std::vector<double> heap_w;
    double* w = stack_w;
    if (n > 256) {
        heap_w.resize(n);
        w = heap_w.data();
    }
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = (sample[i] - p.mean) / p.range - p.mu_scaled;
    }
    return solve_dual({w, n}).statistic;
}

ElResult el_statistic(std::span<const double> sample, double mu0) {
    const Prepared p = prepare(sample, mu0);
    ElResult res;
    if (p.status == ElStatus::HullViolation) {
        res.status = ElStatus::HullViolation;
        res.statistic = kInf;
        return res;
    }
    const std::size_t n = sample.size();
    if (p.status == ElStatus::Degenerate) {
        res.status = ElStatus::Degenerate;
        res.statistic = 0.0;
        res.weights.assign(n, 1.0 / static_cast<double>(n));
        return res;
    }

    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = (sample[i] - p.mean) / p.range - p.mu_scaled;
    }
    const DualSolution sol = solve_dual(w);
    res.statistic = sol.statistic;
    res.lambda = sol.lambda_scaled / p.range;  // undo the scaling of y - mu0
    res.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        res.weights[i] = 1.0 / (static_cast<double>(n) * (1.0 + sol.lambda_scaled * w[i]));
    }
    return res;
}

ConfidenceInterval el_confidence_interval(std::span<const double> sample, double critical_value,
                                          Probability level) {
    if (sample.size() < 2) {
        throw std::domain_error("el_confidence_interval requires n >= 2");
    }
    if (!(critical_value > 0.0)) {
        throw std::domain_error("el_confidence_interval requires critical_value > 0");
    }
    const auto [min_it, max_it] = std::minmax_element(sample.begin(), sample.end());
    const double y_min = *min_it;
    const double y_max = *max_it;
    if (y_min == y_max) {
        throw std::domain_error("el_confidence_interval requires a non-degenerate sample");
    }
    double mean = 0.0;
    for (double y : sample) mean += y;
    mean /= static_cast<double>(sample.size());

    const double n = static_cast<double>(sample.size());
    const double c = critical_value;

    // One endpoint per side: the statistic is 0 at the sample mean, strictly
    // increasing toward the hull edge, and +inf beyond it.
    auto find_endpoint = [&](double edge) {
        // Bracket by walking geometrically from the mean toward the edge.
        double lo = mean;                 // statistic < c
        double hi = edge;                 // statistic > c (eventually +inf)
        double step = 0.5 * (edge - mean);
        double probe = mean + step;
        for (int it = 0; it < 200; ++it) {
            const double s = el_log_ratio_statistic(sample, probe);
            if (s > c) {
                hi = probe;
                break;
            }
            lo = probe;
            step = 0.5 * (edge - probe);
            probe = probe + step;
        }
        // Safeguarded Newton: d statistic / d mu = -2 n lambda(mu).
        double mu = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            const ElResult r = el_statistic(sample, mu);
            const double s = r.status == ElStatus::Interior ? r.statistic : kInf;
            if (std::isfinite(s) && std::fabs(s - c) < 1e-10) {
                return mu;
            }
            if (s < c) {
                lo = mu;
            } else {
                hi = mu;
            }
            double next = mu;
            if (std::isfinite(s)) {
                const double slope = -2.0 * n * r.lambda;
                if (slope != 0.0) {
                    next = mu - (s - c) / slope;
                }
            }
            if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) {
                next = 0.5 * (lo + hi);
            }
            if (next == mu) break;
            mu = next;
        }
        return mu;
    };

    ConfidenceInterval ci{find_endpoint(y_min), find_endpoint(y_max), level, critical_value};
    return ci;
}

}  // namespace elcal
