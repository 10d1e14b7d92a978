#include "elcal/distributions.hpp"

#include "elcal/special_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace elcal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Box-Muller pair source. Draws two uniforms per pair and hands the values
/// out one at a time, so every consumer sees the same sequence regardless of
/// how many normals it needs.
class NormalSource {
  public:
    explicit NormalSource(RandomStream& stream) : stream_(stream) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = stream_.uniform01();
        const double u2 = stream_.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

  private:
    RandomStream& stream_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Marsaglia-Tsang (2000) for shape >= 1; shape < 1 boosted from shape + 1.
double draw_gamma(double shape, double rate, RandomStream& stream, NormalSource& normals) {
    if (shape < 1.0) {
        const double g = draw_gamma(shape + 1.0, rate, stream, normals);
        return g * std::pow(stream.uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normals.next();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform01();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) {
            return d * v / rate;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v / rate;
        }
    }
}

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string format_param(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v) {
            return shorter;
        }
    }
    return buf;
}

[[noreturn]] void parse_fail(const std::string& text, const std::string& what) {
    throw std::invalid_argument("cannot parse distribution '" + text + "': " + what);
}

}  // namespace

DistributionSpec make_spec(Family family, double p1, double p2) {
    if (!std::isfinite(p1) || !std::isfinite(p2)) {
        throw std::domain_error("distribution parameters must be finite");
    }
    switch (family) {
        case Family::Normal:
            if (!(p2 > 0.0)) throw std::domain_error("normal requires variance > 0");
            break;
        case Family::Exponential:
            if (!(p1 > 0.0)) throw std::domain_error("exponential requires rate > 0");
            break;
        case Family::Uniform:
            if (!(p1 < p2)) throw std::domain_error("uniform requires a < b");
            break;
        case Family::Gamma:
            if (!(p1 > 0.0) || !(p2 > 0.0)) throw std::domain_error("gamma requires alpha, beta > 0");
            break;
        case Family::ChiSquare:
            if (!(p1 > 0.0)) throw std::domain_error("chisquare requires nu > 0");
            break;
        case Family::Laplace:
            if (!(p2 > 0.0)) throw std::domain_error("laplace requires scale > 0");
            break;
        case Family::StudentT:
            if (!(p1 > 0.0)) throw std::domain_error("t requires nu > 0");
            break;
    }
    return DistributionSpec{family, p1, p2};
}

DistributionSpec parse_spec(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    s = ascii_lower(s);

    // Named presets for the standard catalog and the matched-moment pairs.
    if (s == "std-normal") return make_spec(Family::Normal, 0.0, 1.0);
    if (s == "std-exp") return make_spec(Family::Exponential, 1.0);
    if (s == "std-uniform") return make_spec(Family::Uniform, 0.0, 1.0);
    if (s == "gamma21" || s == "skew-pair-gamma") return make_spec(Family::Gamma, 2.0, 1.0);
    if (s == "chisq1") return make_spec(Family::ChiSquare, 1.0);
    if (s == "skew-pair-laplace") return make_spec(Family::Laplace, 2.0, 1.0);
    if (s == "tail-pair-normal") return make_spec(Family::Normal, 0.0, 5.0 / 3.0);
    if (s == "tail-pair-t") return make_spec(Family::StudentT, 5.0);

    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') {
        parse_fail(text, "expected family(p1[,p2])");
    }
    const std::string name = s.substr(0, open);
    const std::string args = s.substr(open + 1, s.size() - open - 2);

    std::vector<double> params;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        const auto comma = args.find(',', pos);
        const std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) parse_fail(text, "empty parameter");
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size()) parse_fail(text, "bad number '" + tok + "'");
        params.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    Family family;
    std::size_t want = 2;
    if (name == "normal" || name == "n") {
        family = Family::Normal;
    } else if (name == "exponential" || name == "exp") {
        family = Family::Exponential, want = 1;
    } else if (name == "uniform" || name == "unif") {
        family = Family::Uniform;
    } else if (name == "gamma") {
        family = Family::Gamma;
    } else if (name == "chisquare" || name == "chisq" || name == "chi2") {
        family = Family::ChiSquare, want = 1;
    } else if (name == "laplace" || name == "lap") {
        family = Family::Laplace;
    } else if (name == "t" || name == "studentt") {
        family = Family::StudentT, want = 1;
    } else {
        parse_fail(text, "unknown family '" + name + "'");
    }
    if (params.size() != want) {
        parse_fail(text, family_name(family) + " takes " + std::to_string(want) + " parameter(s)");
    }
    return make_spec(family, params[0], want == 2 ? params[1] : 0.0);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::Normal: return "normal";
        case Family::Exponential: return "exponential";
        case Family::Uniform: return "uniform";
        case Family::Gamma: return "gamma";
        case Family::ChiSquare: return "chisquare";
        case Family::Laplace: return "laplace";
        case Family::StudentT: return "t";
    }
    return "?";
}

std::string to_string(const DistributionSpec& spec) {
    const bool one = spec.family == Family::Exponential || spec.family == Family::ChiSquare ||
                     spec.family == Family::StudentT;
    std::string s = family_name(spec.family) + "(" + format_param(spec.p1);
    if (!one) s += "," + format_param(spec.p2);
    return s + ")";
}

MomentSummary moments(const DistributionSpec& spec) {
    MomentSummary m;
    switch (spec.family) {
        case Family::Normal:
            m = {spec.p1, spec.p2, 0.0, 3.0, true};
            break;
        case Family::Exponential: {
            const double lam = spec.p1;
            m = {1.0 / lam, 1.0 / (lam * lam), 2.0, 9.0, true};
            break;
        }
        case Family::Uniform: {
            const double w = spec.p2 - spec.p1;
            m = {0.5 * (spec.p1 + spec.p2), w * w / 12.0, 0.0, 9.0 / 5.0, true};
            break;
        }
        case Family::Gamma: {
            const double a = spec.p1, b = spec.p2;
            m = {a / b, a / (b * b), 2.0 / std::sqrt(a), 3.0 + 6.0 / a, true};
            break;
        }
        case Family::ChiSquare: {
            const double nu = spec.p1;
            m = {nu, 2.0 * nu, std::sqrt(8.0 / nu), 3.0 + 12.0 / nu, true};
            break;
        }
        case Family::Laplace: {
            const double b = spec.p2;
            m = {spec.p1, 2.0 * b * b, 0.0, 6.0, true};
            break;
        }
        case Family::StudentT: {
            const double nu = spec.p1;
            if (nu <= 1.0) {
                throw std::domain_error("t(" + format_param(nu) + ") has no mean");
            }
            m.mean = 0.0;
            m.variance = nu > 2.0 ? nu / (nu - 2.0) : kInf;
            if (nu > 3.0) m.skewness = 0.0;
            if (nu > 4.0) m.kurtosis = 3.0 + 6.0 / (nu - 4.0);
            m.eighth_moment_finite = nu > 8.0;
            break;
        }
    }
    return m;
}

double density(const DistributionSpec& spec, double y) {
    switch (spec.family) {
        case Family::Normal: {
            const double var = spec.p2;
            const double d = y - spec.p1;
            return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * std::numbers::pi * var);
        }
        case Family::Exponential:
            return y > 0.0 ? spec.p1 * std::exp(-spec.p1 * y) : 0.0;
        case Family::Uniform:
            return (y >= spec.p1 && y <= spec.p2) ? 1.0 / (spec.p2 - spec.p1) : 0.0;
        case Family::Gamma: {
            if (y <= 0.0) return 0.0;
            const double a = spec.p1, b = spec.p2;
            return std::exp(a * std::log(b) - sf::log_gamma(a) + (a - 1.0) * std::log(y) - b * y);
        }
        case Family::ChiSquare: {
            if (y <= 0.0) return 0.0;
            const double h = 0.5 * spec.p1;
            return std::exp(-h * std::numbers::ln2 - sf::log_gamma(h) + (h - 1.0) * std::log(y) - 0.5 * y);
        }
        case Family::Laplace:
            return std::exp(-std::fabs(y - spec.p1) / spec.p2) / (2.0 * spec.p2);
        case Family::StudentT: {
            const double nu = spec.p1;
            const double norm =
                std::exp(sf::log_gamma(0.5 * (nu + 1.0)) - sf::log_gamma(0.5 * nu)) /
                std::sqrt(nu * std::numbers::pi);
            return norm * std::pow(1.0 + y * y / nu, -0.5 * (nu + 1.0));
        }
    }
    return 0.0;
}

void sample(const DistributionSpec& spec, std::span<double> out, RandomStream& stream) {
    NormalSource normals(stream);
    switch (spec.family) {
        case Family::Normal: {
            const double mu = spec.p1;
            const double sd = std::sqrt(spec.p2);
            for (auto& y : out) y = mu + sd * normals.next();
            break;
        }
        case Family::Exponential:
            for (auto& y : out) y = -std::log(stream.uniform01()) / spec.p1;
            break;
        case Family::Uniform:
            for (auto& y : out) y = spec.p1 + (spec.p2 - spec.p1) * stream.uniform01();
            break;
        case Family::Gamma:
            for (auto& y : out) y = draw_gamma(spec.p1, spec.p2, stream, normals);
            break;
        case Family::ChiSquare:
            for (auto& y : out) y = draw_gamma(0.5 * spec.p1, 0.5, stream, normals);
            break;
        case Family::Laplace: {
            const double mu = spec.p1, b = spec.p2;
            for (auto& y : out) {
                const double u = stream.uniform01();
                y = u < 0.5 ? mu + b * std::log(2.0 * u) : mu - b * std::log(2.0 * (1.0 - u));
            }
            break;
        }
        case Family::StudentT: {
            const double nu = spec.p1;
            for (auto& y : out) {
                const double z = normals.next();
                const double v = draw_gamma(0.5 * nu, 0.5, stream, normals);
                y = z / std::sqrt(v / nu);
            }
            break;
        }
    }
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, RandomStream& stream) {
    std::vector<double> out(n);
    sample(spec, out, stream);
    return out;
}

std::vector<DistributionSpec> catalog() {
    return {
        make_spec(Family::Normal, 0.0, 1.0),
        make_spec(Family::Exponential, 1.0),
        make_spec(Family::Uniform, 0.0, 1.0),
        make_spec(Family::Gamma, 2.0, 1.0),
        make_spec(Family::ChiSquare, 1.0),
        make_spec(Family::Laplace, 2.0, 1.0),
        make_spec(Family::Normal, 0.0, 5.0 / 3.0),
        make_spec(Family::StudentT, 5.0),
    };
}

}  // namespace elcal
