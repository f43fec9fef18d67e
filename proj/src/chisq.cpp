#include "kzp/chisq.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kzp {

namespace {

// Regularized lower incomplete gamma P(a, x) by its power series; converges
// quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz's continued fraction;
// preferred for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double chisq_log_pdf(double x, double nu) {
    const double a = 0.5 * nu;
    return (a - 1.0) * std::log(x) - 0.5 * x - a * std::numbers::ln2 - std::lgamma(a);
}

}  // namespace

double chisq_cdf(double x, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("chisq_cdf: nu must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("chisq_cdf: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double a = 0.5 * nu;
    const double xs = 0.5 * x;
    if (xs < a + 1.0) return gamma_p_series(a, xs);
    return 1.0 - gamma_q_contfrac(a, xs);
}

double chisq_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("chisq_quantile: p must lie in (0, 1)");
    if (!(nu > 0.0)) throw std::invalid_argument("chisq_quantile: nu must be positive");

    double lo = 0.0;
    double hi = std::fmax(nu, 1.0);
    while (chisq_cdf(hi, nu) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("chisq_quantile: bracketing failed");
    }

    // Newton steps on the CDF, falling back to bisection whenever a step
    // leaves the bracket.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double residual = chisq_cdf(x, nu) - p;
        if (residual > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        double next = x - residual / std::exp(chisq_log_pdf(x, nu));
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - x) <= 1e-14 * std::fmax(x, 1e-300)) {
            return next;
        }
        x = next;
    }
    return x;
}

Interval ci_bounds(double log_ordinate, const ConfidenceSpec& spec) {
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
        throw std::invalid_argument("ci_bounds: alpha must lie in (0, 1)");
    }
    if (!(spec.nu > 0.0)) throw std::invalid_argument("ci_bounds: nu must be positive");
    const double upper = log_ordinate + std::log(spec.nu / chisq_quantile(spec.alpha / 2.0, spec.nu));
    const double lower =
        log_ordinate + std::log(spec.nu / chisq_quantile(1.0 - spec.alpha / 2.0, spec.nu));
    return Interval{lower, upper};
}

double ci_width(double nu, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("ci_width: alpha must lie in (0, 1)");
    }
    if (!(nu > 0.0)) throw std::invalid_argument("ci_width: nu must be positive");
    return std::log(chisq_quantile(1.0 - alpha / 2.0, nu) / chisq_quantile(alpha / 2.0, nu));
}

double p_value_greater(double f1_hat, double f2_hat, double nu) {
    if (!(f1_hat > 0.0) || !(f2_hat > 0.0)) {
        throw std::invalid_argument("p_value: ordinates must be positive");
    }
    return chisq_cdf(nu * f1_hat / f2_hat, nu);
}

double p_value_less(double f1_hat, double f2_hat, double nu) {
    return 1.0 - p_value_greater(f1_hat, f2_hat, nu);
}

}  // namespace kzp
