#pragma once

namespace kzp {

// Alpha level and degrees of freedom for a spectral confidence interval.
// Fractional degrees of freedom are allowed (equivalent df of static lag
// windows are generally non-integer).
struct ConfidenceSpec {
    double alpha;  // in (0, 1)
    double nu;     // > 0
};

struct Interval {
    double lower;
    double upper;
};

// Lower-tail chi-square CDF, P(X <= x) for X ~ chi^2(nu). Computed from the
// regularized lower incomplete gamma function (series for small x, continued
// fraction otherwise); absolute error below 1e-12.
double chisq_cdf(double x, double nu);

// Lower-tail chi-square quantile: the x with chisq_cdf(x, nu) == p, solved by
// a bracketed Newton iteration to better than 1e-10 relative error.
double chisq_quantile(double p, double nu);

// Two-sided confidence bounds for a log-scale spectral ordinate:
//   upper = log_ordinate + ln(nu / q(alpha/2, nu))
//   lower = log_ordinate + ln(nu / q(1 - alpha/2, nu))
// with q the lower-tail quantile. Brackets the ordinate for alpha < 0.5.
Interval ci_bounds(double log_ordinate, const ConfidenceSpec& spec);

// Width of the log-scale interval, ln(q(1-alpha/2, nu) / q(alpha/2, nu)).
// Independent of the ordinate and strictly decreasing in nu.
double ci_width(double nu, double alpha);

// Pr(f2 > f1) for two smoothed raw-scale ordinates sharing nu degrees of
// freedom: chisq_cdf(nu * f1_hat / f2_hat, nu).
double p_value_greater(double f1_hat, double f2_hat, double nu);

// Complementary tail: Pr(f2 < f1) = 1 - p_value_greater(...).
double p_value_less(double f1_hat, double f2_hat, double nu);

}  // namespace kzp
