#include "kzp/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzp/chisq.hpp"
#include "kzp/lag_window.hpp"

namespace kzp {

double static_resolution_limit(int n) {
    if (n < 2) throw std::invalid_argument("resolution limit: n must be at least 2");
    return 6.0 * std::numbers::pi / n;
}

bool resolvable_by_static(int n, double lambda_a, double lambda_b) {
    if (!(lambda_a >= 0.0 && lambda_a <= std::numbers::pi) ||
        !(lambda_b >= 0.0 && lambda_b <= std::numbers::pi)) {
        throw std::invalid_argument("resolvable_by_static: frequencies must lie in [0, pi]");
    }
    return std::fabs(lambda_b - lambda_a) > static_resolution_limit(n);
}

BoundsReport truncation_bounds(WindowKind kind, int n, double delta_lambda) {
    if (n < 2) throw std::invalid_argument("truncation_bounds: n must be at least 2");
    if (!(delta_lambda > 0.0 && delta_lambda <= std::numbers::pi)) {
        throw std::invalid_argument("truncation_bounds: delta_lambda must lie in (0, pi]");
    }
    const StaticWindowSpec spec{kind, 1};
    BoundsReport report;
    report.kind = kind;
    report.n = n;
    report.delta_lambda = delta_lambda;
    report.lower_m = spec.bandwidth_constant() * std::numbers::pi / delta_lambda;
    report.upper_m = spec.df_constant() * static_cast<double>(n) / 6.0;
    report.feasible = delta_lambda > static_resolution_limit(n);
    if (report.feasible) {
        report.m_min = static_cast<int>(std::ceil(report.lower_m));
        report.m_max = static_cast<int>(std::ceil(report.upper_m)) - 1;
        report.m_median = (report.m_min + report.m_max) / 2;
    }
    return report;
}

std::vector<CiCurvePoint> ci_comparison_curves(int n, double pos, double alpha) {
    if (!(pos > 0.0 && pos < 1.0)) {
        throw std::invalid_argument("ci_comparison_curves: pos must lie in (0, 1)");
    }
    const int max_width = static_cast<int>(std::floor(pos * n + 1e-9));
    if (max_width < 3) {
        throw std::invalid_argument("ci_comparison_curves: pos * n must be at least 3");
    }

    std::vector<CiCurvePoint> points;
    for (int w = 3; w <= max_width; w += 2) {
        points.push_back(CiCurvePoint{"dynamic", w, 2.0 * w, ci_width(2.0 * w, alpha)});
    }
    for (const WindowKind kind : kAllWindowKinds) {
        const BoundsReport report = truncation_bounds(kind, n, std::numbers::pi);
        for (const int m : {report.m_min, report.m_median, report.m_max}) {
            const double nu = equivalent_df(kind, n, m);
            points.push_back(CiCurvePoint{window_name(kind), m, nu, ci_width(nu, alpha)});
        }
    }
    return points;
}

}  // namespace kzp
