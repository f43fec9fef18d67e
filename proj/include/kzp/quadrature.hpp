#pragma once

#include <functional>

namespace kzp {

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
// The integrand must be continuous on the interval; split at known kinks
// before calling.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace kzp
