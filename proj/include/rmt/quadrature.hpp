#pragma once

#include <functional>

namespace rmt {

/// Adaptive Gauss–Kronrod (G7,K15) integration of f over [a, b].
///
/// The absolute tolerance is split across bisections; throws solver_error if
/// the recursion depth cap is hit before the estimate settles.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-8);

/// Single non-adaptive K15 panel; returns the Kronrod value and |K15-G7| as
/// the error estimate.
double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err);

} // namespace rmt
