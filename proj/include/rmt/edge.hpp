#pragma once

#include <cstdint>
#include <vector>

#include "rmt/ensembles.hpp"

namespace rmt {

/// Airy function on [-15, 15]: Maclaurin series for |x| <= 5, asymptotic
/// expansion with correction terms for x > 5, backward ODE integration for
/// x < -5. Absolute accuracy ~1e-8 across the window; domain_error outside.
double airy(double x);
double airy_prime(double x);

/// Airy kernel (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y), confluent on the diagonal.
double airy_kernel(double x, double y);

/// Painleve II solution q with q ~ Ai at +infinity:
///   q'' = x q + 2 q^3,  (q, q')(x0) = (Ai, Ai')(x0).
/// Integrated backward on the uniform grid x0, x0-step, ..., x_min with an
/// adaptive embedded Runge-Kutta pair between grid points. A built-in
/// step-halving comparison guards the solution (solver_error on mismatch).
struct Painleve2Solution {
    std::vector<double> x; ///< descending from x0 to x_min
    std::vector<double> q;
    double step = 0;
    double x0 = 0;
};
Painleve2Solution painleve2_solve(double x0 = 8.0, double x_min = -6.0, double step = 1e-3,
                                  bool verify_halving = true);

/// Tracy-Widom F2 table: F2(t) = exp(-int_t^inf (x-t) q(x)^2 dx) on a t-grid.
struct F2Table {
    std::vector<double> t; ///< ascending
    std::vector<double> F;
    Painleve2Solution q;
};
F2Table tracy_widom_table(double t_min = -6.0, double t_max = 5.0, double t_step = 0.01,
                          double ode_step = 1e-3, double x0 = 8.0);

/// CDF lookup with monotone interpolation; clamps outside the grid and sets
/// *clamped when given.
double f2_cdf(const F2Table& table, double t, bool* clamped = nullptr);

/// Low-order truncation (r <= rmax) of the determinantal series for F2 over
/// the Airy kernel; cross-check only, the production path is Painleve II.
double f2_fredholm_truncated(double t, int rmax = 3);

/// Monte Carlo sample of N^{2/3}(lambda_max - 2) for normalized GUE(N).
std::vector<double> edge_statistic_mc(int n_dim, int trials, std::uint64_t seed = kDefaultSeed);

/// KS distance between a sample and the F2 table.
double ks_distance_to_f2(const std::vector<double>& sample, const F2Table& table);

/// Rescaled Hermite function N^{1/12} Psi_N(2 sqrt(N) + x N^{-1/6}); N <= 10^4.
double rescaled_hermite(int n_dim, double x);

} // namespace rmt
