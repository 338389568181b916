#pragma once

#include <span>
#include <string>
#include <vector>

#include "rmt/combinatorics.hpp"

namespace rmt {

/// Polynomial in u = N^{-2} with exact rational coefficients.
struct NInvSquaredPoly {
    std::vector<BigRat> coeffs; ///< c_0 + c_1 u + c_2 u^2 + ...

    BigRat evaluate(long n_dim) const; ///< substitute u = 1/n^2
    NInvSquaredPoly operator+(const NInvSquaredPoly& o) const;
    NInvSquaredPoly scaled(const BigRat& f) const;
    bool operator==(const NInvSquaredPoly&) const = default;
    std::string to_string() const; ///< "1 + 5/1 u + 3/2 u^2" style
    void trim();
};

/// b_k as a symbolic polynomial in N^{-2}:
/// b_1 = 1, b_2 = 1 + 1/(2 N^2), b_{k+1} = b_k + k(k+1)/(4 N^2) b_{k-1} (k >= 2).
NInvSquaredPoly hz_bk_symbolic(int k);

/// b_k at a numeric dimension, exact.
BigRat hz_bk(int k, long n_dim);

/// C_k * b_k as a genus polynomial: must equal gue_moment_exact(2k).
MomentPolynomial hz_moment(int k);

/// Truncated-series check of the generating function identity
/// ((1+s)/(1-s))^N = 1 + sum_k b_k (2Ns)^{k+1}/(k+1)!  on an s-grid.
struct GeneratingCheck {
    double max_residual = 0;
    std::vector<double> residuals;
};
GeneratingCheck hz_generating_check(int n_dim, std::span<const double> s_grid, int k_trunc);

/// C_k exp(k^3 / (2 N^2)) — the moment bound.
double moment_upper_bound(int k, long n_dim);

/// N / (2+eps)^{2k} * 4^k / k^{3/2} * exp(k^3/(2N^2)) — the tail bound.
double lambda_max_tail(double eps, int k, long n_dim);

/// Tail bound at threshold t with the optimized choices k = floor(N^{2/3} sqrt(t)),
/// eps = t N^{-2/3}.
double lambda_max_tail_optimized(double t, long n_dim);

/// The N -> infinity closed form t^{-3/4} exp(-t^{3/2}/2).
double lambda_max_tail_limit(double t);

} // namespace rmt
