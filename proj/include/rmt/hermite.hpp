#pragma once

#include <complex>

namespace rmt {

/// Monic Hermite polynomial H_k(x) by upward recursion H_{k+1} = x H_k - k H_{k-1}.
/// Overflows for large k at large |x|; the normalized functions below are the
/// stable route (used automatically by every kernel/density evaluator).
double hermite_poly(int k, double x);

/// Hermite function Psi_k(x) = (2 pi)^{-1/4} (k!)^{-1/2} e^{-x^2/4} H_k(x),
/// evaluated by the normalized recursion
///   Psi_{k+1} = (x Psi_k - sqrt(k) Psi_{k-1}) / sqrt(k+1)
/// with exponent tracking, so neither k! nor the Gaussian factor is ever
/// formed explicitly. Stable for k up to 10^4 and |x| in the oscillatory and
/// tail regions alike.
double hermite_function(int k, double x);

/// Psi_k'(x) = -(x/2) Psi_k(x) + sqrt(k) Psi_{k-1}(x).
double hermite_function_prime(int k, double x);

/// N-th kernel K_N(x,y) = sum_{k<N} Psi_k(x) Psi_k(y), evaluated in the
/// Christoffel-Darboux ratio form; |x - y| < 1e-6 switches to the confluent
/// derivative form.
double hermite_kernel(int n, double x, double y);

/// Same kernel by direct summation (cross-check path).
double hermite_kernel_direct(int n, double x, double y);

/// Averaged eigenvalue density of GUE(N): unnormalized p_N(mu) = K_N(mu,mu)/N,
/// or normalized q_N(lambda) = sqrt(N) p_N(sqrt(N) lambda).
double gue_density_exact(int n, double x, bool normalized);

/// Averaged eigenvalue density of Ginibre(N):
/// unnormalized p_N(z) = e^{-|z|^2}/(N pi) sum_{k<N} |z|^{2k}/k!,
/// normalized q_N(z) = N p_N(sqrt(N) z). Evaluated through the regularized
/// partial exponential sum, in log-space when the direct sum would underflow.
double ginibre_density_exact(int n, std::complex<double> z, bool normalized);

} // namespace rmt
