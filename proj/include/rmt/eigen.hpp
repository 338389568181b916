#pragma once

#include <complex>
#include <vector>

#include "rmt/matrix.hpp"

namespace rmt {

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Unitary Householder reduction to a real symmetric tridiagonal matrix,
/// then implicit-shift QL on the tridiagonal. Throws contract_error for
/// non-Hermitian input, solver_error if the QL sweep cap (50 N) is hit.
std::vector<double> hermitian_eigenvalues(const CMatrix& m, double tol = 1e-10);

/// Real-symmetric fast path (same contract).
std::vector<double> symmetric_eigenvalues(const RMatrix& m, double tol = 1e-10);

/// Implicit-shift QL on a real symmetric tridiagonal matrix given by its
/// diagonal d (size n) and subdiagonal e (size n-1). Returns ascending values.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e, double tol = 1e-10);

/// Eigenvalues of a general complex matrix, unordered.
///
/// Householder reduction to Hessenberg form, then single-shift QR with
/// deflation (Wilkinson shift, exceptional shifts on stagnation).
std::vector<cdouble> general_eigenvalues(const CMatrix& m, double tol = 1e-10);

} // namespace rmt
