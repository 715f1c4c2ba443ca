#pragma once

#include <functional>

#include "bwgeom/types.hpp"

namespace bwgeom {

/// Full eigendecomposition of a Hermitian matrix, eigenvalues ascending.
EigenDecomposition hermitian_eig(const HermitianMatrix& a);

/// Unique positive definite square root.
PDMatrix matrix_sqrt(const PDMatrix& s);

/// The Lyapunov operator L_Sigma: unique Hermitian X with
/// Sigma X + X Sigma = H.
HermitianMatrix lyapunov_solve(const PDMatrix& sigma, const HermitianMatrix& h);

/// Unitary factor U of the polar decomposition M = (M M*)^{1/2} U,
/// computed as W V* from the SVD M = W S V*.
Matrix unitary_polar_factor(const InvertibleMatrix& m);

HermitianMatrix matrix_log(const PDMatrix& s);

/// Real matrix power s^p through the eigendecomposition.
PDMatrix matrix_power(const PDMatrix& s, double p);

/// Frechet derivative of the matrix logarithm at rho in direction h:
/// in rho's eigenbasis, entry (i,j) is h~_ij (log l_i - log l_j)/(l_i - l_j),
/// with the divided difference replaced by 1/l_i on degenerate gaps.
HermitianMatrix dlog_frechet(const PDMatrix& rho, const HermitianMatrix& h);

/// Transforms h in the eigenbasis of a: result = U (phi(l_i, l_j) .* U* h U) U*.
/// phi must be symmetric in its arguments for the result to be Hermitian.
HermitianMatrix eigen_pair_apply(const PDMatrix& a, const HermitianMatrix& h,
                                 const std::function<double(double, double)>& phi);

}  // namespace bwgeom
