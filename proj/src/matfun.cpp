#include "bwgeom/matfun.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace bwgeom {

namespace {

void check_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw validation_error(msg.str());
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success) {
    throw numerical_error("Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PDMatrix matrix_sqrt(const PDMatrix& s) {
  const EigenDecomposition& d = s.eig();
  const Matrix r = d.eigenvectors *
                   d.eigenvalues.array().sqrt().matrix().asDiagonal() *
                   d.eigenvectors.adjoint();
  return PDMatrix(HermitianMatrix(r));
}

HermitianMatrix lyapunov_solve(const PDMatrix& sigma, const HermitianMatrix& h) {
  check_same_dim(sigma.dim(), h.dim(), "lyapunov_solve");
  const EigenDecomposition& d = sigma.eig();
  Matrix ht = d.eigenvectors.adjoint() * h.mat() * d.eigenvectors;
  for (Index i = 0; i < ht.rows(); ++i) {
    for (Index j = 0; j < ht.cols(); ++j) {
      ht(i, j) /= d.eigenvalues(i) + d.eigenvalues(j);
    }
  }
  return HermitianMatrix(d.eigenvectors * ht * d.eigenvectors.adjoint());
}

Matrix unitary_polar_factor(const InvertibleMatrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m.mat(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

HermitianMatrix matrix_log(const PDMatrix& s) {
  const EigenDecomposition& d = s.eig();
  return HermitianMatrix(d.eigenvectors *
                         d.eigenvalues.array().log().matrix().asDiagonal() *
                         d.eigenvectors.adjoint());
}

PDMatrix matrix_power(const PDMatrix& s, double p) {
  const EigenDecomposition& d = s.eig();
  return PDMatrix(HermitianMatrix(
      d.eigenvectors * d.eigenvalues.array().pow(p).matrix().asDiagonal() *
      d.eigenvectors.adjoint()));
}

HermitianMatrix eigen_pair_apply(const PDMatrix& a, const HermitianMatrix& h,
                                 const std::function<double(double, double)>& phi) {
  check_same_dim(a.dim(), h.dim(), "eigen_pair_apply");
  const EigenDecomposition& d = a.eig();
  Matrix ht = d.eigenvectors.adjoint() * h.mat() * d.eigenvectors;
  for (Index i = 0; i < ht.rows(); ++i) {
    for (Index j = 0; j < ht.cols(); ++j) {
      ht(i, j) *= phi(d.eigenvalues(i), d.eigenvalues(j));
    }
  }
  return HermitianMatrix(d.eigenvectors * ht * d.eigenvectors.adjoint());
}

HermitianMatrix dlog_frechet(const PDMatrix& rho, const HermitianMatrix& h) {
  const double gap_floor = 1e-12 * rho.eig().eigenvalues.maxCoeff();
  return eigen_pair_apply(rho, h, [gap_floor](double li, double lj) {
    // log1p form keeps the divided difference accurate for close eigenvalues
    if (std::abs(li - lj) <= gap_floor) return 2.0 / (li + lj);
    return std::log1p((li - lj) / lj) / (li - lj);
  });
}

}  // namespace bwgeom
