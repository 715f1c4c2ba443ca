#include "bwgeom/types.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "bwgeom/matfun.hpp"

namespace bwgeom {

Tolerances& tolerances() {
  static Tolerances instance;
  return instance;
}

namespace {

void check_square(const Matrix& a, const char* what) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << what << " must be a square matrix with n >= 1, got " << a.rows()
        << "x" << a.cols();
    throw validation_error(msg.str());
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const Matrix& a) {
  check_square(a, "HermitianMatrix");
  const double max_abs = a.cwiseAbs().maxCoeff();
  const double defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tolerances().herm * max_abs) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |A - A*| reaches " << defect
        << ", tolerance " << tolerances().herm * max_abs;
    throw validation_error(msg.str());
  }
  mat_ = 0.5 * (a + a.adjoint());
}

HermitianMatrix HermitianMatrix::Zero(Index n) {
  return HermitianMatrix(Matrix::Zero(n, n), trusted_tag{});
}

HermitianMatrix HermitianMatrix::Identity(Index n) {
  return HermitianMatrix(Matrix::Identity(n, n), trusted_tag{});
}

PDMatrix::PDMatrix(HermitianMatrix base) : base_(std::move(base)) {
  eig_ = hermitian_eig(base_);
  const double lmax = eig_.eigenvalues.maxCoeff();
  const double lmin = eig_.eigenvalues.minCoeff();
  if (!(lmax > 0.0) || lmin <= tolerances().pd * lmax) {
    std::ostringstream msg;
    msg << "matrix is not positive definite: smallest eigenvalue " << lmin
        << " (largest " << lmax << ", threshold " << tolerances().pd * lmax
        << ")";
    throw validation_error(msg.str());
  }
}

DensityMatrix::DensityMatrix(PDMatrix p) : pd_(std::move(p)) {
  const double tr = pd_.mat().trace().real();
  const double off = std::abs(tr - 1.0);
  if (off > 1e-9) {
    std::ostringstream msg;
    msg << "matrix trace " << tr << " is not 1 (tolerance 1e-9)";
    throw validation_error(msg.str());
  }
  if (off > 1e-12) {
    pd_ = PDMatrix(HermitianMatrix(pd_.mat() / tr));
  }
}

InvertibleMatrix::InvertibleMatrix(Matrix a) : mat_(std::move(a)) {
  check_square(mat_, "InvertibleMatrix");
  Eigen::JacobiSVD<Matrix> svd(mat_);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (!(smax > 0.0) || smin <= tolerances().inv * smax) {
    std::ostringstream msg;
    msg << "matrix is singular: smallest singular value " << smin
        << " (largest " << smax << ", threshold " << tolerances().inv * smax
        << ")";
    throw validation_error(msg.str());
  }
}

PositiveMeasure::PositiveMeasure(RVector w) : weights_(std::move(w)) {
  if (weights_.size() < 1) {
    throw validation_error("measure needs at least one weight");
  }
  for (Index i = 0; i < weights_.size(); ++i) {
    // 1e-300 floor guards against denormal underflow in 1/mu_i
    if (!(weights_(i) > 1e-300)) {
      std::ostringstream msg;
      msg << "measure weights must be strictly positive, entry " << i << " is "
          << weights_(i);
      throw validation_error(msg.str());
    }
  }
}

ProbVector::ProbVector(PositiveMeasure base) : base_(std::move(base)) {
  const double sum = base_.weights().sum();
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1 within 1e-12";
    throw validation_error(msg.str());
  }
}

PureState::PureState(CVector v) : vec_(std::move(v)) {
  if (vec_.size() < 1) {
    throw validation_error("state vector needs at least one entry");
  }
  const double nrm = vec_.norm();
  if (std::abs(nrm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "state vector norm " << nrm << " is not 1 within 1e-12";
    throw validation_error(msg.str());
  }
}

}  // namespace bwgeom
