#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace bwgeom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value violated a domain invariant (Hermiticity, positivity, trace, norm).
struct validation_error : error {
  using error::error;
};

/// An input file is malformed.
struct parse_error : error {
  using error::error;
};

/// A numerical routine failed (non-convergence, impossible value).
struct numerical_error : error {
  using error::error;
};

/// A map was evaluated outside the region where it is defined.
struct domain_error : error {
  using error::error;
};

/// Relative validation tolerances. Override once at startup; every validator
/// reads this shared instance.
struct Tolerances {
  double herm = 1e-12;  // Hermiticity defect vs. largest |entry|
  double pd = 1e-10;    // smallest eigenvalue vs. largest eigenvalue
  double inv = 1e-12;   // smallest singular value vs. largest singular value
};

Tolerances& tolerances();

struct EigenDecomposition {
  RVector eigenvalues;  // ascending
  Matrix eigenvectors;  // unitary, one eigenvector per column
};

/// Square complex matrix equal to its conjugate transpose. Construction
/// symmetrises (A + A*)/2 when the defect is within tolerance and rejects
/// the input otherwise, so stored matrices are exactly Hermitian.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& a);

  static HermitianMatrix Zero(Index n);
  static HermitianMatrix Identity(Index n);

  const Matrix& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  struct trusted_tag {};
  HermitianMatrix(Matrix m, trusted_tag) : mat_(std::move(m)) {}

  Matrix mat_;

  friend class PDMatrix;
};

/// Strictly positive definite Hermitian matrix, a point of P(n). The
/// eigendecomposition computed for validation is kept with the value.
class PDMatrix {
 public:
  explicit PDMatrix(HermitianMatrix base);
  explicit PDMatrix(const Matrix& a) : PDMatrix(HermitianMatrix(a)) {}

  const HermitianMatrix& base() const { return base_; }
  const Matrix& mat() const { return base_.mat(); }
  Index dim() const { return base_.dim(); }
  const EigenDecomposition& eig() const { return eig_; }

 private:
  HermitianMatrix base_;
  EigenDecomposition eig_;
};

/// Unit-trace PDMatrix, a point of D(n). Inputs within 1e-9 of unit trace
/// are renormalised; anything further off is rejected.
class DensityMatrix {
 public:
  explicit DensityMatrix(PDMatrix p);
  explicit DensityMatrix(const Matrix& a) : DensityMatrix(PDMatrix(a)) {}

  const PDMatrix& pd() const { return pd_; }
  const Matrix& mat() const { return pd_.mat(); }
  Index dim() const { return pd_.dim(); }
  const EigenDecomposition& eig() const { return pd_.eig(); }

 private:
  PDMatrix pd_;
};

/// Element of GL(n): square complex matrix with smallest singular value
/// bounded away from zero.
class InvertibleMatrix {
 public:
  explicit InvertibleMatrix(Matrix a);

  const Matrix& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
};

/// Strictly positive weight vector, a point of M+(Omega).
class PositiveMeasure {
 public:
  explicit PositiveMeasure(RVector w);

  const RVector& weights() const { return weights_; }
  Index dim() const { return weights_.size(); }

 private:
  RVector weights_;
};

/// PositiveMeasure summing to one, a point of P+(Omega).
class ProbVector {
 public:
  explicit ProbVector(PositiveMeasure base);
  explicit ProbVector(RVector w) : ProbVector(PositiveMeasure(std::move(w))) {}

  const PositiveMeasure& measure() const { return base_; }
  const RVector& weights() const { return base_.weights(); }
  Index dim() const { return base_.dim(); }

 private:
  PositiveMeasure base_;
};

/// Unit vector in C^n representing a pure state.
class PureState {
 public:
  explicit PureState(CVector v);

  const CVector& vec() const { return vec_; }
  Index dim() const { return vec_.size(); }

 private:
  CVector vec_;
};

}  // namespace bwgeom
