#pragma once

#include <vector>

#include "bwgeom/types.hpp"

namespace bwgeom {

/// The submersion pi: GL(n) -> P(n), M |-> M M*.
PDMatrix submersion_pi(const InvertibleMatrix& m);

/// Differential of pi at M applied to an ambient direction A: A M* + M A*.
HermitianMatrix submersion_differential(const InvertibleMatrix& m, const Matrix& a);

/// Orthogonal projection of an ambient direction onto the horizontal
/// subspace {H M : H Hermitian} at M. The result is in general not
/// Hermitian; the discarded remainder is vertical.
Matrix horizontal_project(const InvertibleMatrix& m, const Matrix& a);

/// Horizontal lift of the tangent H at Sigma to the fiber point M
/// (requires M M* = Sigma): returns L_Sigma(H) M.
Matrix horizontal_lift(const PDMatrix& sigma, const HermitianMatrix& h,
                       const InvertibleMatrix& m);

/// Bures-Wasserstein metric at Sigma: (1/2) Re tr(L_Sigma(H) K).
double bw_metric(const PDMatrix& sigma, const HermitianMatrix& h,
                 const HermitianMatrix& k);

/// Bures-Wasserstein distance on P(n):
/// [tr S + tr T - 2 tr((S^{1/2} T S^{1/2})^{1/2})]^{1/2}.
double bw_distance_pn(const PDMatrix& a, const PDMatrix& b);

/// Geodesic between two points of P(n). The square roots and aligning
/// unitary are computed once; evaluation is two multiplications.
class GeodesicPn {
 public:
  GeodesicPn(const PDMatrix& start, const PDMatrix& end);

  struct Sample {
    double t;
    PDMatrix point;
    HermitianMatrix velocity;  // (m)-representation of the downstairs velocity
    double speed;              // metric norm of velocity
  };

  PDMatrix operator()(double t) const;
  Sample sample(double t) const;
  HermitianMatrix velocity(double t) const;
  double speed(double t) const;

  /// Trapezoid length of the curve over [0,1] on a fine grid.
  double length(int grid = 8192) const;

  /// Parameters t_0 = 0 < ... < t_steps = 1 equispaced in integrated length.
  std::vector<double> equispaced_arclength_params(int steps, int grid = 8192) const;

  const PDMatrix& start() const { return start_; }
  const PDMatrix& end() const { return end_; }
  const PDMatrix& sqrt_start() const { return sqrt_start_; }
  const InvertibleMatrix& rotated_sqrt_end() const { return rotated_sqrt_end_; }

 private:
  Matrix ambient(double t) const;

  PDMatrix start_;
  PDMatrix end_;
  PDMatrix sqrt_start_;
  InvertibleMatrix rotated_sqrt_end_;
};

/// Exponential map of the BW metric: Sigma + H + L_Sigma(H) Sigma L_Sigma(H).
/// Throws domain_error when the result leaves the positive definite cone.
PDMatrix exp_pn(const PDMatrix& sigma, const HermitianMatrix& h);

/// Logarithm map, the t=0 velocity of the geodesic from Sigma to Lambda.
HermitianMatrix log_pn(const PDMatrix& sigma, const PDMatrix& lambda);

}  // namespace bwgeom
