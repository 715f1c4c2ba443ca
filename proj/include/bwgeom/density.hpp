#pragma once

#include <vector>

#include "bwgeom/types.hpp"

namespace bwgeom {

/// Bures-Wasserstein distance on D(n):
/// arccos(Re tr((rho2^{1/2} rho1 rho2^{1/2})^{1/2})), in [0, pi/2].
double bw_distance_dn(const DensityMatrix& a, const DensityMatrix& b);

/// Geodesic between two density matrices: the sphere projection of the
/// ambient segment, evaluated in the segment's own (unnormalised) parameter.
class GeodesicDn {
 public:
  GeodesicDn(const DensityMatrix& start, const DensityMatrix& end);

  struct Sample {
    double t;
    DensityMatrix point;
    HermitianMatrix velocity;  // trace-free (m)-representation
    double speed;
  };

  DensityMatrix operator()(double t) const;
  Sample sample(double t) const;
  HermitianMatrix velocity(double t) const;
  double speed(double t) const;

  double length(int grid = 8192) const;
  std::vector<double> equispaced_arclength_params(int steps, int grid = 8192) const;

  const DensityMatrix& start() const { return start_; }
  const DensityMatrix& end() const { return end_; }
  const PDMatrix& sqrt_start() const { return sqrt_start_; }
  const InvertibleMatrix& rotated_sqrt_end() const { return rotated_sqrt_end_; }

 private:
  DensityMatrix start_;
  DensityMatrix end_;
  PDMatrix sqrt_start_;
  InvertibleMatrix rotated_sqrt_end_;
};

}  // namespace bwgeom
