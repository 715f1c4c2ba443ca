#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "bwgeom/types.hpp"

namespace bwgeom::detail {

// Snaps an arccos argument to [-1, 1] when it is within window of the
// boundary on either side, so that coincident inputs give a distance of
// exactly zero. Anything further out is a numerical failure.
inline double acos_clamped(double x, double window = 1e-12) {
  if (x > 1.0 - window) {
    if (x > 1.0 + window) {
      std::ostringstream msg;
      msg << "arccos argument " << x << " is outside [-1, 1]";
      throw numerical_error(msg.str());
    }
    return 0.0;
  }
  if (x < -1.0 + window) {
    if (x < -1.0 - window) {
      std::ostringstream msg;
      msg << "arccos argument " << x << " is outside [-1, 1]";
      throw numerical_error(msg.str());
    }
    return std::acos(-1.0);
  }
  return std::acos(x);
}

// Square root of a distance radicand: values within the round-off window of
// zero collapse to zero, genuinely negative values are an error.
inline double sqrt_clamped(double radicand, double window) {
  if (std::abs(radicand) <= window) return 0.0;
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "distance radicand " << radicand << " is negative beyond round-off";
    throw numerical_error(msg.str());
  }
  return std::sqrt(radicand);
}

// Orders a pair of matrices lexicographically so that symmetric quantities
// are computed in a canonical argument order (making them exactly symmetric).
inline bool lexicographic_less(const Matrix& a, const Matrix& b) {
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).real() != b(i, j).real()) return a(i, j).real() < b(i, j).real();
      if (a(i, j).imag() != b(i, j).imag()) return a(i, j).imag() < b(i, j).imag();
    }
  }
  return false;
}

// Cumulative trapezoid table of speed over [0,1], inverted at equispaced
// length fractions. Endpoints are pinned to 0 and 1 exactly.
std::vector<double> equispaced_in_length(const std::function<double(double)>& speed,
                                         int steps, int grid);

double trapezoid_length(const std::function<double(double)>& speed, int grid);

}  // namespace bwgeom::detail
