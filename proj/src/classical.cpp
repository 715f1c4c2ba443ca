#include "bwgeom/classical.hpp"

#include <cmath>

#include "detail.hpp"

namespace bwgeom {

namespace {

void check_dims(Index a, Index b, const char* what) {
  if (a != b) throw validation_error(std::string(what) + ": dimension mismatch");
}

}  // namespace

double hellinger_distance(const PositiveMeasure& mu, const PositiveMeasure& nu) {
  check_dims(mu.dim(), nu.dim(), "hellinger_distance");
  const double sq =
      (mu.weights().array().sqrt() - nu.weights().array().sqrt()).square().sum();
  return std::sqrt(sq);
}

double fisher_metric(const PositiveMeasure& mu, const RVector& a, const RVector& b) {
  check_dims(mu.dim(), a.size(), "fisher_metric");
  check_dims(mu.dim(), b.size(), "fisher_metric");
  return (a.array() * b.array() / mu.weights().array()).sum();
}

double fisher_distance(const ProbVector& p, const ProbVector& q) {
  check_dims(p.dim(), q.dim(), "fisher_distance");
  const double overlap = (p.weights().array() * q.weights().array()).sqrt().sum();
  return detail::acos_clamped(overlap);
}

RVector e_representation(const PositiveMeasure& mu, const RVector& a) {
  check_dims(mu.dim(), a.size(), "e_representation");
  return a.array() / mu.weights().array();
}

double sqrt_map_isometry_check(const PositiveMeasure& mu, const RVector& a,
                               const RVector& b) {
  check_dims(mu.dim(), a.size(), "sqrt_map_isometry_check");
  check_dims(mu.dim(), b.size(), "sqrt_map_isometry_check");
  const double lhs = 4.0 * (a.array() * b.array()).sum();
  // push a, b through ds_mu(x) = 2 mu.*x and evaluate the Fisher metric at mu^2
  const RVector da = 2.0 * (mu.weights().array() * a.array());
  const RVector db = 2.0 * (mu.weights().array() * b.array());
  const double rhs =
      (da.array() * db.array() / mu.weights().array().square()).sum();
  return std::abs(lhs - rhs);
}

}  // namespace bwgeom
