#include "bwgeom/density.hpp"

#include <cmath>

#include "bwgeom/bw_core.hpp"
#include "bwgeom/matfun.hpp"
#include "detail.hpp"

namespace bwgeom {

namespace {

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  const Matrix sb = matrix_sqrt(b.pd()).mat();
  const HermitianMatrix inner(sb * a.mat() * sb);
  const EigenDecomposition d = hermitian_eig(inner);
  double acc = 0.0;
  for (Index i = 0; i < d.eigenvalues.size(); ++i) {
    acc += std::sqrt(std::max(d.eigenvalues(i), 0.0));
  }
  return acc;
}

}  // namespace

double bw_distance_dn(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw validation_error("bw_distance_dn: dimension mismatch");
  }
  if (detail::lexicographic_less(b.mat(), a.mat())) return bw_distance_dn(b, a);
  return detail::acos_clamped(fidelity(a, b));
}

GeodesicDn::GeodesicDn(const DensityMatrix& start, const DensityMatrix& end)
    : start_(start),
      end_(end),
      sqrt_start_(matrix_sqrt(start.pd())),
      rotated_sqrt_end_([&] {
        if (start.dim() != end.dim()) {
          throw validation_error("GeodesicDn: dimension mismatch");
        }
        const Matrix sqrt_end = matrix_sqrt(end.pd()).mat();
        const Matrix u =
            unitary_polar_factor(InvertibleMatrix(sqrt_end * sqrt_start_.mat()));
        return InvertibleMatrix(sqrt_end * u);
      }()) {}

DensityMatrix GeodesicDn::operator()(double t) const {
  const Matrix c = (1.0 - t) * sqrt_start_.mat() + t * rotated_sqrt_end_.mat();
  const Matrix ct = c / c.norm();
  return DensityMatrix(PDMatrix(HermitianMatrix(ct * ct.adjoint())));
}

HermitianMatrix GeodesicDn::velocity(double t) const {
  const Matrix c = (1.0 - t) * sqrt_start_.mat() + t * rotated_sqrt_end_.mat();
  const Matrix cd = rotated_sqrt_end_.mat() - sqrt_start_.mat();
  const double nrm = c.norm();
  const double nrm_dot = (cd * c.adjoint()).trace().real() / nrm;
  const Matrix ct = c / nrm;
  const Matrix ct_dot = cd / nrm - c * (nrm_dot / (nrm * nrm));
  return HermitianMatrix(ct_dot * ct.adjoint() + ct * ct_dot.adjoint());
}

GeodesicDn::Sample GeodesicDn::sample(double t) const {
  DensityMatrix point = (*this)(t);
  HermitianMatrix vel = velocity(t);
  const double sp = std::sqrt(std::max(bw_metric(point.pd(), vel, vel), 0.0));
  return {t, std::move(point), std::move(vel), sp};
}

double GeodesicDn::speed(double t) const { return sample(t).speed; }

double GeodesicDn::length(int grid) const {
  return detail::trapezoid_length([this](double t) { return speed(t); }, grid);
}

std::vector<double> GeodesicDn::equispaced_arclength_params(int steps, int grid) const {
  return detail::equispaced_in_length([this](double t) { return speed(t); }, steps,
                                      grid);
}

}  // namespace bwgeom
