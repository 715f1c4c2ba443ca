#include "bwgeom/bw_core.hpp"

#include <cmath>
#include <sstream>

#include "bwgeom/matfun.hpp"
#include "detail.hpp"

namespace bwgeom {

namespace {

void check_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw validation_error(msg.str());
  }
}

// tr((S^{1/2} T S^{1/2})^{1/2}) with the inner eigenvalues floored at zero;
// genuine PD violations were already rejected by the input types.
double cross_fidelity(const PDMatrix& a, const PDMatrix& b) {
  const Matrix sa = matrix_sqrt(a).mat();
  const HermitianMatrix inner(sa * b.mat() * sa);
  const EigenDecomposition d = hermitian_eig(inner);
  double acc = 0.0;
  for (Index i = 0; i < d.eigenvalues.size(); ++i) {
    acc += std::sqrt(std::max(d.eigenvalues(i), 0.0));
  }
  return acc;
}

}  // namespace

PDMatrix submersion_pi(const InvertibleMatrix& m) {
  return PDMatrix(HermitianMatrix(m.mat() * m.mat().adjoint()));
}

HermitianMatrix submersion_differential(const InvertibleMatrix& m, const Matrix& a) {
  check_same_dim(m.dim(), a.rows(), "submersion_differential");
  check_same_dim(m.dim(), a.cols(), "submersion_differential");
  return HermitianMatrix(a * m.mat().adjoint() + m.mat() * a.adjoint());
}

Matrix horizontal_project(const InvertibleMatrix& m, const Matrix& a) {
  const PDMatrix sigma = submersion_pi(m);
  const HermitianMatrix h = lyapunov_solve(sigma, submersion_differential(m, a));
  return h.mat() * m.mat();
}

Matrix horizontal_lift(const PDMatrix& sigma, const HermitianMatrix& h,
                       const InvertibleMatrix& m) {
  check_same_dim(sigma.dim(), h.dim(), "horizontal_lift");
  check_same_dim(sigma.dim(), m.dim(), "horizontal_lift");
  const Matrix fiber = m.mat() * m.mat().adjoint();
  const double defect = (fiber - sigma.mat()).norm();
  if (defect > 1e-10 * sigma.mat().norm()) {
    std::ostringstream msg;
    msg << "horizontal_lift: M M* differs from Sigma by " << defect
        << " in Frobenius norm";
    throw validation_error(msg.str());
  }
  return lyapunov_solve(sigma, h).mat() * m.mat();
}

double bw_metric(const PDMatrix& sigma, const HermitianMatrix& h,
                 const HermitianMatrix& k) {
  check_same_dim(sigma.dim(), h.dim(), "bw_metric");
  check_same_dim(sigma.dim(), k.dim(), "bw_metric");
  return 0.5 * (lyapunov_solve(sigma, h).mat() * k.mat()).trace().real();
}

double bw_distance_pn(const PDMatrix& a, const PDMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "bw_distance_pn");
  if (detail::lexicographic_less(b.mat(), a.mat())) return bw_distance_pn(b, a);
  const double tra = a.mat().trace().real();
  const double trb = b.mat().trace().real();
  const double radicand = tra + trb - 2.0 * cross_fidelity(a, b);
  return detail::sqrt_clamped(radicand, 1e-12 * std::max(1.0, tra + trb));
}

GeodesicPn::GeodesicPn(const PDMatrix& start, const PDMatrix& end)
    : start_(start),
      end_(end),
      sqrt_start_(matrix_sqrt(start)),
      rotated_sqrt_end_([&] {
        check_same_dim(start.dim(), end.dim(), "GeodesicPn");
        const Matrix sqrt_end = matrix_sqrt(end).mat();
        const Matrix u =
            unitary_polar_factor(InvertibleMatrix(sqrt_end * sqrt_start_.mat()));
        return InvertibleMatrix(sqrt_end * u);
      }()) {}

Matrix GeodesicPn::ambient(double t) const {
  return (1.0 - t) * sqrt_start_.mat() + t * rotated_sqrt_end_.mat();
}

PDMatrix GeodesicPn::operator()(double t) const {
  const Matrix c = ambient(t);
  return PDMatrix(HermitianMatrix(c * c.adjoint()));
}

HermitianMatrix GeodesicPn::velocity(double t) const {
  const Matrix c = ambient(t);
  const Matrix d = rotated_sqrt_end_.mat() - sqrt_start_.mat();
  return HermitianMatrix(d * c.adjoint() + c * d.adjoint());
}

GeodesicPn::Sample GeodesicPn::sample(double t) const {
  PDMatrix point = (*this)(t);
  HermitianMatrix vel = velocity(t);
  const double sp = std::sqrt(std::max(bw_metric(point, vel, vel), 0.0));
  return {t, std::move(point), std::move(vel), sp};
}

double GeodesicPn::speed(double t) const { return sample(t).speed; }

double GeodesicPn::length(int grid) const {
  return detail::trapezoid_length([this](double t) { return speed(t); }, grid);
}

std::vector<double> GeodesicPn::equispaced_arclength_params(int steps, int grid) const {
  return detail::equispaced_in_length([this](double t) { return speed(t); }, steps,
                                      grid);
}

PDMatrix exp_pn(const PDMatrix& sigma, const HermitianMatrix& h) {
  check_same_dim(sigma.dim(), h.dim(), "exp_pn");
  const Matrix x = lyapunov_solve(sigma, h).mat();
  const Matrix r = sigma.mat() + h.mat() + x * sigma.mat() * x;
  try {
    return PDMatrix(HermitianMatrix(r));
  } catch (const validation_error&) {
    throw domain_error(
        "exp_pn: the result left the positive definite cone (tangent too large)");
  }
}

HermitianMatrix log_pn(const PDMatrix& sigma, const PDMatrix& lambda) {
  check_same_dim(sigma.dim(), lambda.dim(), "log_pn");
  const Matrix s = matrix_sqrt(sigma).mat();
  const Matrix l = matrix_sqrt(lambda).mat();
  const Matrix u = unitary_polar_factor(InvertibleMatrix(l * s));
  const Matrix b = l * u;
  return HermitianMatrix(s * b.adjoint() + b * s - 2.0 * sigma.mat());
}

}  // namespace bwgeom
