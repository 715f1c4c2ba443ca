#include "bwgeom/qmetrics.hpp"

#include <cmath>
#include <sstream>

#include "bwgeom/bw_core.hpp"
#include "bwgeom/matfun.hpp"
#include "detail.hpp"

namespace bwgeom {

namespace {

void require_trace_free(const HermitianMatrix& h, const char* what) {
  const double tr = std::abs(h.mat().trace().real());
  if (tr > 1e-12 * std::max(1.0, h.mat().norm())) {
    std::ostringstream msg;
    msg << what << ": tangent must be trace-free, trace is " << h.mat().trace().real();
    throw validation_error(msg.str());
  }
}

void check_dims(Index a, Index b, const char* what) {
  if (a != b) throw validation_error(std::string(what) + ": dimension mismatch");
}

}  // namespace

double sld_metric(const DensityMatrix& rho, const HermitianMatrix& h,
                  const HermitianMatrix& k) {
  check_dims(rho.dim(), h.dim(), "sld_metric");
  check_dims(rho.dim(), k.dim(), "sld_metric");
  require_trace_free(h, "sld_metric");
  require_trace_free(k, "sld_metric");
  return 2.0 * (lyapunov_solve(rho.pd(), h).mat() * k.mat()).trace().real();
}

HermitianMatrix sld_e_rep(const DensityMatrix& rho, const HermitianMatrix& h) {
  check_dims(rho.dim(), h.dim(), "sld_e_rep");
  require_trace_free(h, "sld_e_rep");
  return lyapunov_solve(rho.pd(), h);
}

HermitianMatrix bogoliubov_e_to_m(const DensityMatrix& rho, const HermitianMatrix& e) {
  check_dims(rho.dim(), e.dim(), "bogoliubov_e_to_m");
  const double gap_floor = 1e-12 * rho.eig().eigenvalues.maxCoeff();
  // exact value of the integral of l_i^s l_j^{1-s} over s in [0,1]
  return eigen_pair_apply(rho.pd(), e, [gap_floor](double li, double lj) {
    if (std::abs(li - lj) <= gap_floor) return 0.5 * (li + lj);
    return (li - lj) / std::log1p((li - lj) / lj);
  });
}

HermitianMatrix bogoliubov_m_to_e(const DensityMatrix& rho, const HermitianMatrix& h) {
  check_dims(rho.dim(), h.dim(), "bogoliubov_m_to_e");
  require_trace_free(h, "bogoliubov_m_to_e");
  return dlog_frechet(rho.pd(), h);
}

double bogoliubov_metric(const DensityMatrix& rho, const HermitianMatrix& h,
                         const HermitianMatrix& k) {
  check_dims(rho.dim(), h.dim(), "bogoliubov_metric");
  check_dims(rho.dim(), k.dim(), "bogoliubov_metric");
  require_trace_free(h, "bogoliubov_metric");
  require_trace_free(k, "bogoliubov_metric");
  return (dlog_frechet(rho.pd(), h).mat() * k.mat()).trace().real();
}

double fubini_study_distance(const PureState& phi, const PureState& psi) {
  check_dims(phi.dim(), psi.dim(), "fubini_study_distance");
  return detail::acos_clamped(std::abs(phi.vec().dot(psi.vec())));
}

double horizontal_metric_gh(const PDMatrix& sigma, const HermitianMatrix& h,
                            const HermitianMatrix& k) {
  check_dims(sigma.dim(), h.dim(), "horizontal_metric_gh");
  check_dims(sigma.dim(), k.dim(), "horizontal_metric_gh");
  const InvertibleMatrix m(sigma.mat());
  // the projections live in the ambient tangent space and are in general
  // not Hermitian; they are deliberately kept as raw complex matrices
  const Matrix hh = horizontal_project(m, h.mat());
  const Matrix kh = horizontal_project(m, k.mat());
  return (hh * kh.adjoint()).trace().real();
}

double square_map_isometry_residual(const PDMatrix& sigma, const HermitianMatrix& h,
                                    const HermitianMatrix& k) {
  const double lhs = horizontal_metric_gh(sigma, h, k);
  const PDMatrix sigma2(HermitianMatrix(sigma.mat() * sigma.mat()));
  const HermitianMatrix dph(h.mat() * sigma.mat() + sigma.mat() * h.mat());
  const HermitianMatrix dpk(k.mat() * sigma.mat() + sigma.mat() * k.mat());
  return std::abs(lhs - bw_metric(sigma2, dph, dpk));
}

double wigner_yanase_metric(const PDMatrix& lambda, const HermitianMatrix& a,
                            const HermitianMatrix& b) {
  check_dims(lambda.dim(), a.dim(), "wigner_yanase_metric");
  check_dims(lambda.dim(), b.dim(), "wigner_yanase_metric");
  const PDMatrix root = matrix_sqrt(lambda);
  return (lyapunov_solve(root, a).mat() * lyapunov_solve(root, b).mat())
      .trace()
      .real();
}

}  // namespace bwgeom
