#pragma once

#include "bwgeom/types.hpp"

namespace bwgeom {

/// SLD Fisher metric 2 tr(L_rho(H) K) on trace-free Hermitian tangents.
double sld_metric(const DensityMatrix& rho, const HermitianMatrix& h,
                  const HermitianMatrix& k);

/// SLD (e)-representation H^(e) = L_rho(H^(m)).
HermitianMatrix sld_e_rep(const DensityMatrix& rho, const HermitianMatrix& h);

/// Bogoliubov (e) -> (m): integral of rho^l E rho^{1-l} over l in [0,1],
/// evaluated in closed form in rho's eigenbasis.
HermitianMatrix bogoliubov_e_to_m(const DensityMatrix& rho, const HermitianMatrix& e);

/// Bogoliubov (m) -> (e): the Frechet derivative of log at rho.
HermitianMatrix bogoliubov_m_to_e(const DensityMatrix& rho, const HermitianMatrix& h);

/// Bogoliubov metric tr((d log_rho H) K) on trace-free Hermitian tangents.
double bogoliubov_metric(const DensityMatrix& rho, const HermitianMatrix& h,
                         const HermitianMatrix& k);

/// Fubini-Study distance arccos|<phi, psi>| between pure states.
double fubini_study_distance(const PureState& phi, const PureState& psi);

/// Horizontal metric g^H: Frobenius pairing of the ambient horizontal
/// projections of H and K at the base point Sigma viewed in GL(n).
double horizontal_metric_gh(const PDMatrix& sigma, const HermitianMatrix& h,
                            const HermitianMatrix& k);

/// Residual |g^H_Sigma(H,K) - g^BW_{Sigma^2}(dpi H, dpi K)| of the
/// square-map isometry, with dpi H = H Sigma + Sigma H.
double square_map_isometry_residual(const PDMatrix& sigma, const HermitianMatrix& h,
                                    const HermitianMatrix& k);

/// Wigner-Yanase metric Re tr(L_{Lambda^{1/2}}(A) L_{Lambda^{1/2}}(B)).
double wigner_yanase_metric(const PDMatrix& lambda, const HermitianMatrix& a,
                            const HermitianMatrix& b);

}  // namespace bwgeom
