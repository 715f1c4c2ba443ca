#pragma once

#include "bwgeom/types.hpp"

namespace bwgeom {

/// Hellinger distance sqrt(sum (sqrt(mu_i) - sqrt(nu_i))^2); coincides with
/// the P(n) BW distance on diagonal embeddings.
double hellinger_distance(const PositiveMeasure& mu, const PositiveMeasure& nu);

/// Fisher information metric sum a_i b_i / mu_i of (m)-represented tangents.
double fisher_metric(const PositiveMeasure& mu, const RVector& a, const RVector& b);

/// Fisher distance arccos(sum sqrt(p_i q_i)) on the open simplex.
double fisher_distance(const ProbVector& p, const ProbVector& q);

/// (e)-representation a_i / mu_i of a tangent at mu.
RVector e_representation(const PositiveMeasure& mu, const RVector& a);

/// Residual |4 <a,b> - g^F_{mu^2}(ds a, ds b)| of the square-map isometry,
/// with ds_mu(a) = 2 mu.*a and the constant fixed to 4.
double sqrt_map_isometry_check(const PositiveMeasure& mu, const RVector& a,
                               const RVector& b);

}  // namespace bwgeom
