#include <doctest.h>

#include "bwgeom/bw_core.hpp"
#include "bwgeom/density.hpp"
#include "bwgeom/matfun.hpp"
#include "testutil.hpp"

using namespace bwgeom;
using namespace bwtest;

namespace {

DensityMatrix diag_density(const RVector& p) {
  Matrix m = Matrix::Zero(p.size(), p.size());
  for (Index i = 0; i < p.size(); ++i) m(i, i) = p(i);
  return DensityMatrix(m);
}

DensityMatrix regularised_pure(const PureState& phi, double eps) {
  const Index n = phi.dim();
  const Matrix p = phi.vec() * phi.vec().adjoint();
  return DensityMatrix((1.0 - eps) * p + (eps / n) * Matrix::Identity(n, n));
}

}  // namespace

TEST_SUITE("density") {

TEST_CASE("distance: coincidence, diagonal Fisher form, frozen value") {
  rng_t rng(61);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(bw_distance_dn(rho, rho) == 0.0);

  RVector p(2), q(2);
  p << 0.5, 0.5;
  q << 0.1, 0.9;
  const double got = bw_distance_dn(diag_density(p), diag_density(q));
  // great-circle oracle: Euclidean arc between the entrywise square roots
  const double overlap = std::sqrt(0.05) + std::sqrt(0.45);
  CHECK(got == doctest::Approx(std::acos(overlap)).epsilon(1e-14));
  CHECK(got == doctest::Approx(0.46364760900080615).epsilon(1e-12));

  for (int i = 0; i < 20; ++i) {
    const ProbVector a = random_prob(3, rng);
    const ProbVector b = random_prob(3, rng);
    const double arc = std::acos(
        std::min(1.0, (a.weights().array() * b.weights().array()).sqrt().sum()));
    CHECK(rel_err(bw_distance_dn(diag_density(a.weights()),
                                 diag_density(b.weights())),
                  arc) < 1e-12);
  }
}

TEST_CASE("distance symmetry, range, triangle inequality") {
  rng_t rng(62);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const DensityMatrix c = random_density(3, rng);
    const double dab = bw_distance_dn(a, b);
    CHECK(dab == bw_distance_dn(b, a));
    CHECK(dab >= 0.0);
    CHECK(dab <= std::acos(-1.0) / 2.0 + 1e-12);
    CHECK(bw_distance_dn(a, c) <= dab + bw_distance_dn(b, c) + 1e-10);
  }
}

TEST_CASE("D(n) arc dominates the P(n) chord") {
  rng_t rng(63);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const double arc = bw_distance_dn(a, b);
    const double chord = bw_distance_pn(a.pd(), b.pd());
    CHECK(arc >= chord);
    CHECK(arc > chord);  // strict away from coincidence
  }
}

TEST_CASE("geodesic endpoints and unit trace along the path") {
  rng_t rng(64);
  const DensityMatrix a = random_density(3, rng);
  const DensityMatrix b = random_density(3, rng);
  const GeodesicDn geo(a, b);
  CHECK(rel_fro(geo(0.0).mat(), a.mat()) < 1e-10);
  CHECK(rel_fro(geo(1.0).mat(), b.mat()) < 1e-10);
  for (int k = 0; k <= 10; ++k) {
    CHECK(std::abs(geo(k / 10.0).mat().trace().real() - 1.0) < 1e-12);
  }
}

TEST_CASE("commuting diagonal geodesic is the projected square-root segment") {
  rng_t rng(65);
  const ProbVector p = random_prob(3, rng);
  const ProbVector q = random_prob(3, rng);
  const GeodesicDn geo(diag_density(p.weights()), diag_density(q.weights()));
  for (double t : {0.25, 0.5, 0.8}) {
    // classical sphere projection on R^n, coordinatewise
    RVector c = (1.0 - t) * p.weights().array().sqrt().matrix() +
                t * q.weights().array().sqrt().matrix();
    c /= c.norm();
    const Matrix point = geo(t).mat();
    for (Index i = 0; i < 3; ++i) {
      CHECK(point(i, i).real() == doctest::Approx(c(i) * c(i)).epsilon(1e-12));
      for (Index j = 0; j < 3; ++j) {
        if (i != j) CHECK(std::abs(point(i, j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("quadrature length of the projected geodesic equals the distance") {
  rng_t rng(66);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const GeodesicDn geo(a, b);
    const double len =
        simpson([&](double t) { return geo.speed(t); }, 0.0, 1.0, 1024);
    CHECK(rel_err(len, bw_distance_dn(a, b)) < 1e-6);
  }
}

TEST_CASE("projected initial velocity is horizontal") {
  rng_t rng(67);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(3, rng);
    const GeodesicDn geo(a, b);
    // ambient velocity of the normalised segment at t = 0
    const Matrix c0 = geo.sqrt_start().mat();
    const Matrix cd = geo.rotated_sqrt_end().mat() - c0;
    const double ndot = (cd * c0.adjoint()).trace().real() / c0.norm();
    const Matrix vel = cd / c0.norm() - c0 * (ndot / (c0.norm() * c0.norm()));
    const Matrix x = vel * c0.inverse();
    CHECK((x - x.adjoint()).norm() < 1e-9 * std::max(1.0, x.norm()));
  }
}

TEST_CASE("velocity matches central differences and is trace-free") {
  rng_t rng(68);
  const GeodesicDn geo(random_density(3, rng), random_density(3, rng));
  const double eps = 1e-6;
  for (double t : {0.2, 0.5, 0.9}) {
    const Matrix fd = (geo(t + eps).mat() - geo(t - eps).mat()) / (2.0 * eps);
    CHECK(rel_fro(geo.velocity(t).mat(), fd) < 1e-7);
    CHECK(std::abs(geo.velocity(t).mat().trace().real()) < 1e-12);
  }
}

TEST_CASE("arclength parameters are equispaced in length") {
  rng_t rng(69);
  const GeodesicDn geo(random_density(3, rng), random_density(3, rng));
  const auto params = geo.equispaced_arclength_params(6);
  const double total =
      simpson([&](double t) { return geo.speed(t); }, 0.0, 1.0, 1024);
  for (size_t k = 0; k < params.size(); ++k) {
    const double seg = simpson([&](double t) { return geo.speed(t); }, 0.0,
                               params[k], 512);
    CHECK(std::abs(seg - total * static_cast<double>(k) / 6.0) < 1e-4 * total);
  }
}

TEST_CASE("pure-state limit approaches the overlap angle") {
  rng_t rng(70);
  const double eps = 1e-6;
  for (int i = 0; i < 20; ++i) {
    const PureState phi = random_pure(3, rng);
    const PureState psi = random_pure(3, rng);
    const double d = bw_distance_dn(regularised_pure(phi, eps),
                                    regularised_pure(psi, eps));
    const double angle = std::acos(std::abs(phi.vec().dot(psi.vec())));
    CHECK(std::abs(d - angle) < 1e-3);
  }
}

}  // TEST_SUITE
