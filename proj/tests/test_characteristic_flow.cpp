#include <doctest.h>

#include <cmath>
#include <numbers>

#include "freejacobi/characteristic_flow.hpp"
#include "freejacobi/errors.hpp"
#include "freejacobi/fubm_transforms.hpp"
#include "freejacobi/jacobi_moments.hpp"

using fj::cplx;

TEST_CASE("coefficients") {
  CHECK(fj::coefficient_A(0.5) == 0.0);
  CHECK(std::abs(fj::coefficient_A(0.25) - 1.0) < 1e-15);
  const double a = 0.7;
  const cplx z0(0.2, 0.1);
  const double A = fj::coefficient_A(a);
  // C = -alpha (B - A^2)
  CHECK(std::abs(fj::coefficient_C(a, z0) + a * (fj::coefficient_B(a, z0) - A * A)) < 1e-14);
  CHECK(std::abs(fj::coefficient_B(a, 0.0) - 1.0 / (4.0 * a * a)) < 1e-15);
}

TEST_CASE("rescaled map and its inversion near 1/(2 alpha)") {
  for (double a : {0.3, 0.5, 0.7})
    for (double t : {0.5, 1.0}) {
      const double u0 = 1.0 / (2.0 * a);
      CHECK(std::abs(fj::v_map(a, t, u0)) < 1e-15);
      CHECK(std::abs(fj::inversion_rhs(a, t, u0)) < 1e-14);
      // closed forms, confirmed by 50-digit numerical differentiation
      CHECK(std::abs(fj::v_map_derivative(a, t, u0) - std::exp(t) * a * a / (1.0 - a)) < 1e-12);
      CHECK(std::abs(fj::inversion_rhs_derivative(a, t, u0) - std::exp(t) / (1.0 - a)) < 1e-12);
      const cplx u(0.9, 0.2);
      const double h = 1e-6;
      const cplx fd = (fj::inversion_rhs(a, t, u + h) - fj::inversion_rhs(a, t, u - h)) / (2.0 * h);
      CHECK(std::abs(fd - fj::inversion_rhs_derivative(a, t, u)) < 1e-7);
    }
  for (double u : {0.2, 1.3, 2.5})
    CHECK(std::abs(fj::v_map(0.5, 1.2, u) - (u - 1.0) / (u + 1.0) * std::exp(1.2 * u)) < 1e-13);
}

TEST_CASE("local inverse") {
  CHECK(std::abs(fj::local_inverse_J(0.7, 1.0, 0.0) - 1.0 / 1.4) < 1e-14);
  for (double a : {0.3, 0.5, 0.7})
    for (double t : {0.5, 1.0, 2.0})
      for (int k = 0; k < 8; ++k) {
        const cplx z = std::polar(0.05, 2.0 * std::numbers::pi * k / 8.0);
        CHECK(std::abs(fj::inversion_rhs(a, t, fj::local_inverse_J(a, t, z)) - z) < 1e-10);
      }
  for (double t : {0.5, 1.0}) {
    const cplx z(0.1, 0.05);
    CHECK(std::abs(fj::local_inverse_J(0.5, t, z) - fj::herglotz(t, fj::psi_map(z))) < 1e-9);
  }
}

TEST_CASE("moment generating function") {
  const auto p0 = fj::mgf_theorem1(0.4, 1.0, 0.0);
  CHECK(std::abs(p0.sqrt_form - 1.0) < 1e-14);
  CHECK(std::abs(p0.homographic_form - 1.0) < 1e-14);
  // characteristics integrated backwards to their start point, 25 digits
  const auto p = fj::mgf_theorem1(0.6, 1.0, {0.03, 0.02});
  CHECK(std::abs(p.sqrt_form - cplx(1.022725971637380633, 0.015731272570456699397)) < 1e-12);
  CHECK(std::abs(p.homographic_form - p.sqrt_form) < 1e-10);
  CHECK(std::abs(fj::mgf_theorem1(0.4, 1.0, 0.04).sqrt_form - 1.0255753633637341399) < 1e-12);

  for (double a : {0.4, 0.6}) {
    const auto c = fj::mgf_coefficients(a, 1.0, 3);
    const auto traj = fj::integrate(fj::Family::EqualRanks, a, fj::delta_one_moments(3), 1.0, 1e-3);
    for (int n = 0; n <= 3; ++n) CHECK(std::abs(c[n] - traj.at(1.0)[n]) < 1e-6);
  }
  CHECK_THROWS_AS(fj::mgf_coefficients(0.5, 1.0, 40, 0.02, 64), fj::DomainError);
}

TEST_CASE("flow point bookkeeping") {
  const auto fp = fj::trace_flow(0.7, 1.0, {0.02, -0.01});
  CHECK(std::abs(fp.u - fp.J) < 1e-15);
  CHECK(std::abs(fp.B - fp.u * fp.u) < 1e-14);
  CHECK(fp.residual < 1e-12);
  CHECK(fp.newton_iterations >= 1);
  const auto origin = fj::trace_flow(0.7, 1.0, 0.0);
  CHECK(std::abs(origin.psi_t) < 1e-15);
  CHECK_THROWS_AS(fj::trace_flow(0.7, 1.0, {1.0 - 1e-10, 0.0}), fj::DomainError);
  CHECK(fj::empirical_radius(0.6, 1.0) > 0.1);
}

TEST_CASE("characteristic curves") {
  const double a = 0.6;
  const cplx z0(0.1, 0.05);
  const auto path = fj::integrate_characteristic(a, z0, 1.0, 1e-3);
  CHECK(path.front().t == 0.0);
  CHECK(std::abs(path.back().t - 1.0) < 1e-12);
  for (std::size_t i = 0; i < path.size(); i += 100)
    CHECK(std::abs(fj::riccati_residual(a, z0, path[i])) < 1e-10);
  // the solution carried along the curve is the generating function at z_t
  const auto& end = path.back();
  CHECK(std::abs(fj::mgf_theorem1(a, 1.0, end.z).sqrt_form - end.f) < 1e-9);
}
