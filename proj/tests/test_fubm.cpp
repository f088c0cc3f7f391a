#include <doctest.h>

#include <cmath>

#include "freejacobi/errors.hpp"
#include "freejacobi/fubm_transforms.hpp"

using fj::cplx;

TEST_CASE("xi") {
  CHECK(std::abs(fj::xi(1.3, 1.0)) == 0.0);
  CHECK(std::abs(fj::xi(0.0, 3.0) - 0.5) < 1e-15);
  double prev = fj::xi(2.0, 0.0).real();
  for (int k = 1; k <= 50; ++k) {
    const double v = fj::xi(2.0, 3.0 * k / 50.0).real();
    CHECK(v > prev);
    prev = v;
  }
  const cplx u(0.4, 0.3);
  const double h = 1e-6;
  const cplx fd = (fj::xi(1.2, u + h) - fj::xi(1.2, u - h)) / (2.0 * h);
  CHECK(std::abs(fd - fj::xi_derivative(1.2, u)) < 1e-8);
  CHECK_THROWS_AS(fj::xi(1.0, -1.0), fj::DomainError);
}

TEST_CASE("free unitary moments") {
  CHECK(std::abs(fj::fubm_moments(0.8, 1)(1) - std::exp(-0.4)) < 1e-14);
  const auto m = fj::fubm_moments(1.0, 5);
  // closed form e^{-ns/2} sum_k (-s)^k/k! n^{k-1} C(n,k+1), 40-digit reference
  const double ref[] = {0.6065306597126334236, 0.0, -0.11156508007421491447,
                        0.045111761078870897298, 0.030781874483962048189};
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(m(n) - ref[n - 1]) < 1e-13);
  const auto z = fj::fubm_moments(0.0, 5);
  for (int n = 0; n <= 5; ++n) CHECK(std::abs(z(n) - 1.0) < 1e-15);
  for (double s : {0.3, 2.0, 7.0}) {
    const auto q = fj::fubm_moments(s, 12);
    for (int n = 0; n <= 12; ++n) CHECK(std::abs(q(n)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("Herglotz transform") {
  CHECK(std::abs(fj::herglotz(0.7, 0.0) - 1.0) < 1e-14);
  const cplx h = fj::herglotz(1.0, 0.1);
  CHECK(std::abs(fj::xi(1.0, h) - 0.1) < 1e-10);
  const cplx z(0.2, 0.1);
  CHECK(std::abs(fj::herglotz(1.0, std::conj(z)) - std::conj(fj::herglotz(1.0, z))) < 1e-14);
  CHECK(std::abs(fj::herglotz(0.5, 0.3) - 1.3587198022828620601) < 1e-12);
  CHECK(std::abs(fj::herglotz(1.0, z) - cplx(1.1392469032994171358, 0.063804276395365763166)) <
        1e-12);
  // beyond the series disc the Newton continuation takes over
  const fj::Herglotz H(0.5);
  const cplx far(0.8, 0.1);
  CHECK(std::abs(fj::xi(0.5, H(far)) - far) < 1e-10);
}

TEST_CASE("psi map") {
  CHECK(std::abs(fj::psi_map(0.0)) == 0.0);
  CHECK(std::abs(fj::psi_map(0.75) - 1.0 / 3.0) < 1e-15);
  const cplx z(0.3, 0.2);
  CHECK(std::abs(fj::psi_inverse(fj::psi_map(z)) - z) < 1e-12);
  CHECK_THROWS_AS(fj::psi_map(2.0), fj::DomainError);
  CHECK_THROWS_AS(fj::psi_inverse(1.5), fj::DomainError);
}
