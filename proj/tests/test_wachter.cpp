#include <doctest.h>

#include <cmath>
#include <functional>

#include "freejacobi/errors.hpp"
#include "freejacobi/jacobi_moments.hpp"
#include "freejacobi/wachter_kunisky.hpp"

using fj::MeasureKind;

namespace {

double atom_at(const fj::MeasureSpec& m, double x) {
  double w = 0.0;
  for (const auto& a : m.atoms)
    if (a.location == x) w += a.weight;
  return w;
}

}  // namespace

TEST_CASE("measure construction") {
  const auto mu = fj::make_measure(MeasureKind::MuInf, 0.7, 0.7);
  CHECK(atom_at(mu, 0.0) == 0.0);
  CHECK(std::abs(atom_at(mu, 1.0) - 0.4 / 0.7) < 1e-15);
  CHECK(std::abs(mu.x_minus) < 1e-15);
  CHECK(std::abs(mu.x_plus - 4 * 0.7 * 0.3) < 1e-15);

  const auto nu = fj::make_measure(MeasureKind::Nu, 0.5, 0.5);
  CHECK(std::abs(atom_at(nu, 0.0) - 0.5) < 1e-15);
  CHECK(atom_at(nu, 1.0) == 0.0);

  const auto half = fj::make_measure(MeasureKind::MuInf, 0.5, 0.7);
  CHECK(std::abs(atom_at(half, 1.0) - 0.4) < 1e-15);
  CHECK(atom_at(half, 0.0) == 0.0);
  CHECK(std::abs(half.x_minus - (0.5 - std::sqrt(0.21))) < 1e-15);
  CHECK(std::abs(half.x_plus - (0.5 + std::sqrt(0.21))) < 1e-15);

  for (double b : {0.2, 0.5, 0.8})
    for (double a : {0.3, 0.6, 0.9})
      for (MeasureKind k : {MeasureKind::Nu, MeasureKind::MuInf}) {
        const auto m = fj::make_measure(k, b, a);
        CHECK(std::abs(m.mass_ac + m.atom_mass() - 1.0) < 1e-10);
        CHECK(0.0 <= m.x_minus);
        CHECK(m.x_minus <= m.x_plus);
        CHECK(m.x_plus <= 1.0 + 1e-15);
      }
  CHECK_THROWS_AS(fj::make_measure(MeasureKind::Nu, 1.0, 0.5), fj::DomainError);
}

TEST_CASE("moments") {
  for (auto [b, a] : {std::pair{0.5, 0.7}, {0.7, 0.7}, {0.4, 0.6}}) {
    const auto m = fj::make_measure(MeasureKind::MuInf, b, a);
    CHECK(std::abs(fj::moment(m, 0) - 1.0) < 1e-12);
    CHECK(std::abs(fj::moment(m, 1) - a) < 1e-12);
  }
  CHECK(std::abs(fj::moment(fj::make_measure(MeasureKind::Nu, 0.6, 0.6), 1) - 0.36) < 1e-12);
  // quadrature against the closed-form generating functions
  for (double a : {0.6, 0.85}) {
    const auto eq = fj::stationary_moments(a, 10);
    const auto hf = fj::stationary_half_moments(a, 10);
    const auto m_eq = fj::make_measure(MeasureKind::MuInf, a, a);
    const auto m_hf = fj::make_measure(MeasureKind::MuInf, 0.5, a);
    for (int j = 0; j <= 10; ++j) {
      CHECK(std::abs(fj::moment(m_eq, j) - eq[j]) < 1e-10 * eq[j]);
      CHECK(std::abs(fj::moment(m_hf, j) - hf[j]) < 1e-10 * hf[j]);
    }
  }
}

TEST_CASE("Cauchy transform of the continuous part") {
  const auto m = fj::make_measure(MeasureKind::MuInf, 0.5, 0.7);
  const auto mom = fj::stationary_half_moments(0.7, 80);
  const fj::cplx z(2.0, 0.3);
  const fj::cplx full = fj::cauchy_from_moments(mom, z);
  CHECK(std::abs(fj::cauchy_transform_ac(m, z) + 0.4 / (z - 1.0) - full) < 1e-12);
  const double c = fj::integrate_ac(m, std::function<double(double)>([](double x) { return x; }));
  CHECK(std::abs(c + 0.4 - 0.7) < 1e-12);
}

TEST_CASE("static pushforward identity") {
  const auto rows = fj::kunisky_table(0.7, 10);
  CHECK(rows.front().j == 0);
  CHECK(rows.front().rel_error < 1e-14);
  CHECK(fj::kunisky_check(0.7, 10) < 1e-8);
  CHECK(fj::kunisky_check(0.5, 10) < 1e-8);
}

TEST_CASE("projection identities") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    CHECK(fj::demham_matrix_check(50, 20, 20, seed, 6) < 1e-10);
    CHECK(fj::pqp_binomial_check(60, 40, seed, 5) < 1e-10);
  }
  // j = 1 only is a two-line expansion; rank N gives Q = 1
  CHECK(fj::demham_matrix_check(20, 20, 20, 4, 1) < 1e-12);
  CHECK_THROWS_AS(fj::demham_matrix_check(50, 20, 21, 1, 3), fj::DomainError);
  CHECK_THROWS_AS(fj::pqp_binomial_check(51, 20, 1, 3), fj::DomainError);
}
