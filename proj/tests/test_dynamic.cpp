#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "freejacobi/dynamic_identity.hpp"
#include "freejacobi/errors.hpp"
#include "freejacobi/jacobi_moments.hpp"
#include "freejacobi/wachter_kunisky.hpp"

using fj::cplx;
using fj::Family;

namespace {

// (2a-1) delta_1 plus (1-a)(delta_{1/2-s/2} + delta_{1/2+s/2})
fj::MomentVector two_atom(double alpha, double s, int n_max) {
  fj::MomentVector m(n_max + 1);
  const double x1 = 0.5 - 0.5 * s, x2 = 0.5 + 0.5 * s;
  for (int n = 0; n <= n_max; ++n)
    m[n] = (2 * alpha - 1) + (1 - alpha) * (std::pow(x1, n) + std::pow(x2, n));
  return m;
}

}  // namespace

TEST_CASE("time map and atoms") {
  CHECK(fj::timemap::half_rank_time(2.0) == 1.0);
  CHECK(fj::timemap::equal_rank_time(1.0) == 2.0);
  CHECK(fj::timemap::u_chain_source_time(0.25) == 0.5);
  for (double a : {0.5, 0.6, 0.8}) {
    const auto h = fj::atom_bookkeeping(Family::HalfRank, a);
    const auto e = fj::atom_bookkeeping(Family::EqualRanks, a);
    const auto mh = fj::make_measure(fj::MeasureKind::MuInf, 0.5, a);
    const auto me = fj::make_measure(fj::MeasureKind::MuInf, a, a);
    CHECK(std::abs(h.remaining_mass - 2 * (1 - a)) < 1e-15);
    CHECK(std::abs(mh.mass_ac - (1 - h.atom_at_one)) < 1e-10);
    CHECK(std::abs(me.mass_ac - (1 - e.atom_at_one)) < 1e-10);
    CHECK(std::abs(e.remaining_mass - (1 - a) / a) < 1e-15);
  }
  CHECK_THROWS_AS(fj::atom_bookkeeping(Family::HalfRank, 0.4), fj::DomainError);
}

TEST_CASE("normalized transforms of the stationary laws") {
  const double a = 0.7;
  const auto mh = fj::stationary_half_moments(a, 80);
  const auto me = fj::stationary_moments(a, 80);
  const auto wh = fj::make_measure(fj::MeasureKind::MuInf, 0.5, a);
  const auto we = fj::make_measure(fj::MeasureKind::MuInf, a, a);
  for (cplx z : {cplx(2.0, 0.0), cplx(1.3, 0.8), cplx(-1.5, 0.2)}) {
    const cplx th = fj::tilde_half(a, mh, z);
    CHECK(std::abs(th - fj::cauchy_transform_ac(wh, z) / (2 * (1 - a))) < 1e-10);
    const cplx te = fj::tilde_equal(a, me, z);
    CHECK(std::abs(te - fj::cauchy_transform_ac(we, z) * a / (1 - a)) < 1e-10);
  }
  // alpha = 1/2 has no atom to remove
  const auto m5 = fj::stationary_half_moments(0.5, 60);
  CHECK(std::abs(fj::tilde_half(0.5, m5, 2.5) - fj::cauchy_from_moments(m5, 2.5)) < 1e-15);
  // probability normalization: z G~(z) -> 1
  const double z = 1e4;
  CHECK(std::abs(z * fj::tilde_half(a, mh, z) - 1.0) < 1e-4);
  CHECK(std::abs(z * fj::tilde_equal(a, me, z) - 1.0) < 1e-4);
  CHECK_THROWS_AS(fj::tilde_half(a, mh, cplx(0.9, 0.1)), fj::DomainError);
  CHECK_THROWS_AS(fj::tilde_half(0.3, mh, 2.0), fj::DomainError);
}

TEST_CASE("u and v for the stationary half-rank law") {
  const double a = 0.7;
  const auto mh = fj::stationary_half_moments(a, 80);
  const fj::Transform tilde = [&](cplx w) { return fj::tilde_half(a, mh, w); };
  const fj::Transform u = [&](cplx z) { return fj::u_from_tilde(tilde, z); };
  for (cplx z : {cplx(0.2, 4.0), cplx(5.0, 0.4), cplx(-4.0, 3.0)}) {
    CHECK(std::abs(u(std::conj(z)) - std::conj(u(z))) < 1e-14);
    CHECK(std::abs(u(-z) + u(z)) < 1e-10);
  }
  const auto w = fj::make_measure(fj::MeasureKind::MuInf, 0.5, a);
  for (double y : {4.0, 6.0, 9.0}) {
    const double ref =
        fj::integrate_ac(w, std::function<double(double)>([y](double x) {
          const double s = 2 * x - 1;
          return 1.0 / (y - s * s);
        })) /
        (2 * (1 - a));
    CHECK(std::abs(fj::v_from_moments(a, mh, y).real() - ref) < 1e-10);
    CHECK(std::abs(fj::v_from_u(u, y) - fj::v_from_moments(a, mh, y)) < 1e-15);
  }
}

TEST_CASE("evenness proxy and the v gate") {
  CHECK(fj::evenness_proxy(0.7, fj::stationary_half_moments(0.7, 12)) < 1e-9);
  CHECK(fj::evenness_proxy(0.6, two_atom(0.6, 0.5, 12)) < 1e-12);
  CHECK_THROWS_AS(fj::centered_normalized_moments(0.7, fj::stationary_half_moments(0.7, 30)),
                  fj::DomainError);
  CHECK_THROWS_AS(fj::v_from_moments(0.7, fj::delta_one_moments(20), 4.0), fj::ValidationError);

  const auto traj = fj::integrate(Family::HalfRank, 0.6, two_atom(0.6, 0.5, 12), 0.5, 1e-3);
  CHECK(fj::evenness_proxy(traj, 0.0) < 1e-12);
  CHECK(std::isfinite(fj::evenness_proxy(traj, 0.5)));
}

TEST_CASE("same equation residuals") {
  const double a = 0.7;
  const auto eq = fj::integrate(Family::EqualRanks, a, fj::delta_one_moments(40), 1.0, 2.5e-4);
  CHECK(fj::same_pde_residual(fj::Branch::Alpha, eq, 0.5, cplx(2.0, 0.5), 1e-3) < 1e-4);
  CHECK(fj::u_chain_residual(eq, 0.25, cplx(1.6, 0.0), 1e-3) < 1e-4);

  // the stationary half-rank law stays put, so v must solve the equation with zero time derivative
  const auto half =
      fj::integrate(Family::HalfRank, a, fj::stationary_half_moments(a, 60), 0.2, 1e-3);
  CHECK(fj::same_pde_residual(fj::Branch::V, half, 0.2, cplx(4.0, 0.0), 0.01) < 1e-6);
  CHECK_THROWS_AS(fj::same_pde_residual(fj::Branch::Alpha, half, 0.1, 2.0, 1e-3),
                  fj::DomainError);
  CHECK_THROWS_AS(fj::u_chain_residual(eq, 0.25, 1.6, 0.0), fj::DomainError);
}

TEST_CASE("random matrix check of the projection identity") {
  const auto rows = fj::equa3_check(100, 0.7, 5, 3, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(std::abs(r.gap) < 0.05);
  const auto ctl = fj::equa3_check(100, 0.5, 5, 1, 2, fj::Equa3Coupling::NonFreeControl);
  CHECK(std::abs(ctl[0].lhs - 1.0) < 1e-12);
  CHECK(ctl[0].gap > 0.3);
  CHECK_THROWS_AS(fj::equa3_check(101, 0.7, 5, 3, 4), fj::DomainError);
}
