#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "freejacobi/errors.hpp"
#include "freejacobi/jacobi_moments.hpp"
#include "freejacobi/wachter_kunisky.hpp"

using fj::Family;

TEST_CASE("hierarchy right-hand sides") {
  const std::vector<double> m{1.0, 0.6, 0.45, 0.37};
  for (Family f : {Family::EqualRanks, Family::HalfRank}) {
    const auto d = fj::hierarchy_rhs(f, 0.7, m);
    CHECK(d[0] == 0.0);
    CHECK(std::abs(d[1] - (0.7 - 0.6)) < 1e-15);
  }
  const auto ones = fj::delta_one_moments(6);
  CHECK(std::abs(fj::equal_rank_rhs(0.4, ones)[1] - (0.4 - 1.0)) < 1e-15);
  const auto st = fj::stationary_half_moments(0.7, 8);
  double worst = 0.0;
  for (double v : fj::half_rank_rhs(0.7, st)) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-8);
  const auto se = fj::stationary_moments(0.6, 8);
  worst = 0.0;
  for (double v : fj::equal_rank_rhs(0.6, se)) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-12);
}

TEST_CASE("integration against the first-moment closed form") {
  const auto traj = fj::integrate(Family::EqualRanks, 0.6, fj::delta_one_moments(8), 1.0, 1e-3);
  CHECK(std::abs(traj.at(1.0)[1] - 0.747151) < 1e-6);
  CHECK(std::abs(traj.at(1.0)[1] - (0.6 + 0.4 * std::exp(-1.0))) < 1e-8);
  for (const auto& m : traj.moments) {
    CHECK(m[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t n = 1; n < m.size(); ++n) CHECK(m[n] <= m[n - 1] + 1e-12);
  }
  const auto late = fj::integrate(Family::EqualRanks, 0.6, fj::delta_one_moments(3), 30.0, 1e-2);
  CHECK(std::abs(late.moments.back()[1] - 0.6) < 1e-10);
  const auto zero = fj::integrate(Family::HalfRank, 0.7, {1.0, 0.5, 0.3}, 0.0, 1e-3);
  CHECK(zero.moments.back() == std::vector<double>{1.0, 0.5, 0.3});
}

TEST_CASE("grid lands on t_end and find_time") {
  const auto traj = fj::integrate(Family::EqualRanks, 0.5, fj::delta_one_moments(2), 0.3501, 0.1);
  CHECK(traj.times.back() == 0.3501);
  CHECK(traj.find_time(0.2) == 2);
  CHECK(traj.find_time(0.25) == -1);
  CHECK_THROWS_AS(traj.at(0.25), fj::DomainError);
}

TEST_CASE("stationary moments") {
  // Taylor coefficients of the closed forms, 40-digit reference
  const double eq07[] = {1.0, 0.7, 0.637, 0.61054, 0.5966485, 0.588480298, 0.58333433074};
  const double eq03[] = {1.0, 0.3, 0.153, 0.09126, 0.0588465, 0.039787362, 0.02778010506};
  const double half07[] = {1.0, 0.7, 0.595, 0.5425, 0.5107375, 0.48934375, 0.4739336875};
  const auto a = fj::stationary_moments(0.7, 6), b = fj::stationary_moments(0.3, 6),
             c = fj::stationary_half_moments(0.7, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(std::abs(a[n] - eq07[n]) < 1e-14);
    CHECK(std::abs(b[n] - eq03[n]) < 1e-14);
    CHECK(std::abs(c[n] - half07[n]) < 1e-14);
  }
  // quadrature route through the explicit density
  const auto mu = fj::make_measure(fj::MeasureKind::MuInf, 0.5, 0.5);
  const auto m = fj::stationary_moments(0.5, 10);
  for (int j = 0; j <= 10; ++j) CHECK(std::abs(m[j] - fj::moment(mu, j)) < 1e-8 * m[j]);
}

TEST_CASE("PDE residual") {
  const auto traj = fj::integrate(Family::EqualRanks, 0.6, fj::delta_one_moments(40), 1.01, 2.5e-4);
  const double r1 = fj::pde_residual(Family::EqualRanks, traj, 2.0, 1.0, 1e-3);
  const double r2 = fj::pde_residual(Family::EqualRanks, traj, 2.0, 1.0, 5e-4);
  CHECK(r1 < 1e-4);
  CHECK(r2 < 0.35 * r1);
  const auto st = fj::integrate(Family::HalfRank, 0.7, fj::stationary_half_moments(0.7, 60),
                                0.2, 1e-3);
  CHECK(fj::pde_residual(Family::HalfRank, st, {2.0, 0.5}, 0.1, 1e-3) < 1e-8);
  CHECK(fj::pde_residual(Family::HalfRank, st, {2.0, 0.5}, 0.1, 2e-3) < 1e-8);
  CHECK_THROWS_AS(fj::pde_residual(Family::EqualRanks, traj, 2.0, 1.0, 3e-4), fj::DomainError);
}

TEST_CASE("validation and positivity") {
  CHECK_THROWS_AS(fj::integrate(Family::EqualRanks, 0.5, {1.0, 1.5, 0.2}, 0.1, 0.01),
                  fj::ValidationError);
  const auto m = fj::stationary_moments(0.7, 22);
  CHECK(fj::hausdorff_min_eigenvalue(m, 10) >= -1e-8);
  // a sequence that is not a moment sequence on [0,1]
  CHECK(fj::hausdorff_min_eigenvalue(std::vector<double>{1.0, 0.9, 0.1, 0.05, 0.01}, 1) < -0.1);
}

TEST_CASE("trajectory csv") {
  const auto traj = fj::integrate(Family::EqualRanks, 0.5, fj::delta_one_moments(2), 0.2, 0.1);
  std::ostringstream os;
  fj::write_csv(os, traj);
  const std::string s = os.str();
  CHECK(s.rfind("t,m_0,m_1,m_2\r\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}
