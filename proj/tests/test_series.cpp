#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "freejacobi/errors.hpp"
#include "freejacobi/series.hpp"

using fj::cplx;
using fj::Series;

namespace {

Series real_series(std::initializer_list<double> c) {
  std::vector<cplx> v;
  for (double x : c) v.emplace_back(x);
  return Series(v);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("addition and cancellation") {
  const Series a = real_series({1, 1, 0}), b = real_series({1, -1, 0});
  const Series s = a + b;
  CHECK(s[0] == cplx(2.0));
  CHECK(s[1] == cplx(0.0));
  const Series z = Series::identity(3), z2 = z * z;
  CHECK((z + z2).max_abs_diff(real_series({0, 1, 1, 0})) == 0.0);
  CHECK((a + Series(2)).max_abs_diff(a) == 0.0);
}

TEST_CASE("products truncate at the smaller order") {
  const Series p = real_series({1, 1, 0}) * real_series({1, -1, 0});
  CHECK(p.max_abs_diff(real_series({1, 0, -1})) == 0.0);
  const Series g = real_series({1, 1, 1, 1});
  CHECK((g * g).max_abs_diff(real_series({1, 2, 3, 4})) == 0.0);
  const Series mixed = real_series({1, 1, 1, 1, 1}) * real_series({1, 1});
  CHECK(mixed.order() == 1);
  // coefficient k only depends on coefficients 0..k
  Series h = real_series({1, 2, 3, 99});
  CHECK((h * g)[2] == (real_series({1, 2, 3, 0}) * g)[2]);
}

TEST_CASE("composition") {
  const Series e = Series::exponential(1.0, 6);
  const Series c = fj::compose(e, Series(6));
  CHECK(std::abs(c[0] - 1.0) == 0.0);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(c[k]) == 0.0);
  const Series f = real_series({0, 1, 1});
  const Series g = real_series({0, 2, 0});
  CHECK(fj::compose(f, g).max_abs_diff(real_series({0, 2, 4})) < 1e-15);
  const Series em1 = Series::exponential(1.0, 8) - Series::constant(1.0, 8);
  CHECK(fj::log1p(em1).max_abs_diff(Series::identity(8)) < 1e-14);
  CHECK_THROWS_AS(fj::compose(f, real_series({1, 1, 0})), fj::DomainError);
}

TEST_CASE("compositional inverse") {
  // w + w^2 = z: signed Catalan numbers
  const Series inv = fj::invert_composition(real_series({0, 1, 1, 0, 0}));
  CHECK(inv.max_abs_diff(real_series({0, 1, -1, 2, -5})) < 1e-14);
  const Series lin = fj::invert_composition(real_series({0, 4, 0, 0}));
  CHECK(lin.max_abs_diff(real_series({0, 0.25, 0, 0})) < 1e-15);
  // z e^z: Lambert W coefficients (-n)^{n-1}/n!
  const Series f = Series::identity(20) * Series::exponential(1.0, 20);
  const Series w = fj::invert_composition(f);
  for (int n = 1; n <= 20; ++n) {
    const double ref = std::pow(-n, n - 1) / factorial(n);
    CHECK(std::abs(w[n] - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
  // |w_20| is about 2e6, so one ulp there is already 5e-10; scale by the coefficient
  const Series rt = fj::compose(f, w);
  for (int n = 0; n <= 20; ++n) {
    const double err = std::abs(rt[n] - (n == 1 ? 1.0 : 0.0));
    CHECK(err < 1e-12 * std::max(1.0, std::abs(w[n])));
    if (n <= 16) CHECK(err < 1e-12);
  }
  CHECK_THROWS_AS(fj::invert_composition(real_series({0, 0, 1})), fj::DomainError);
}

TEST_CASE("elementary functions") {
  const Series e = Series::exponential(0.7, 8);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(e[n] - std::pow(0.7, n) / factorial(n)) < 1e-16);
  const Series s = fj::sqrt1p(-1.0 * Series::identity(4));
  CHECK(s.max_abs_diff(real_series({1, -0.5, -0.125, -0.0625, -0.0390625})) < 1e-15);
  const Series x = real_series({0, 0.3, -0.2, 0.1, 0.05, 0, 0.02});
  CHECK((fj::sqrt1p(x) * fj::sqrt1p(x)).max_abs_diff(Series::constant(1.0, 6) + x) < 1e-15);
  CHECK(fj::exp(fj::log1p(x)).max_abs_diff(Series::constant(1.0, 6) + x) < 1e-15);
  // (1+z)^{-3/2}
  const Series p = fj::pow1p(Series::identity(5), -1.5);
  double c = 1.0;
  for (int k = 0; k <= 5; ++k) {
    CHECK(std::abs(p[k] - c) < 1e-14);
    c *= (-1.5 - k) / (k + 1);
  }
  CHECK_THROWS_AS(fj::log1p(real_series({1, 1})), fj::DomainError);
}

TEST_CASE("reciprocal, derivative and evaluation") {
  const Series r = fj::reciprocal(real_series({1, -1, 0, 0, 0}));
  CHECK(r.max_abs_diff(real_series({1, 1, 1, 1, 1})) < 1e-15);
  CHECK_THROWS_AS(fj::reciprocal(real_series({0, 1})), fj::DomainError);
  const Series d = real_series({5, 1, 2, 3}).derivative();
  CHECK(d.max_abs_diff(real_series({1, 4, 9, 0})) == 0.0);
  const cplx z(0.3, -0.2);
  CHECK(std::abs(real_series({1, 2, 3}).evaluate(z) - (1.0 + 2.0 * z + 3.0 * z * z)) < 1e-15);
}
