#include "freejacobi/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freejacobi/errors.hpp"

namespace fj {

Series::Series(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, cplx(0.0));
}

Series Series::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(order + 1, cplx(0.0));
  v[0] = c;
  return Series(std::move(v));
}

Series Series::identity(std::size_t order) {
  if (order < 1) throw DomainError("identity series needs order >= 1");
  std::vector<cplx> v(order + 1, cplx(0.0));
  v[1] = 1.0;
  return Series(std::move(v));
}

Series Series::exponential(cplx a, std::size_t order) {
  std::vector<cplx> v(order + 1);
  v[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k)
    v[k] = v[k - 1] * a / static_cast<double>(k);
  return Series(std::move(v));
}

Series Series::truncated(std::size_t order) const {
  std::vector<cplx> v(order + 1, cplx(0.0));
  std::copy_n(c_.begin(), std::min(c_.size(), order + 1), v.begin());
  return Series(std::move(v));
}

// Keeps the order; the top coefficient of the result is zero.
Series Series::derivative() const {
  std::vector<cplx> v(c_.size(), cplx(0.0));
  for (std::size_t k = 1; k < c_.size(); ++k)
    v[k - 1] = static_cast<double>(k) * c_[k];
  return Series(std::move(v));
}

cplx Series::evaluate(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

double Series::max_abs_diff(const Series& other) const {
  double m = 0.0;
  const std::size_t n = std::min(c_.size(), other.c_.size());
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(c_[k] - other.c_[k]));
  return m;
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] + b[k];
  return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] - b[k];
  return Series(std::move(v));
}

Series operator-(const Series& a) { return cplx(-1.0) * a; }

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<cplx> v(n + 1, cplx(0.0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx(0.0)) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return Series(std::move(v));
}

Series operator*(cplx s, const Series& a) {
  std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) x *= s;
  return Series(std::move(v));
}

Series reciprocal(const Series& a) {
  if (a[0] == cplx(0.0)) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t n = a.order();
  std::vector<cplx> v(n + 1);
  v[0] = 1.0 / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * v[k - j];
    v[k] = -s * v[0];
  }
  return Series(std::move(v));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != cplx(0.0))
    throw DomainError("compose: inner series has nonzero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  Series acc = Series::constant(outer[n], n);
  const Series in = inner.truncated(n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * in;
    std::vector<cplx> v(acc.coeffs().begin(), acc.coeffs().end());
    v[0] += outer[k];
    acc = Series(std::move(v));
  }
  return acc;
}

// Newton on the series ring: g <- g - (f(g) - z) / f'(g). If g is exact
// modulo z^{k+1} the update is exact modulo z^{2k+2}.
Series invert_composition(const Series& f) {
  const std::size_t n = f.order();
  if (n < 1) throw DomainError("invert_composition needs order >= 1");
  if (f[0] != cplx(0.0))
    throw DomainError("invert_composition: f_0 must vanish");
  if (f[1] == cplx(0.0))
    throw DomainError("invert_composition: f_1 = 0, jet is not invertible");
  const Series z = Series::identity(n);
  Series g = (1.0 / f[1]) * z;
  const Series df = f.derivative();
  std::size_t accurate = 1;
  while (accurate < n) {
    const Series residual = compose(f, g) - z;
    g = g - residual * reciprocal(compose(df, g));
    accurate = 2 * accurate + 1;
  }
  return g;
}

Series elementary(Elementary f, const Series& a, double p) {
  const std::size_t n = a.order();
  std::vector<cplx> b(n + 1, cplx(0.0));
  if (f != Elementary::Exp && a[0] != cplx(0.0))
    throw DomainError("elementary: log1p/sqrt1p/pow1p need a zero constant term");
  switch (f) {
    case Elementary::Exp:
      // k b_k = sum_{j=1}^k j a_j b_{k-j}
      b[0] = std::exp(a[0]);
      for (std::size_t k = 1; k <= n; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * b[k - j];
        b[k] = s / static_cast<double>(k);
      }
      break;
    case Elementary::Log1p:
      // (1+a) b' = a'
      for (std::size_t k = 1; k <= n; ++k) {
        cplx s = static_cast<double>(k) * a[k];
        for (std::size_t j = 1; j < k; ++j)
          s -= a[j] * static_cast<double>(k - j) * b[k - j];
        b[k] = s / static_cast<double>(k);
      }
      break;
    case Elementary::Sqrt1p:
    case Elementary::Pow1p: {
      // (1+a) b' = p a' b
      const double q = (f == Elementary::Sqrt1p) ? 0.5 : p;
      b[0] = 1.0;
      for (std::size_t k = 1; k <= n; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 1; j <= k; ++j)
          s += (q * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * b[k - j];
        b[k] = s / static_cast<double>(k);
      }
      break;
    }
  }
  return Series(std::move(b));
}

Series exp(const Series& a) { return elementary(Elementary::Exp, a); }
Series log1p(const Series& a) { return elementary(Elementary::Log1p, a); }
Series sqrt1p(const Series& a) { return elementary(Elementary::Sqrt1p, a); }
Series pow1p(const Series& a, double p) { return elementary(Elementary::Pow1p, a, p); }

}  // namespace fj
