#include "freejacobi/chi_saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "freejacobi/errors.hpp"
#include "freejacobi/vmap_analysis.hpp"

namespace fj {

namespace {

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
}

// At alpha = 1/2 the factor (w+1-alpha)/(w+alpha) is identically 1.
bool half(double alpha) { return alpha == 0.5; }

}  // namespace

AdmissibilityProbe admissibility_probe(double alpha, double t) {
  require_alpha(alpha);
  AdmissibilityProbe p;
  p.alpha = alpha;
  p.t = t;
  p.S0 = alpha / (1.0 - alpha) * std::exp(t);
  // alpha^2 z^2 + (4(1-alpha)^2 - 2 alpha^2) z + alpha^2
  const double a = alpha * alpha, b = 4.0 * (1.0 - alpha) * (1.0 - alpha) - 2.0 * alpha * alpha;
  const cplx root = std::sqrt(cplx(b * b - 4.0 * a * a));
  p.q_roots = {(-b + root) / (2.0 * a), (-b - root) / (2.0 * a)};
  p.q_root_modulus = std::max(std::abs(p.q_roots[0]), std::abs(p.q_roots[1]));
  return p;
}

cplx s_transform_deformed(double alpha, double t, cplx u) {
  require_alpha(alpha);
  if (u == cplx(alpha - 1.0)) throw DomainError("s_transform_deformed: pole at u = alpha-1");
  return (u + alpha) / (u + 1.0 - alpha) * std::exp((1.0 + 2.0 * u) * t);
}

cplx chi(double alpha, double t, cplx u) {
  require_alpha(alpha);
  if (u == cplx(-1.0)) throw DomainError("chi: pole at u = -1");
  if (u == cplx(alpha - 1.0)) throw DomainError("chi: pole at u = alpha-1");
  return u * (u + alpha) / ((u + 1.0) * (u + 1.0 - alpha)) * std::exp((1.0 + 2.0 * u) * t);
}

cplx phi_complex(double alpha, double t, cplx w) {
  require_alpha(alpha);
  cplx q = (1.0 + w) / w;
  if (!half(alpha)) q *= (w + 1.0 - alpha) / (w + alpha);
  return 2.0 * t * w - std::log(q);
}

double phi(double alpha, double t, double w) {
  require_alpha(alpha);
  if (!(w > -alpha && w < 0.0)) throw DomainError("phi: need -alpha < w < 0");
  if (!(1.0 - alpha + w > 0.0)) throw DomainError("phi: need 1 - alpha + w > 0");
  double q = (1.0 + w) / (-w);
  if (!half(alpha)) q *= (1.0 - alpha + w) / (alpha + w);
  return 2.0 * t * w - std::log(q);
}

cplx phi_second_derivative(double alpha, cplx w) {
  require_alpha(alpha);
  cplx v = 1.0 / ((1.0 + w) * (1.0 + w)) - 1.0 / (w * w);
  if (!half(alpha))
    v += 1.0 / ((1.0 - alpha + w) * (1.0 - alpha + w)) - 1.0 / ((alpha + w) * (alpha + w));
  return v;
}

double discriminant(double alpha, double t) {
  const double p = 1.0 + alpha * t;
  return (1.0 - alpha) * ((1.0 - alpha) * p * p - 2.0 * alpha * t);
}

std::string to_string(SaddleRegime r) {
  switch (r) {
    case SaddleRegime::RealFour: return "real-four";
    case SaddleRegime::ComplexTwoPairs: return "complex-two-pairs";
    default: return "complex-conjugate";
  }
}

SaddleReport critical_points(double alpha, double t) {
  require_alpha(alpha);
  if (!(t > 0.0)) throw DomainError("critical_points: t must be > 0");
  SaddleReport r;
  r.alpha = alpha;
  r.t = t;
  r.S0 = alpha / (1.0 - alpha) * std::exp(t);
  r.Delta = discriminant(alpha, t);
  const double p = (1.0 - alpha) * (1.0 + alpha * t);
  const cplx sd = std::sqrt(cplx(r.Delta));
  r.Zplus = (-p + sd) / (2.0 * t);
  r.Zminus = (-p - sd) / (2.0 * t);
  const cplx sp = std::sqrt(0.25 + r.Zplus), sm = std::sqrt(0.25 + r.Zminus);
  r.w = {-0.5 + sp, -0.5 + sm, -0.5 - sp, -0.5 - sm};
  for (int k = 0; k < 4; ++k) {
    r.phi_at_w[k] = phi_complex(alpha, t, r.w[k]);
    r.phi2_at_w[k] = phi_second_derivative(alpha, r.w[k]);
  }
  r.U_plus = 2.0 * sp;
  r.U_minus = 2.0 * sm;

  if (r.Delta < 0.0) {
    r.regime = SaddleRegime::ComplexConjugate;
  } else if (std::min(r.Zplus.real(), r.Zminus.real()) >= -0.25) {
    r.regime = SaddleRegime::RealFour;
  } else {
    r.regime = SaddleRegime::ComplexTwoPairs;
  }
  r.decay_plus = t + r.phi_at_w[0].real();
  r.decay_minus = t + r.phi_at_w[1].real();
  return r;
}

Series chi_series(double alpha, double t, std::size_t order) {
  require_alpha(alpha);
  std::vector<cplx> num(order + 1, cplx(0.0)), den(order + 1, cplx(0.0));
  if (order >= 1) num[1] = alpha;
  if (order >= 2) num[2] = 1.0;
  den[0] = 1.0 - alpha;
  if (order >= 1) den[1] = 2.0 - alpha;
  if (order >= 2) den[2] = 1.0;
  return std::exp(t) * (Series(std::move(num)) * reciprocal(Series(std::move(den))) *
                        Series::exponential(2.0 * t, order));
}

double ChiCoefficients::a(int n) const { return b(n) * std::exp(n * t); }

double ChiCoefficients::log_abs_a(int n) const { return std::log(std::abs(b(n))) + n * t; }

ChiCoefficients coeffs_lagrange(double alpha, double t, int N) {
  require_alpha(alpha);
  if (N < 1) throw DomainError("coeffs_lagrange: N must be >= 1");
  if (N > 200) throw DomainError("coeffs_lagrange: N > 200 exceeds the double-precision guard");
  const Series inv = invert_composition(chi_series(alpha, t, static_cast<std::size_t>(N)));
  ChiCoefficients c;
  c.alpha = alpha;
  c.t = t;
  c.scaled.resize(N);
  for (int n = 1; n <= N; ++n) {
    const double v = inv[n].real();
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "coeffs_lagrange: overflow at n = " << n << "; use a smaller N or another t";
      throw ConvergenceError(os.str());
    }
    c.scaled[n - 1] = v;
  }
  return c;
}

namespace {

// log of the integrand of a_n e^{-nt}, divided by n.
cplx log_kernel(double alpha, double t, cplx w) {
  cplx v = std::log(1.0 + 1.0 / w) - 2.0 * t * w - t;
  if (!half(alpha)) v += std::log(w + 1.0 - alpha) - std::log(w + alpha);
  return v;
}

double circle_max(double alpha, double t, double r) {
  double m = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 256; ++k)
    m = std::max(m, log_kernel(alpha, t, std::polar(r, 2.0 * kPi * k / 256.0)).real());
  return m;
}

cplx trapezoid(double alpha, double t, int n, double r, int points) {
  std::vector<cplx> logs(points);
  double lmax = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < points; ++k) {
    const cplx w = std::polar(r, 2.0 * kPi * k / points);
    logs[k] = static_cast<double>(n) * log_kernel(alpha, t, w) + std::log(w);
    lmax = std::max(lmax, logs[k].real());
  }
  cplx acc = 0.0;
  for (int k = 0; k < points; ++k) acc += std::exp(logs[k] - lmax);
  return acc * std::exp(lmax) / (static_cast<double>(n) * points);
}

}  // namespace

double contour_radius(double alpha, double t, int n) {
  require_alpha(alpha);
  (void)n;  // the kernel scales linearly in n
  const double lo = std::log(0.02 * alpha), hi = std::log(0.98 * alpha);
  const int grid = 96;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double v = circle_max(alpha, t, std::exp(lo + (hi - lo) * i / grid));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  // Golden-section refinement in log r.
  double a = lo + (hi - lo) * std::max(0, best - 1) / grid;
  double b = lo + (hi - lo) * std::min(grid, best + 1) / grid;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = circle_max(alpha, t, std::exp(x1)), f2 = circle_max(alpha, t, std::exp(x2));
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = circle_max(alpha, t, std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = circle_max(alpha, t, std::exp(x2));
    }
  }
  return std::exp(0.5 * (a + b));
}

ContourResult coeffs_contour_scaled(double alpha, double t, int n, std::optional<double> radius,
                                    int points) {
  require_alpha(alpha);
  if (n < 1) throw DomainError("coeffs_contour: n must be >= 1");
  const double r = radius ? *radius : contour_radius(alpha, t, n);
  if (!(r > 0.0)) throw DomainError("coeffs_contour: radius must be > 0");
  if (!(r < alpha) && !half(alpha))
    throw DomainError("coeffs_contour: radius >= alpha encloses the pole at -alpha");
  if (!(r < 1.0)) throw DomainError("coeffs_contour: radius >= 1 encloses the pole at -1");
  ContourResult out;
  out.radius = r;
  if (points > 0) {
    out.points = points;
    out.scaled = trapezoid(alpha, t, n, r, points);
    return out;
  }
  int p = 2048;
  cplx prev = trapezoid(alpha, t, n, r, p);
  while (p < (1 << 20)) {
    p *= 2;
    const cplx cur = trapezoid(alpha, t, n, r, p);
    if (std::abs(cur - prev) <= 1e-10 * std::abs(cur)) {
      out.points = p;
      out.scaled = cur;
      return out;
    }
    prev = cur;
  }
  std::ostringstream os;
  os << "coeffs_contour: no agreement up to " << p << " nodes (n = " << n << ", r = " << r << ")";
  throw ConvergenceError(os.str());
}

cplx coeffs_contour(double alpha, double t, int n, std::optional<double> radius, int points) {
  return coeffs_contour_scaled(alpha, t, n, radius, points).scaled * std::exp(n * t);
}

SaddleAsymptotic saddle_asymptotic(double alpha, double t, int n) {
  if (!(alpha >= 0.5)) throw DomainError("saddle_asymptotic: alpha must be >= 1/2");
  const SaddleReport r = critical_points(alpha, t);
  if (r.regime != SaddleRegime::RealFour)
    throw DomainError("saddle_asymptotic: needs the real-four regime (t >= t1(alpha))");
  const double nn = static_cast<double>(n);
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const cplx i(0.0, 1.0);
  const cplx cp =
      std::exp(-nn * r.decay_plus) / std::sqrt(-2.0 * i * kPi * nn * r.phi2_at_w[0]);
  cplx sum = cp;
  // At alpha = 1/2, w_{+,-} = -1/2 comes from the cancelled factor and is not a saddle.
  if (!half(alpha))
    sum += std::exp(-nn * r.decay_minus) / std::sqrt(2.0 * i * kPi * nn * std::abs(r.phi2_at_w[1]));

  SaddleAsymptotic out;
  out.magnitude = std::abs(sum);
  out.rate = half(alpha) ? r.decay_plus : std::min(r.decay_plus, r.decay_minus);
  out.predicted_sign = parity * (sum.real() >= 0.0 ? 1.0 : -1.0);
  out.single_saddle = -parity * std::exp(-nn * r.decay_plus) /
                      (nn * std::sqrt(2.0 * kPi * nn * std::abs(r.phi2_at_w[0].real())));
  return out;
}

}  // namespace fj
