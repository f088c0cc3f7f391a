#include "freejacobi/characteristic_flow.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "freejacobi/errors.hpp"

namespace fj {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
}

}  // namespace

double coefficient_A(double alpha) {
  require_alpha(alpha);
  return (1.0 - 2.0 * alpha) / (2.0 * alpha);
}

cplx coefficient_B(double alpha, cplx z0) {
  const double a = coefficient_A(alpha);
  if (z0 == cplx(1.0)) throw DomainError("coefficient_B: z0 = 1");
  return (1.0 - alpha) / (alpha * (1.0 - z0)) + a * a;
}

cplx coefficient_C(double alpha, cplx z0) {
  require_alpha(alpha);
  if (z0 == cplx(1.0)) throw DomainError("coefficient_C: z0 = 1");
  return (alpha - 1.0) / (1.0 - z0);
}

cplx v_map(double alpha, double t, cplx u) {
  const double a = coefficient_A(alpha);
  if (u == cplx(-a - 1.0)) throw DomainError("v_map: pole at u = -A-1");
  if (u == cplx(-a)) throw DomainError("v_map: pole at u = -A");
  return (u - a - 1.0) * (u - a) / ((u + a + 1.0) * (u + a)) * std::exp(2.0 * alpha * u * t);
}

cplx v_map_derivative(double alpha, double t, cplx u) {
  const double a = coefficient_A(alpha);
  if (u == cplx(-a - 1.0) || u == cplx(-a)) throw DomainError("v_map_derivative: pole");
  const cplx num = (u - a - 1.0) * (u - a), den = (u + a + 1.0) * (u + a);
  const cplx dnum = 2.0 * u - 2.0 * a - 1.0, dden = 2.0 * u + 2.0 * a + 1.0;
  const cplx e = std::exp(2.0 * alpha * u * t);
  return ((dnum * den - num * dden) / (den * den) + 2.0 * alpha * t * num / den) * e;
}

cplx inversion_rhs(double alpha, double t, cplx u) {
  const double a = coefficient_A(alpha);
  const cplx v = v_map(alpha, t, u);
  const cplx d = (u - a) + (u + a) * v;
  if (d == cplx(0.0)) throw DomainError("inversion_rhs: vanishing denominator D");
  const cplx w = (1.0 - v) / d;
  return 1.0 + 2.0 * a * w - (u * u - a * a) * w * w;
}

cplx inversion_rhs_derivative(double alpha, double t, cplx u) {
  const double a = coefficient_A(alpha);
  const cplx v = v_map(alpha, t, u), dv = v_map_derivative(alpha, t, u);
  const cplx d = (u - a) + (u + a) * v;
  if (d == cplx(0.0)) throw DomainError("inversion_rhs_derivative: vanishing denominator D");
  const cplx dd = 1.0 + v + (u + a) * dv;
  const cplx w = (1.0 - v) / d;
  const cplx dw = (-dv * d - (1.0 - v) * dd) / (d * d);
  return 2.0 * a * dw - 2.0 * u * w * w - 2.0 * (u * u - a * a) * w * dw;
}

namespace {

struct NewtonResult {
  cplx u;
  int iterations;
  double residual;
  bool ok;
};

NewtonResult newton(double alpha, double t, cplx target, cplx u, const FlowOptions& opt) {
  auto res = [&](cplx x) { return inversion_rhs(alpha, t, x) - target; };
  cplx f = res(u);
  double r = std::abs(f);
  int it = 0;
  for (; it < opt.max_newton && r > 1e-15 * std::max(1.0, std::abs(target)); ++it) {
    const cplx step = f / inversion_rhs_derivative(alpha, t, u);
    double lambda = 1.0;
    bool improved = false;
    for (int k = 0; k < 12; ++k, lambda *= 0.5) {
      const cplx trial = u - lambda * step;
      const cplx ft = res(trial);
      if (std::isfinite(ft.real()) && std::isfinite(ft.imag()) && std::abs(ft) < r) {
        u = trial;
        f = ft;
        r = std::abs(ft);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {u, it, r, r < opt.tol};
}

}  // namespace

FlowPoint trace_flow(double alpha, double t, cplx z, const FlowOptions& opt) {
  require_alpha(alpha);
  if (!(t >= 0.0)) throw DomainError("trace_flow: t must be >= 0");
  const double a = coefficient_A(alpha);

  cplx u = 1.0 / (2.0 * alpha);
  cplx root = u;  // sqrt(A^2 z + (1-z) J^2) at z = 0
  double s = 0.0, ds = 1.0 / std::max(1, opt.steps);
  int total_iterations = 0;
  double residual = 0.0;
  while (s < 1.0) {
    ds = std::min(ds, 1.0 - s);
    if (ds < 1e-10) {
      std::ostringstream os;
      os << "local_inverse_J: continuation step underflow at s = " << s << " towards z = " << z
         << " (alpha = " << alpha << ", t = " << t << ")";
      throw ConvergenceError(os.str());
    }
    const double s_next = (1.0 - s <= ds) ? 1.0 : s + ds;
    const cplx z_prev = s * z, z_next = s_next * z;
    // Euler predictor from the local derivative.
    const cplx u_pred = u + (z_next - z_prev) / inversion_rhs_derivative(alpha, t, u);
    NewtonResult nr = newton(alpha, t, z_next, u_pred, opt);
    // Reject corrections that move far from the predictor: likely a branch jump.
    const bool jump = std::abs(nr.u - u_pred) > 0.5 * std::abs(u_pred - u) + 1e-8;
    if (!nr.ok || jump) {
      ds *= 0.5;
      continue;
    }
    const cplx next_sq = a * a * z_next + (1.0 - z_next) * nr.u * nr.u;
    cplx next_root = std::sqrt(next_sq);
    if (std::abs(next_root - root) > std::abs(next_root + root)) next_root = -next_root;
    u = nr.u;
    root = next_root;
    s = s_next;
    total_iterations += nr.iterations;
    residual = nr.residual;
    if (nr.iterations < 4) ds *= 2.0;
  }

  FlowPoint p;
  p.alpha = alpha;
  p.t = t;
  p.z = z;
  p.u = u;
  p.A = a;
  p.B = u * u;
  p.C = -alpha * (u * u - a * a);
  p.J = u;
  p.psi_t = v_map(alpha, t, u);
  if (std::abs(1.0 - z) < 1e-8) throw DomainError("mgf: branch ambiguity, |1-z| < 1e-8");
  p.M_sqrt = (-a + root) / (1.0 - z);
  p.M_homographic = u * (1.0 + p.psi_t) / (1.0 - p.psi_t) - a;
  p.newton_iterations = total_iterations;
  p.residual = residual;
  return p;
}

cplx local_inverse_J(double alpha, double t, cplx z, const FlowOptions& opt) {
  return trace_flow(alpha, t, z, opt).J;
}

MgfPair mgf_theorem1(double alpha, double t, cplx z, const FlowOptions& opt) {
  const FlowPoint p = trace_flow(alpha, t, z, opt);
  return {p.M_sqrt, p.M_homographic};
}

std::vector<double> mgf_coefficients(double alpha, double t, int n, double r, int points,
                                     const FlowOptions& opt) {
  if (n < 0 || points < 2 * n + 2) throw DomainError("mgf_coefficients: too few points");
  std::vector<cplx> acc(n + 1, cplx(0.0));
  for (int k = 0; k < points; ++k) {
    const double th = 2.0 * std::numbers::pi * k / points;
    const cplx z = std::polar(r, th);
    const cplx m = trace_flow(alpha, t, z, opt).M_sqrt;
    for (int j = 0; j <= n; ++j) acc[j] += m * std::polar(1.0, -j * th);
  }
  std::vector<double> out(n + 1);
  for (int j = 0; j <= n; ++j) out[j] = (acc[j] / (points * std::pow(r, j))).real();
  return out;
}

double empirical_radius(double alpha, double t, const FlowOptions& opt) {
  auto reaches = [&](cplx z) {
    try {
      trace_flow(alpha, t, z, opt);
      return true;
    } catch (const ConvergenceError&) {
      return false;
    } catch (const DomainError&) {
      return false;
    }
  };
  double best = 1.0;
  for (int k = 0; k < 8; ++k) {
    const cplx dir = std::polar(1.0, 2.0 * std::numbers::pi * k / 8.0);
    double lo = 0.0, hi = opt.r_max;
    while (hi < 1.0 && reaches(hi * dir)) {
      lo = hi;
      hi *= 2.0;
    }
    if (hi >= 1.0 && reaches(std::min(hi, 1.0 - 1e-9) * dir)) {
      lo = std::min(hi, 1.0 - 1e-9);
      hi = lo;
    }
    for (int it = 0; it < 20 && hi - lo > 1e-4; ++it) {
      const double mid = 0.5 * (lo + hi);
      (reaches(mid * dir) ? lo : hi) = mid;
    }
    best = std::min(best, lo);
  }
  return best;
}

std::vector<CharacteristicSample> integrate_characteristic(double alpha, cplx z0, double t_end,
                                                           double dt) {
  require_alpha(alpha);
  if (!(dt > 0.0) || !(t_end >= 0.0)) throw DomainError("integrate_characteristic: bad grid");
  struct S {
    cplx z, f, y;
  };
  auto rhs = [alpha](const S& s) {
    return S{(1.0 - 2.0 * alpha) * s.z + 2.0 * alpha * s.z * (1.0 - s.z) * s.f,
             alpha * s.z * s.f * s.f, s.z};
  };
  auto axpy = [](const S& s, double h, const S& k) {
    return S{s.z + h * k.z, s.f + h * k.f, s.y + h * k.y};
  };
  S s{z0, 1.0 / (1.0 - z0), 0.0};
  std::vector<CharacteristicSample> out{{0.0, s.z, s.f, s.y}};
  const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  double t = 0.0;
  for (long i = 1; i <= steps; ++i) {
    const double t1 = (i == steps) ? t_end : static_cast<double>(i) * dt;
    const double h = t1 - t;
    const S k1 = rhs(s), k2 = rhs(axpy(s, 0.5 * h, k1)), k3 = rhs(axpy(s, 0.5 * h, k2)),
            k4 = rhs(axpy(s, h, k3));
    s.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    s.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    s.y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    t = t1;
    out.push_back({t, s.z, s.f, s.y});
  }
  return out;
}

cplx riccati_residual(double alpha, cplx z0, const CharacteristicSample& s) {
  const double a = coefficient_A(alpha);
  const cplx lhs = alpha * s.z * s.f * s.f;
  const cplx rhs = alpha * (s.f + a) * (s.f + a) - (1.0 - alpha) / (1.0 - z0) -
                   (1.0 - 2.0 * alpha) * (1.0 - 2.0 * alpha) / (4.0 * alpha);
  return lhs - rhs;
}

}  // namespace fj
