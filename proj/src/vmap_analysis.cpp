#include "freejacobi/vmap_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "freejacobi/csv.hpp"
#include "freejacobi/errors.hpp"

namespace fj {

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
}

void require_point(double alpha, double u) {
  if (!(u >= 0.0)) throw DomainError("v_tilde: u must be >= 0");
  if (alpha >= 0.5 && u == 2.0 * alpha - 1.0) {
    std::ostringstream os;
    os << "v_tilde: singular at u = 2alpha-1 = " << u;
    throw DomainError(os.str());
  }
}

// u - 1 + 2a written as u + (2a - 1) so that alpha = 1/2 does not cancel near u = 0
double ratio(double alpha, double u) {
  const double s = 2.0 * alpha - 1.0;
  return (u - 1.0) * (u + s) / ((u + 1.0) * (u - s));
}

// Same ratio at u = 1 + d with d carried exactly.
double ratio_offset(double alpha, double d) {
  return d * (d + 2.0 * alpha) / ((2.0 + d) * (d + 2.0 - 2.0 * alpha));
}

}  // namespace

SignedLog v_tilde_log(double alpha, double t, double u) {
  require_alpha(alpha);
  require_point(alpha, u);
  const double r = ratio(alpha, u);
  if (r == 0.0) return {0, -std::numeric_limits<double>::infinity()};
  return {r > 0 ? 1 : -1, std::log(std::abs(r)) + t * u};
}

double v_tilde(double alpha, double t, double u) {
  require_alpha(alpha);
  require_point(alpha, u);
  if (t * u <= 300.0) return ratio(alpha, u) * std::exp(t * u);
  return v_tilde_log(alpha, t, u).value();
}

double v_tilde_offset(double alpha, double t, double d) {
  require_alpha(alpha);
  require_point(alpha, 1.0 + d);
  const double r = ratio_offset(alpha, d);
  const double e = t * (1.0 + d);
  if (e <= 300.0 || r == 0.0) return r * std::exp(e);
  return std::copysign(std::exp(std::log(std::abs(r)) + e), r);
}

double r_polynomial(double alpha, double t, double y) {
  const double c = (2.0 * alpha - 1.0) * (2.0 * alpha - 1.0);
  return 4.0 * (1.0 - alpha) * (y - 1.0 + 2.0 * alpha) + t * (y - 1.0) * (y - c);
}

double v_tilde_derivative(double alpha, double t, double u) {
  require_alpha(alpha);
  require_point(alpha, u);
  const double d = (u + 1.0) * (u + 1.0 - 2.0 * alpha);
  return std::exp(t * u) / (d * d) * r_polynomial(alpha, t, u * u);
}

double threshold_T(double alpha) {
  require_alpha(alpha);
  const double c = 1.0 - 2.0 * alpha;
  return 4.0 * (1.0 - alpha) / (1.0 + c * c);
}

TransitionTimes transition_times(double alpha) {
  if (!(alpha >= 0.5)) throw DomainError("transition_times: alpha must be >= 1/2");
  if (!(alpha < 1.0)) throw DomainError("transition_times: alpha must be < 1");
  const double s = std::sqrt(2.0 * alpha - 1.0), d = alpha * (1.0 - alpha);
  return {(alpha - s) / d, (alpha + s) / d};
}

std::string to_string(VRegime r) {
  switch (r) {
    case VRegime::Increasing: return "increasing";
    case VRegime::InteriorMin: return "interior-min";
    default: return "not-applicable";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bijection: return "bijection";
    case Verdict::ProperSubset: return "proper-subset";
    default: return "undetermined";
  }
}

namespace {

// Positive roots u of R(u^2), ascending.
std::vector<double> critical_points(double alpha, double t) {
  const double c = (2.0 * alpha - 1.0) * (2.0 * alpha - 1.0);
  const double qa = t, qb = 4.0 * (1.0 - alpha) - t * (1.0 + c),
               qc = 4.0 * (1.0 - alpha) * (2.0 * alpha - 1.0) + t * c;
  std::vector<double> ys;
  if (qa == 0.0) {
    if (qb != 0.0) ys.push_back(-qc / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      // Stable quadratic roots.
      const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
      if (q != 0.0) {
        ys.push_back(q / qa);
        ys.push_back(qc / q);
      } else {
        ys.push_back(0.0);
      }
    }
  }
  std::vector<double> us;
  for (double y : ys)
    if (y > 0.0) us.push_back(std::sqrt(y));
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  return us;
}

// Bisection in the offset d = u - 1 for Vt(1 + d) = target, with
// Vt(1 + lo) < target < Vt(1 + hi) on a monotone piece.
double solve_monotone(double alpha, double t, double lo, double hi, double target) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (v_tilde_offset(alpha, t, mid) < target ? lo : hi) = mid;
  }
  const double elo = std::abs(v_tilde_offset(alpha, t, lo) - target);
  const double ehi = std::abs(v_tilde_offset(alpha, t, hi) - target);
  return elo <= ehi ? lo : hi;
}

}  // namespace

PhaseReport phase_report(double alpha, double t) {
  require_alpha(alpha);
  if (!(t >= 0.0)) throw DomainError("phase_report: t must be >= 0");
  PhaseReport rep;
  rep.alpha = alpha;
  rep.t = t;
  rep.T_alpha = threshold_T(alpha);
  rep.critical_points = critical_points(alpha, t);

  if (alpha >= 0.5) {
    rep.times = transition_times(alpha);
    const double s = 2.0 * alpha - 1.0;
    double left = s, right = std::numeric_limits<double>::infinity();
    bool interior = false;
    for (double u : rep.critical_points) {
      if (u <= s) continue;
      interior = true;
      if (u < 1.0) left = std::max(left, u);
      if (u > 1.0) right = std::min(right, u);
    }
    rep.regime = interior ? VRegime::InteriorMin : VRegime::Increasing;

    // Left end: Vt(a) = -1 on (left, 1).
    if (left == s && alpha == 0.5 && t <= 2.0) {
      // Vt tends to -1 at u = 0+ from above: the interval starts at the excluded point.
      rep.a_offset = -1.0;
    } else {
      if (left > s && !(v_tilde(alpha, t, left) < -1.0)) {
        rep.verdict = Verdict::Undetermined;
        return rep;
      }
      double lo = 0.0;
      bool found = false;
      for (int k = 1; k < 1100; ++k) {
        lo = (left - 1.0) * (1.0 - std::ldexp(1.0, -k));
        if (1.0 + lo <= left) break;
        if (v_tilde_offset(alpha, t, lo) < -1.0) {
          found = true;
          break;
        }
      }
      if (!found) {
        std::ostringstream os;
        os << "phase_report: no bracket for Vt = -1 on (" << left << ", 1), alpha = " << alpha
           << ", t = " << t;
        throw ConvergenceError(os.str());
      }
      rep.a_offset = solve_monotone(alpha, t, lo, 0.0, -1.0);
    }

    // Right end: Vt(b) = +1, brackets grown geometrically from u = 1.
    double hi = 1.0;
    bool found = false;
    while (hi < 50.0) {
      hi = std::min(2.0 * hi, 50.0);
      if (hi >= right) break;
      if (v_tilde(alpha, t, hi) > 1.0) {
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "phase_report: no bracket for Vt = +1 on (1, " << std::min(hi, right)
         << "], alpha = " << alpha << ", t = " << t;
      throw ConvergenceError(os.str());
    }
    rep.b_offset = solve_monotone(alpha, t, 0.0, hi - 1.0, 1.0);
    rep.a = 1.0 + *rep.a_offset;
    rep.b = 1.0 + *rep.b_offset;
    rep.verdict = Verdict::Bijection;
    return rep;
  }

  // alpha < 1/2: Vt(0) = 1, Vt -> +inf; the image misses (-1, 1) iff the
  // smallest local minimum stays above -1.
  rep.regime = rep.critical_points.size() == 1 ? VRegime::InteriorMin : VRegime::NotApplicable;
  for (double u : rep.critical_points) {
    const double h = 1e-7 * std::max(1.0, u);
    if (r_polynomial(alpha, t, (u + h) * (u + h)) <= 0.0) continue;  // not a minimum
    const double v = v_tilde(alpha, t, u);
    if (!rep.min_value || v < *rep.min_value) {
      rep.min_value = v;
      rep.min_location = u;
    }
  }
  if (rep.min_value && *rep.min_value > -1.0) rep.verdict = Verdict::ProperSubset;
  return rep;
}

double alpha_at_time(double t) {
  if (!(t >= 2.0)) throw DomainError("alpha_at_time: t must be >= 2");
  double lo = 0.5, hi = 1.0 - 1e-15;
  if (transition_times(hi).t1 < t) throw DomainError("alpha_at_time: t too large");
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (transition_times(mid).t1 < t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double remark_probe(double alpha, double t) {
  if (!(alpha >= 0.5)) throw DomainError("remark_probe: alpha must be >= 1/2");
  const double x = std::sqrt(2.0 * alpha - 1.0);
  const double u = std::sqrt(x * (2.0 * alpha - x));
  if (u == 0.0) return -1.0;  // (u-1)/(u+1) e^{tu} at u = 0
  return v_tilde(alpha, t, u);
}

void write_phase_csv_header(std::ostream& os) {
  csv::write_row(os, {"alpha", "t", "verdict", "t0", "t1", "a", "b", "a_minus_1", "b_minus_1",
                      "min_value"});
}

void write_phase_csv_row(std::ostream& os, const PhaseReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? csv::num(*v) : std::string(); };
  csv::write_row(os, {csv::num(r.alpha), csv::num(r.t), to_string(r.verdict),
                      r.times ? csv::num(r.times->t0) : "", r.times ? csv::num(r.times->t1) : "",
                      opt(r.a), opt(r.b), opt(r.a_offset), opt(r.b_offset), opt(r.min_value)});
}

}  // namespace fj
