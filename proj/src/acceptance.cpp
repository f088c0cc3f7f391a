#include "freejacobi/acceptance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "freejacobi/characteristic_flow.hpp"
#include "freejacobi/chi_saddle.hpp"
#include "freejacobi/dynamic_identity.hpp"
#include "freejacobi/fubm_transforms.hpp"
#include "freejacobi/jacobi_moments.hpp"
#include "freejacobi/matrix_mc.hpp"
#include "freejacobi/vmap_analysis.hpp"
#include "freejacobi/wachter_kunisky.hpp"

namespace fj::acceptance {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fix(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Collects checks and detail lines for one criterion.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      lines_ << "  failed: " << what << '\n';
    }
  }
  void note(const std::string& what) { lines_ << "  " << what << '\n'; }
  bool pass() const { return pass_; }
  std::string lines() const { return lines_.str(); }

 private:
  bool pass_ = true;
  std::ostringstream lines_;
};

// ---- 1
void moment_hierarchy(Report& rep, int) {
  double worst = 0.0;
  for (double alpha : {0.3, 0.5, 0.7}) {
    const auto traj = integrate(Family::EqualRanks, alpha, delta_one_moments(10), 2.0, 1e-3);
    for (double t : {0.5, 1.0, 2.0}) {
      const double err = std::abs(traj.at(t)[1] - (alpha + (1.0 - alpha) * std::exp(-t)));
      worst = std::max(worst, err);
      rep.check(err < 1e-8, "m1 alpha=" + fix(alpha) + " t=" + fix(t) + " err=" + sci(err));
    }
  }
  rep.note("max |m1 - closed form| = " + sci(worst));
}

// ---- 2
void theorem_consistency(Report& rep, int) {
  double worst_coef = 0.0, worst_forms = 0.0;
  for (double alpha : {0.4, 0.6}) {
    const double t = 1.0;
    const auto traj = integrate(Family::EqualRanks, alpha, delta_one_moments(5), t, 1e-3);
    const auto c = mgf_coefficients(alpha, t, 5, 0.02, 64);
    for (int n = 1; n <= 5; ++n) {
      const double err = std::abs(c[n] - traj.at(t)[n]);
      worst_coef = std::max(worst_coef, err);
      rep.check(err < 1e-6, "alpha=" + fix(alpha) + " m" + std::to_string(n) + " err=" + sci(err));
    }
    for (double r : {0.0, 0.01, 0.03, 0.05})
      for (int k = 0; k < 16; ++k) {
        const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / 16.0);
        const MgfPair m = mgf_theorem1(alpha, t, z);
        const double d = std::abs(m.sqrt_form - m.homographic_form);
        worst_forms = std::max(worst_forms, d);
        rep.check(d < 1e-10, "forms differ at |z|=" + fix(r) + " by " + sci(d));
      }
  }
  rep.note("max coefficient error = " + sci(worst_coef) +
           ", max form disagreement = " + sci(worst_forms));
}

// ---- 3
void half_retrieval(Report& rep, int) {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const Herglotz H(t);
    for (double r : {0.0, 0.1, 0.2, 0.3})
      for (int k = 0; k < 16; ++k) {
        const cplx z = std::polar(r, 2.0 * std::numbers::pi * (k + 0.25) / 16.0);
        const cplx m = mgf_theorem1(0.5, t, z).sqrt_form;
        const cplx ref = H(psi_map(z)) / std::sqrt(1.0 - z);
        const double d = std::abs(m - ref);
        worst = std::max(worst, d);
        rep.check(d < 1e-9, "t=" + fix(t) + " |z|=" + fix(r) + " err=" + sci(d));
      }
  }
  rep.note("max |M - H(psi(z))/sqrt(1-z)| = " + sci(worst));
}

// ---- 4
void phase_transitions(Report& rep, int) {
  const auto tt = transition_times(0.5);
  rep.check(std::abs(tt.t0 - 2.0) < 1e-12 && std::abs(tt.t1 - 2.0) < 1e-12,
            "t0(1/2), t1(1/2) = " + fix(tt.t0) + ", " + fix(tt.t1));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = 0.5 + 0.45 * i / 49.0;
    const auto tr = transition_times(alpha);
    rep.check(tr.t0 <= 2.0 && 2.0 <= tr.t1, "ordering at alpha=" + fix(alpha));
    if (i == 0) continue;
    auto delta = [alpha](double t) { return discriminant(alpha, t); };
    const double mid = 1.0 / (1.0 - alpha);
    boost::math::tools::eps_tolerance<double> tol(50);
    boost::uintmax_t it = 200;
    const auto r0 = boost::math::tools::toms748_solve(delta, 0.0, mid, tol, it);
    it = 200;
    const auto r1 = boost::math::tools::toms748_solve(delta, mid, 2.0 / (alpha * (1.0 - alpha)),
                                                      tol, it);
    const double e0 = std::abs(0.5 * (r0.first + r0.second) - tr.t0);
    const double e1 = std::abs(0.5 * (r1.first + r1.second) - tr.t1);
    worst = std::max({worst, e0, e1});
    rep.check(e0 < 1e-10 && e1 < 1e-10, "root mismatch at alpha=" + fix(alpha) + ": " + sci(e0) +
                                             ", " + sci(e1));
  }
  rep.note("max |closed form - bracketed root| = " + sci(worst));
}

// ---- 5
void vmap_bijection(Report& rep, int) {
  for (double alpha : {0.5, 0.6, 0.7, 0.85}) {
    for (double t : {0.5, 2.0, transition_times(alpha).t1 + 1.0}) {
      const std::string tag = "alpha=" + fix(alpha) + " t=" + fix(t);
      const PhaseReport pr = phase_report(alpha, t);
      if (pr.verdict != Verdict::Bijection || !pr.a || !pr.b) {
        rep.check(false, tag + " verdict " + to_string(pr.verdict));
        continue;
      }
      const double a = *pr.a;
      // a = 0 is the excluded endpoint; use the one-sided limit
      const double va =
          a == 0.0 ? v_tilde(alpha, t, 1e-13) : v_tilde_offset(alpha, t, *pr.a_offset);
      const double vb = v_tilde_offset(alpha, t, *pr.b_offset);
      rep.check(std::abs(va + 1.0) < 1e-10, tag + " V(a)+1 = " + sci(va + 1.0));
      rep.check(std::abs(vb - 1.0) < 1e-10, tag + " V(b)-1 = " + sci(vb - 1.0));
      double prev = va;
      bool increasing = true;
      for (int k = 1; k <= 200; ++k) {
        const double d = *pr.a_offset + (*pr.b_offset - *pr.a_offset) * k / 201.0;
        const double v = v_tilde_offset(alpha, t, d);
        increasing = increasing && v > prev;
        prev = v;
      }
      increasing = increasing && vb > prev;
      rep.check(increasing, tag + " not strictly increasing on (a,b)");
      rep.note(tag + " a=1" + (*pr.a_offset < 0 ? "-" : "+") + sci(std::abs(*pr.a_offset)) +
               " b=1+" + sci(*pr.b_offset));
    }
  }
  for (double alpha : {0.2, 0.35, 0.45})
    for (double t : {0.5, 1.0, 2.0}) {
      const std::string tag = "alpha=" + fix(alpha) + " t=" + fix(t);
      const PhaseReport pr = phase_report(alpha, t);
      const bool ok = pr.verdict == Verdict::ProperSubset && pr.min_value && *pr.min_value > -1.0;
      rep.check(ok, tag + " verdict " + to_string(pr.verdict));
      if (pr.min_value) rep.note(tag + " min V = " + fix(*pr.min_value));
    }
}

// ---- 6
void coefficient_agreement(Report& rep, int) {
  double worst_rel = 0.0, worst_radius = 0.0, worst_imag = 0.0;
  for (double alpha : {0.5, 0.6, 0.7}) {
    for (double t : {1.0, transition_times(alpha).t1 + 0.5}) {
      const auto lag = coeffs_lagrange(alpha, t, 30);
      for (int n = 1; n <= 30; ++n) {
        const auto c = coeffs_contour_scaled(alpha, t, n);
        const auto c2 = coeffs_contour_scaled(alpha, t, n, 0.9 * c.radius);
        const double ref = lag.b(n);
        const double rel = std::abs(c.scaled.real() - ref) / std::abs(ref);
        const double imag = std::abs(c.scaled.imag()) / std::abs(ref);
        const double rad = std::abs(c2.scaled - c.scaled) / std::abs(c.scaled);
        worst_rel = std::max(worst_rel, rel);
        worst_imag = std::max(worst_imag, imag);
        worst_radius = std::max(worst_radius, rad);
        const std::string tag = "alpha=" + fix(alpha) + " t=" + fix(t) + " n=" + std::to_string(n);
        rep.check(rel < 1e-8, tag + " lagrange/contour rel=" + sci(rel));
        rep.check(rad < 1e-9, tag + " radius dependence " + sci(rad));
        rep.check(imag < 1e-9, tag + " imaginary part " + sci(imag));
      }
    }
  }
  rep.note("max rel(lagrange, contour) = " + sci(worst_rel) + ", max radius dependence = " +
           sci(worst_radius) + ", max rel imaginary part = " + sci(worst_imag));
}

// ---- 7
void saddle_asymptotics(Report& rep, int) {
  const double alpha = 0.7, t = 7.0;
  const SaddleReport sr = critical_points(alpha, t);
  rep.check(sr.regime == SaddleRegime::RealFour, "regime " + to_string(sr.regime));
  rep.check(sr.phi2_at_w[0].real() < 0.0,
            "phi''(w++) = " + sci(sr.phi2_at_w[0].real()) + " should be < 0");
  rep.check(sr.phi2_at_w[1].real() > 0.0,
            "phi''(w+-) = " + sci(sr.phi2_at_w[1].real()) + " should be > 0");
  rep.check(sr.decay_plus > 0.0, "t + Re phi(w++) = " + sci(sr.decay_plus));
  rep.check(sr.decay_minus > 0.0, "t + Re phi(w+-) = " + sci(sr.decay_minus));
  rep.note("decay rates: " + fix(sr.decay_plus) + ", " + fix(sr.decay_minus));

  const auto lag = coeffs_lagrange(alpha, t, 60);
  double prev_dev = std::numeric_limits<double>::infinity();
  bool improving = true;
  double dev60 = 0.0;
  for (int n : {20, 40, 60}) {
    const SaddleAsymptotic sa = saddle_asymptotic(alpha, t, n);
    const double ratio = std::abs(lag.b(n)) / sa.magnitude;
    const double dev = std::abs(ratio - 1.0);
    improving = improving && dev < prev_dev;
    prev_dev = dev;
    if (n == 60) dev60 = dev;
    rep.note("n=" + std::to_string(n) + " |a_n e^{-nt}|/|c+ + c-| = " + sci(ratio) +
             "  (single-saddle ratio a_n e^{-nt}/s_n = " + fix(lag.b(n) / sa.single_saddle) +
             ")");
  }
  rep.check(dev60 < 0.1, "ratio at n=60 deviates from 1 by " + sci(dev60));
  rep.check(improving, "ratio not improving over n = 20, 40, 60");
}

// ---- 8
void kunisky_static(Report& rep, int) {
  for (double alpha : {0.5, 0.6, 0.7, 0.85}) {
    const double e = kunisky_check(alpha, 10);
    rep.check(e < 1e-8, "alpha=" + fix(alpha) + " rel=" + sci(e));
    rep.note("alpha=" + fix(alpha) + " max rel error j<=10: " + sci(e));
  }
}

// ---- 9
void projection_identities(Report& rep, int) {
  double worst_dh = 0.0, worst_pqp = 0.0;
  for (int N : {50, 56, 60})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      for (int rank : {N * 3 / 10, N * 6 / 10}) {
        const double e = demham_matrix_check(N, rank, rank, seed, 6);
        worst_dh = std::max(worst_dh, e);
        rep.check(e < 1e-10, "projection identity N=" + std::to_string(N) + " rank=" +
                                 std::to_string(rank) + " err=" + sci(e));
      }
      for (int rank : {N * 4 / 10, N * 7 / 10}) {
        const double e = pqp_binomial_check(N, rank, seed, 6);
        worst_pqp = std::max(worst_pqp, e);
        rep.check(e < 1e-10, "binomial identity N=" + std::to_string(N) + " rank=" +
                                 std::to_string(rank) + " err=" + sci(e));
      }
    }
  rep.note("max error: squared-sum identity " + sci(worst_dh) + ", binomial identity " +
           sci(worst_pqp));
}

// ---- 10
void dynamic_identity(Report& rep, int) {
  const double alpha = 0.7;
  const double dt = 2.5e-4;
  const cplx z(2.0, 0.0);
  const auto equal = integrate(Family::EqualRanks, alpha, delta_one_moments(40), 1.01, dt);
  const double r1 = same_pde_residual(Branch::Alpha, equal, 1.0, z, 1e-3);
  const double r2 = same_pde_residual(Branch::Alpha, equal, 1.0, z, 5e-4);
  rep.check(r1 < 1e-4, "equal-ranks branch residual " + sci(r1));
  rep.check(r2 < 0.35 * r1, "equal-ranks branch residual not O(h^2): " + sci(r1) + " -> " + sci(r2));
  const double u1 = u_chain_residual(equal, 0.5, z, 1e-3);
  const double u2 = u_chain_residual(equal, 0.5, z, 5e-4);
  rep.check(u1 < 1e-4, "u-chain residual " + sci(u1));
  rep.check(u2 < 0.35 * u1, "u-chain residual not O(h^2): " + sci(u1) + " -> " + sci(u2));
  rep.note("delta-one data: equal-ranks branch " + sci(r1) + " -> " + sci(r2) + ", u-chain " +
           sci(u1) + " -> " + sci(u2));

  const int order = 80;
  const auto half_st = integrate(Family::HalfRank, alpha, stationary_half_moments(alpha, order),
                                 0.51, dt);
  const auto equal_st =
      integrate(Family::EqualRanks, alpha, stationary_moments(alpha, order), 1.01, dt);
  // v is read through G at (sqrt(y)+1)/2; y = 4 keeps that at 1.5
  const cplx y(4.0, 0.0);
  const double sv = same_pde_residual(Branch::V, half_st, 1.0, y, 1e-3);
  const double sa = same_pde_residual(Branch::Alpha, equal_st, 1.0, y, 1e-3);
  rep.check(sv < 1e-8, "stationary v branch residual " + sci(sv));
  rep.check(sa < 1e-8, "stationary equal-ranks branch residual " + sci(sa));
  const double ev = evenness_proxy(half_st, 0.5);
  rep.note("stationary residuals: v " + sci(sv) + ", equal-ranks " + sci(sa) +
           "; evenness proxy " + sci(ev));
  double worst = 0.0;
  for (cplx w : {cplx(4.0, 0.0), cplx(6.0, 0.0), cplx(9.0, 0.0), cplx(4.0, 4.0), cplx(0.0, 6.0)}) {
    const cplx v = v_from_moments(alpha, half_st.at(0.5), w);
    const cplx g = tilde_equal(alpha, equal_st, 1.0, w);
    worst = std::max(worst, std::abs(v - g));
  }
  rep.check(worst < 1e-7, "stationary v and equal-ranks tilde differ by " + sci(worst));
  rep.note("max |v_{t/2} - G~_t| (stationary) = " + sci(worst));
}

// ---- 11
void equa3_freeness(Report& rep, int threads) {
  for (double alpha : {0.5, 0.7}) {
    const auto rows = equa3_check(400, alpha, 11, 3, 20, Equa3Coupling::Free, threads);
    for (const auto& r : rows) {
      rep.check(std::abs(r.gap) < 0.05, "free alpha=" + fix(alpha) + " j=" + std::to_string(r.j) +
                                            " gap=" + sci(r.gap));
      rep.note("free alpha=" + fix(alpha) + " j=" + std::to_string(r.j) + " lhs=" + fix(r.lhs) +
               " rhs=" + fix(r.rhs) + " gap=" + sci(r.gap) + " +- " + sci(r.std_error));
    }
  }
  const auto rows = equa3_check(400, 0.5, 12, 3, 20, Equa3Coupling::NonFreeControl, threads);
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, std::abs(r.gap));
    rep.note("control j=" + std::to_string(r.j) + " lhs=" + fix(r.lhs) + " rhs=" + fix(r.rhs) +
             " gap=" + sci(r.gap));
  }
  rep.check(worst > 0.2, "non-free control gap only " + sci(worst));
}

// ---- 12
void matrix_limits(Report& rep, int threads) {
  EnsembleConfig cfg;
  cfg.N = 200;
  cfg.replicas = 100;
  cfg.t_end = 1.0;
  cfg.dt = 0.005;
  cfg.seed = 1;
  cfg.threads = threads;
  const auto u = unitary_bm_moments(cfg, 1).front();
  const double u_ref = std::exp(-0.5);
  const double u_gap = std::abs(u.mean - u_ref);
  rep.check(u_gap <= 3.0 * u.std_error + 0.02, "tau(U_1) = " + fix(u.mean) + " vs " + fix(u_ref));
  rep.note("tau(U_1) = " + fix(u.mean) + " +- " + sci(u.std_error) + ", limit " + fix(u_ref));
  cfg.seed = 2;
  const auto m = jacobi_matrix_moments(cfg, 0.6, 0.6, 1).front();
  const double m_ref = 0.747151;
  const double m_gap = std::abs(m.mean - m_ref);
  rep.check(m_gap <= 3.0 * m.std_error + 0.02, "Jacobi m1 = " + fix(m.mean) + " vs " + fix(m_ref));
  rep.note("Jacobi m1 = " + fix(m.mean) + " +- " + sci(m.std_error) + ", limit " + fix(m_ref));
}

// ---- 13
void positivity(Report& rep, int) {
  const int k = 10, order = 2 * k + 2;
  double worst = std::numeric_limits<double>::infinity();
  auto hankel = [&](const std::vector<double>& m, const std::string& tag) {
    const double e = hausdorff_min_eigenvalue(m, k);
    worst = std::min(worst, e);
    rep.check(e >= -1e-8, tag + " min eigenvalue " + sci(e));
  };
  for (double alpha : {0.3, 0.5, 0.7}) {
    const auto traj = integrate(Family::EqualRanks, alpha, delta_one_moments(order), 2.0, 1e-3);
    for (std::size_t i = 0; i < traj.times.size(); i += 100)
      hankel(traj.moments[i], "equal ranks alpha=" + fix(alpha) + " t=" + fix(traj.times[i]));
    hankel(stationary_moments(alpha, order), "stationary alpha=" + fix(alpha));
  }
  for (double alpha : {0.5, 0.6, 0.7, 0.85}) {
    const auto traj = integrate(Family::HalfRank, alpha, delta_one_moments(order), 2.0, 1e-3);
    for (std::size_t i = 0; i < traj.times.size(); i += 100)
      hankel(traj.moments[i], "half rank alpha=" + fix(alpha) + " t=" + fix(traj.times[i]));
    hankel(stationary_half_moments(alpha, order), "stationary half alpha=" + fix(alpha));
  }
  // circle moments of the free unitary Brownian motion: Toeplitz matrices
  double worst_t = std::numeric_limits<double>::infinity();
  for (double s : {0.5, 1.0, 2.0, 4.0}) {
    const auto fm = fubm_moments(s, k);
    Eigen::MatrixXd T(k + 1, k + 1);
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) T(i, j) = fm(std::abs(i - j));
    const double e = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(T, Eigen::EigenvaluesOnly)
                         .eigenvalues()
                         .minCoeff();
    worst_t = std::min(worst_t, e);
    rep.check(e >= -1e-8, "Toeplitz s=" + fix(s) + " min eigenvalue " + sci(e));
  }
  rep.note("min Hankel eigenvalue " + sci(worst) + ", min Toeplitz eigenvalue " + sci(worst_t));
}

struct Entry {
  const char* title;
  void (*fn)(Report&, int);
};

const Entry kEntries[kCriterionCount] = {
    {"moment hierarchy exactness", moment_hierarchy},
    {"characteristic-flow MGF consistency", theorem_consistency},
    {"alpha = 1/2 retrieval", half_retrieval},
    {"phase transition times", phase_transitions},
    {"V-tilde bijection", vmap_bijection},
    {"inverse coefficient agreement", coefficient_agreement},
    {"saddle-point asymptotics", saddle_asymptotics},
    {"static pushforward identity", kunisky_static},
    {"projection identities on explicit matrices", projection_identities},
    {"dynamical identity", dynamic_identity},
    {"initial-data freeness proxy", equa3_freeness},
    {"matrix Monte Carlo limits", matrix_limits},
    {"moment positivity", positivity},
};

}  // namespace

std::string title(int criterion) {
  if (criterion < 1 || criterion > kCriterionCount) return "unknown";
  return kEntries[criterion - 1].title;
}

bool run(int criterion, std::ostream& os, int threads) {
  if (criterion < 1 || criterion > kCriterionCount) {
    os << "FAIL criterion " << criterion << ": no such criterion\n";
    return false;
  }
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    kEntries[criterion - 1].fn(rep, threads);
  } catch (const std::exception& e) {
    rep.check(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  os << (rep.pass() ? "PASS" : "FAIL") << " criterion " << criterion << ": "
     << kEntries[criterion - 1].title << " (" << buf << ")\n"
     << rep.lines() << std::flush;
  return rep.pass();
}

int run_all(std::ostream& os, int threads) {
  int failures = 0;
  for (int c = 1; c <= kCriterionCount; ++c) failures += run(c, os, threads) ? 0 : 1;
  os << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
     << '\n';
  return failures;
}

}  // namespace fj::acceptance
