#include "freejacobi/dynamic_identity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "freejacobi/errors.hpp"
#include "freejacobi/matrix_mc.hpp"

namespace fj {

namespace timemap {
double half_rank_time(double equal_rank_time) { return 0.5 * equal_rank_time; }
double equal_rank_time(double half_rank_time) { return 2.0 * half_rank_time; }
double u_chain_source_time(double t) { return 2.0 * t; }
}  // namespace timemap

namespace {

constexpr double kEvennessTol = 1e-6;

void check_alpha(double alpha, const char* who) {
  if (!(alpha >= 0.5 && alpha < 1.0)) {
    std::ostringstream os;
    os << who << ": alpha must lie in [1/2, 1), got " << alpha;
    throw DomainError(os.str());
  }
}

void check_off_unit_interval(cplx z, const char* who) {
  // the truncated series converges for |z| > 1; require some margin
  if (std::abs(z) < 1.2) {
    std::ostringstream os;
    os << who << ": |z| = " << std::abs(z) << " too close to the support";
    throw DomainError(os.str());
  }
}

const MomentVector& moments_of(const MomentTrajectory& traj, Family want, double t,
                               const char* who) {
  if (traj.family != want) {
    std::ostringstream os;
    os << who << ": expected a " << to_string(want) << " trajectory";
    throw DomainError(os.str());
  }
  return traj.at(t);
}

double binom(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// (2a-1) z g + (1-a) z (z-1) g^2
cplx same_flux(double alpha, cplx g, cplx z) {
  return (2.0 * alpha - 1.0) * z * g + (1.0 - alpha) * z * (z - 1.0) * g * g;
}

}  // namespace

AtomBookkeeping atom_bookkeeping(Family family, double alpha) {
  check_alpha(alpha, "atom_bookkeeping");
  if (family == Family::HalfRank) return {2.0 * alpha - 1.0, 2.0 * (1.0 - alpha)};
  return {(2.0 * alpha - 1.0) / alpha, (1.0 - alpha) / alpha};
}

cplx tilde_half(double alpha, std::span<const double> m, cplx z) {
  check_alpha(alpha, "tilde_half");
  check_off_unit_interval(z, "tilde_half");
  const cplx g = cauchy_from_moments(m, z);
  return (g - (2.0 * alpha - 1.0) / (z - 1.0)) / (2.0 * (1.0 - alpha));
}

cplx tilde_half(double alpha, const MomentTrajectory& half, double t, cplx z) {
  return tilde_half(alpha, moments_of(half, Family::HalfRank, t, "tilde_half"), z);
}

cplx tilde_equal(double alpha, std::span<const double> m, cplx z) {
  check_alpha(alpha, "tilde_equal");
  check_off_unit_interval(z, "tilde_equal");
  const cplx g = cauchy_from_moments(m, z);
  return alpha / (1.0 - alpha) * (g - (2.0 * alpha - 1.0) / (alpha * (z - 1.0)));
}

cplx tilde_equal(double alpha, const MomentTrajectory& equal, double t, cplx z) {
  return tilde_equal(alpha, moments_of(equal, Family::EqualRanks, t, "tilde_equal"), z);
}

cplx u_from_tilde(const Transform& tilde, cplx z) { return 0.5 * tilde(0.5 * (z + 1.0)); }

cplx v_from_u(const Transform& u, cplx y) {
  const cplx r = std::sqrt(y);
  return u(r) / r;
}

std::vector<double> centered_normalized_moments(double alpha, std::span<const double> m) {
  check_alpha(alpha, "centered_normalized_moments");
  const AtomBookkeeping ab = atom_bookkeeping(Family::HalfRank, alpha);
  const int K = static_cast<int>(m.size()) - 1;
  if (K > 24) throw DomainError("centered_normalized_moments: order above 24 loses all digits");
  std::vector<double> out(K + 1);
  for (int k = 0; k <= K; ++k) {
    // int (2x-1)^k dmu = sum_i C(k,i) 2^i (-1)^{k-i} m_i
    double s = 0.0;
    for (int i = 0; i <= k; ++i)
      s += binom(k, i) * std::ldexp(1.0, i) * (((k - i) % 2) ? -1.0 : 1.0) * m[i];
    out[k] = (s - ab.atom_at_one) / ab.remaining_mass;
  }
  return out;
}

double evenness_proxy(double alpha, std::span<const double> m, int J) {
  if (J < 1) throw DomainError("evenness_proxy: J must be >= 1");
  if (static_cast<int>(m.size()) <= J) throw DomainError("evenness_proxy: need m_0..m_J");
  const auto c = centered_normalized_moments(alpha, m.first(J + 1));
  double worst = 0.0;
  for (int k = 1; k <= J; k += 2) worst = std::max(worst, std::abs(c[k]));
  return worst;
}

double evenness_proxy(const MomentTrajectory& half, double t, int J) {
  return evenness_proxy(half.alpha, moments_of(half, Family::HalfRank, t, "evenness_proxy"), J);
}

cplx v_from_moments(double alpha, std::span<const double> m, cplx y) {
  const int J = std::min(9, static_cast<int>(m.size()) - 1);
  const double proxy = evenness_proxy(alpha, m, J);
  if (proxy > kEvennessTol) {
    std::ostringstream os;
    os << "v_from_moments: evenness proxy " << proxy << " exceeds " << kEvennessTol;
    throw ValidationError(os.str());
  }
  // through G~ and u rather than the centered moments, which lose about
  // k log10(4) digits at order k
  const Transform u = [&](cplx z) {
    return u_from_tilde([&](cplx w) { return tilde_half(alpha, m, w); }, z);
  };
  return v_from_u(u, y);
}

double same_pde_residual(Branch which, const MomentTrajectory& traj, double t, cplx z, double h) {
  if (!(h > 0.0)) throw DomainError("same_pde_residual: h must be > 0");
  const double alpha = traj.alpha;
  std::function<cplx(double, cplx)> g;
  if (which == Branch::V) {
    // g(t) = v_{t/2}
    g = [&](double s, cplx x) {
      return v_from_moments(alpha, moments_of(traj, Family::HalfRank, timemap::half_rank_time(s),
                                              "same_pde_residual"),
                            x);
    };
  } else {
    g = [&](double s, cplx x) { return tilde_equal(alpha, traj, s, x); };
  }
  const cplx dt_g = (g(t + h, z) - g(t - h, z)) / (2.0 * h);
  const cplx dz_f =
      (same_flux(alpha, g(t, z + h), z + h) - same_flux(alpha, g(t, z - h), z - h)) / (2.0 * h);
  return std::abs(dt_g - dz_f);
}

double u_chain_residual(const MomentTrajectory& equal, double t, cplx z, double h) {
  if (!(h > 0.0)) throw DomainError("u_chain_residual: h must be > 0");
  const double alpha = equal.alpha;
  auto u = [&](double s, cplx x) {
    return x * tilde_equal(alpha, equal, timemap::u_chain_source_time(s), x * x);
  };
  auto flux = [&](cplx val, cplx x) {
    return (2.0 * alpha - 1.0) * x * val + (1.0 - alpha) * (x * x - 1.0) * val * val;
  };
  const cplx dt_u = (u(t + h, z) - u(t - h, z)) / (2.0 * h);
  const cplx dz_f = (flux(u(t, z + h), z + h) - flux(u(t, z - h), z - h)) / (2.0 * h);
  return std::abs(dt_u - dz_f);
}

std::vector<Equa3Row> equa3_check(int N, double alpha, std::uint64_t seed, int j_max,
                                  int replicas, Equa3Coupling coupling, int threads) {
  if (N < 2 || N % 2 != 0) throw DomainError("equa3_check: N must be even and >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("equa3_check: alpha must lie in (0,1)");
  if (j_max < 1) throw DomainError("equa3_check: j_max must be >= 1");
  if (replicas < 1) throw DomainError("equa3_check: replicas must be >= 1");
  const int rank = static_cast<int>(std::floor(alpha * N));
  // columns: lhs_j, rhs_j, gap_j for j = 1..j_max
  std::vector<std::vector<double>> samples(replicas, std::vector<double>(3 * j_max));
  const CMatrix p = corner_projection(N, N / 2);
  parallel_for(replicas, resolve_threads(threads), [&](int r) {
    Engine rng = replica_engine(seed, static_cast<std::uint64_t>(r));
    const CMatrix q =
        coupling == Equa3Coupling::Free ? random_projection(N, rank, rng) : CMatrix(p);
    const CMatrix q1 = random_projection(N, rank, rng), q2 = random_projection(N, rank, rng);
    const CMatrix id = CMatrix::Identity(N, N);
    const CMatrix a = 2.0 * p * q * p - p, b = q1 + q2 - id;
    const CMatrix a2 = a * a, b2 = b * b;
    CMatrix ap = a2, bp = b2;
    auto& row = samples[r];
    for (int j = 1; j <= j_max; ++j) {
      if (j > 1) {
        ap = ap * a2;
        bp = bp * b2;
      }
      const double lhs = 2.0 * normalized_trace(ap), rhs = normalized_trace(bp);
      row[3 * (j - 1)] = lhs;
      row[3 * (j - 1) + 1] = rhs;
      row[3 * (j - 1) + 2] = lhs - rhs;
    }
  });
  const auto est = summarize(samples);
  std::vector<Equa3Row> out;
  for (int j = 1; j <= j_max; ++j) {
    const auto& l = est[3 * (j - 1)];
    const auto& r = est[3 * (j - 1) + 1];
    const auto& g = est[3 * (j - 1) + 2];
    out.push_back({j, l.mean, r.mean, g.mean, g.std_error});
  }
  return out;
}

}  // namespace fj
