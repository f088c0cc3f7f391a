#ifndef FREEJACOBI_DYNAMIC_IDENTITY_HPP
#define FREEJACOBI_DYNAMIC_IDENTITY_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "freejacobi/jacobi_moments.hpp"

namespace fj {

using cplx = std::complex<double>;

// Time bookkeeping in one place. v_{t/2} (half-rank family) and G~_t
// (equal ranks) obey the same equation in t.
namespace timemap {
// Half-rank process time paired with equal-ranks time t.
double half_rank_time(double equal_rank_time);
double equal_rank_time(double half_rank_time);
// u_t(z) = z g_{2t}(z^2) reads the equal-ranks trajectory at time 2t.
double u_chain_source_time(double t);
}  // namespace timemap

// Atom at 1 removed before normalizing, and the mass left over.
struct AtomBookkeeping {
  double atom_at_one;
  double remaining_mass;
};
AtomBookkeeping atom_bookkeeping(Family family, double alpha);

// (1/(2(1-a))) [G(z) - (2a-1)/(z-1)] from half-rank moments.
cplx tilde_half(double alpha, std::span<const double> m, cplx z);
cplx tilde_half(double alpha, const MomentTrajectory& half, double t, cplx z);
// (a/(1-a)) [G(z) - (2a-1)/(a(z-1))] from equal-ranks moments.
cplx tilde_equal(double alpha, std::span<const double> m, cplx z);
cplx tilde_equal(double alpha, const MomentTrajectory& equal, double t, cplx z);

using Transform = std::function<cplx(cplx)>;
// u(z) = G~((z+1)/2) / 2.
cplx u_from_tilde(const Transform& tilde, cplx z);
// v(y) = u(sqrt(y)) / sqrt(y).
cplx v_from_u(const Transform& u, cplx y);

// int (2x-1)^k against the normalized density, k = 0..K, from half-rank
// moments m_0..m_K by binomial expansion. Rounding grows like 4^k, so K <= 24.
std::vector<double> centered_normalized_moments(double alpha, std::span<const double> m);

// max over odd k <= J of |int (2x-1)^k k_t(x) dx|.
double evenness_proxy(double alpha, std::span<const double> m, int J = 9);
double evenness_proxy(const MomentTrajectory& half, double t, int J = 9);

// v(y) = u(sqrt y)/sqrt y with u built from the half-rank moments; needs
// |(sqrt y + 1)/2| >= 1.2. Throws ValidationError when the evenness proxy
// exceeds 1e-6.
cplx v_from_moments(double alpha, std::span<const double> m, cplx y);

enum class Branch { V, Alpha };

// Residual of d_t g - d_z[(2a-1) z g + (1-a) z(z-1) g^2] by central differences.
// Branch::V: g(t) = v_{t/2} from a half-rank trajectory (needs grid times
// (t-h)/2, t/2, (t+h)/2). Branch::Alpha: g(t) = G~_t from equal ranks.
double same_pde_residual(Branch which, const MomentTrajectory& traj, double t, cplx z, double h);

// Residual of d_t u - d_z[(2a-1) z u + (1-a)(z^2-1) u^2] for u_t(z) = z G~_{2t}(z^2).
double u_chain_residual(const MomentTrajectory& equal, double t, cplx z, double h);

enum class Equa3Coupling {
  Free,            // Q, Q1, Q2 independently Haar-rotated
  NonFreeControl,  // Q = P, no rotation
};

struct Equa3Row {
  int j;
  double lhs;  // 2 tau[(2PQP - P)^{2j}]
  double rhs;  // tau[(Q1 + Q2 - 1)^{2j}]
  double gap;
  double std_error;
};

std::vector<Equa3Row> equa3_check(int N, double alpha, std::uint64_t seed, int j_max,
                                  int replicas = 20, Equa3Coupling coupling = Equa3Coupling::Free,
                                  int threads = 0);

}  // namespace fj

#endif
