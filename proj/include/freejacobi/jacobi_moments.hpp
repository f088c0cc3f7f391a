#ifndef FREEJACOBI_JACOBI_MOMENTS_HPP
#define FREEJACOBI_JACOBI_MOMENTS_HPP

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fj {

using cplx = std::complex<double>;
using MomentVector = std::vector<double>;

// equal-ranks: the law of P Y_t Q Y_t* P with tau(P) = tau(Q) = alpha,
// compressed to P. half-rank: same with tau(P) = 1/2.
enum class Family { EqualRanks, HalfRank };

std::string to_string(Family f);

// Time derivative of m_0..m_N; truncation is exact because dm_n/dt only
// involves m_0..m_n.
MomentVector equal_rank_rhs(double alpha, std::span<const double> m);
MomentVector half_rank_rhs(double alpha, std::span<const double> m);
MomentVector hierarchy_rhs(Family family, double alpha, std::span<const double> m);

struct MomentTrajectory {
  double alpha = 0.5;
  Family family = Family::EqualRanks;
  std::vector<double> times;
  std::vector<MomentVector> moments;  // moments[i][n] = m_n at times[i]

  int order() const { return moments.empty() ? -1 : static_cast<int>(moments.front().size()) - 1; }
  // Index of the grid time equal to t (within 1e-9 relative), or -1.
  int find_time(double t) const;
  const MomentVector& at(double t) const;
};

// Fourth-order Runge-Kutta integration on a uniform grid. The last step is
// shortened so that t_end is hit exactly. Throws ValidationError when a
// moment leaves [0,1] or moments fail to decrease in n (tolerance 1e-8).
MomentTrajectory integrate(Family family, double alpha, MomentVector m0, double t_end,
                           double dt);

// Moments of the Dirac mass at 1: all ones.
MomentVector delta_one_moments(int n_max);

// Taylor coefficients of M_inf(z) = (-A + sqrt(A^2 z + (A+1)^2 (1-z))) / (1-z).
MomentVector stationary_moments(double alpha, int n_max);
// Stationary law of the half-rank family, from (1-w)M^2 + (1-2a)wM - 1 = 0.
MomentVector stationary_half_moments(double alpha, int n_max);

// G(z) = sum_n m_n / z^{n+1}.
cplx cauchy_from_moments(std::span<const double> m, cplx z);

// |d_t G - d_z F(G)| at (z, t) by central differences with step h; F is the
// flux of the family's PDE. t-h, t and t+h must be grid times.
double pde_residual(Family family, const MomentTrajectory& traj, cplx z, double t, double h);

// Smallest eigenvalue over the Hankel matrices (m_{i+j}) and
// (m_{i+j+1} - m_{i+j+2}) up to size k+1.
double hausdorff_min_eigenvalue(std::span<const double> m, int k);

void write_csv(std::ostream& os, const MomentTrajectory& traj);

}  // namespace fj

#endif
