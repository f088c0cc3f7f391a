#include "freejacobi/jacobi_moments.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "freejacobi/csv.hpp"
#include "freejacobi/errors.hpp"
#include "freejacobi/series.hpp"

namespace fj {

std::string to_string(Family f) {
  return f == Family::EqualRanks ? "equal-ranks" : "half-rank";
}

namespace {

void require_mass(std::span<const double> m) {
  if (m.empty() || std::abs(m[0] - 1.0) > 1e-12)
    throw DomainError("moment vector must start with m_0 = 1");
}

// s_n = sum_{k=0}^n m_k m_{n-k}
std::vector<double> self_convolution(std::span<const double> m) {
  std::vector<double> s(m.size(), 0.0);
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) s[n] += m[k] * m[n - k];
  return s;
}

}  // namespace

MomentVector equal_rank_rhs(double alpha, std::span<const double> m) {
  require_mass(m);
  const auto s = self_convolution(m);
  MomentVector d(m.size(), 0.0);
  for (std::size_t n = 1; n < m.size(); ++n)
    d[n] = -static_cast<double>(n) * ((1.0 - 2.0 * alpha) * m[n] + alpha * (s[n] - s[n - 1]));
  return d;
}

MomentVector half_rank_rhs(double alpha, std::span<const double> m) {
  require_mass(m);
  const auto s = self_convolution(m);
  MomentVector d(m.size(), 0.0);
  for (std::size_t n = 1; n < m.size(); ++n)
    d[n] = 0.5 * static_cast<double>(n) * (-(1.0 - 2.0 * alpha) * m[n - 1] - s[n] + s[n - 1]);
  return d;
}

MomentVector hierarchy_rhs(Family family, double alpha, std::span<const double> m) {
  return family == Family::EqualRanks ? equal_rank_rhs(alpha, m) : half_rank_rhs(alpha, m);
}

int MomentTrajectory::find_time(double t) const {
  auto it = std::lower_bound(times.begin(), times.end(), t - 1e-9 * std::max(1.0, std::abs(t)));
  if (it == times.end() || std::abs(*it - t) > 1e-9 * std::max(1.0, std::abs(t))) return -1;
  return static_cast<int>(it - times.begin());
}

const MomentVector& MomentTrajectory::at(double t) const {
  const int i = find_time(t);
  if (i < 0) {
    std::ostringstream os;
    os << "time " << t << " is not on the trajectory grid";
    throw DomainError(os.str());
  }
  return moments[i];
}

namespace {

void check_moments(const MomentVector& m, double t) {
  constexpr double tol = 1e-8;
  for (std::size_t n = 0; n < m.size(); ++n) {
    const bool range_ok = m[n] >= -tol && m[n] <= 1.0 + tol && std::isfinite(m[n]);
    const bool mono_ok = n == 0 || m[n] <= m[n - 1] + tol;
    if (!range_ok || !mono_ok) {
      std::ostringstream os;
      os << "moment invariant violated at n = " << n << ", t = " << t << " (m_n = " << m[n]
         << ")";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

MomentTrajectory integrate(Family family, double alpha, MomentVector m0, double t_end,
                           double dt) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("integrate: alpha must lie in (0,1)");
  if (!(dt > 0.0)) throw DomainError("integrate: dt must be > 0");
  if (!(t_end >= 0.0)) throw DomainError("integrate: t_end must be >= 0");
  require_mass(m0);
  check_moments(m0, 0.0);

  MomentTrajectory traj;
  traj.alpha = alpha;
  traj.family = family;
  const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  traj.times.reserve(steps + 1);
  traj.moments.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.moments.push_back(m0);

  const std::size_t len = m0.size();
  MomentVector m = std::move(m0), tmp(len);
  auto f = [&](const MomentVector& x) { return hierarchy_rhs(family, alpha, x); };
  for (long i = 1; i <= steps; ++i) {
    const double t0 = traj.times.back();
    const double t1 = (i == steps) ? t_end : static_cast<double>(i) * dt;
    const double h = t1 - t0;
    const auto k1 = f(m);
    for (std::size_t n = 0; n < len; ++n) tmp[n] = m[n] + 0.5 * h * k1[n];
    const auto k2 = f(tmp);
    for (std::size_t n = 0; n < len; ++n) tmp[n] = m[n] + 0.5 * h * k2[n];
    const auto k3 = f(tmp);
    for (std::size_t n = 0; n < len; ++n) tmp[n] = m[n] + h * k3[n];
    const auto k4 = f(tmp);
    for (std::size_t n = 0; n < len; ++n)
      m[n] += h / 6.0 * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
    check_moments(m, t1);
    traj.times.push_back(t1);
    traj.moments.push_back(m);
  }
  return traj;
}

MomentVector delta_one_moments(int n_max) { return MomentVector(n_max + 1, 1.0); }

MomentVector stationary_moments(double alpha, int n_max) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("stationary_moments: alpha must lie in (0,1)");
  const std::size_t n = static_cast<std::size_t>(n_max);
  const double a = (1.0 - 2.0 * alpha) / (2.0 * alpha);
  // A^2 z + (A+1)^2 (1-z) = (A+1)^2 (1 + q z), q = (A^2 - (A+1)^2)/(A+1)^2
  const double ap1 = a + 1.0;
  std::vector<cplx> q(n + 1, cplx(0.0));
  if (n >= 1) q[1] = (a * a - ap1 * ap1) / (ap1 * ap1);
  const Series root = ap1 * sqrt1p(Series(q));
  std::vector<cplx> num(root.coeffs().begin(), root.coeffs().end());
  num[0] -= a;
  // divide by (1 - z): partial sums
  MomentVector m(n + 1);
  double acc = 0.0;
  for (std::size_t k = 0; k <= n; ++k) m[k] = (acc += num[k].real());
  return m;
}

MomentVector stationary_half_moments(double alpha, int n_max) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("stationary_half_moments: alpha must lie in (0,1)");
  const std::size_t n = static_cast<std::size_t>(n_max);
  const double c = 1.0 - 2.0 * alpha;
  // M = [-c w + 2 sqrt(1 - w + c^2 w^2 / 4)] / (2 (1 - w))
  std::vector<cplx> q(n + 1, cplx(0.0));
  if (n >= 1) q[1] = -1.0;
  if (n >= 2) q[2] = c * c / 4.0;
  const Series root = sqrt1p(Series(q));
  std::vector<cplx> num(n + 1);
  for (std::size_t k = 0; k <= n; ++k) num[k] = root[k];
  if (n >= 1) num[1] -= c / 2.0;
  MomentVector m(n + 1);
  double acc = 0.0;
  for (std::size_t k = 0; k <= n; ++k) m[k] = (acc += num[k].real());
  return m;
}

cplx cauchy_from_moments(std::span<const double> m, cplx z) {
  const cplx w = 1.0 / z;
  cplx acc = 0.0;
  for (std::size_t k = m.size(); k-- > 0;) acc = acc * w + m[k];
  return acc * w;
}

namespace {

cplx flux(Family family, double alpha, cplx g, cplx z) {
  if (family == Family::EqualRanks)
    return (1.0 - 2.0 * alpha) * z * g + alpha * z * (z - 1.0) * g * g;
  return 0.5 * ((1.0 - 2.0 * alpha) * g + z * (z - 1.0) * g * g);
}

}  // namespace

double pde_residual(Family family, const MomentTrajectory& traj, cplx z, double t, double h) {
  if (!(h > 0.0)) throw DomainError("pde_residual: h must be > 0");
  const int im = traj.find_time(t - h), i0 = traj.find_time(t), ip = traj.find_time(t + h);
  if (im < 0 || i0 < 0 || ip < 0) {
    std::ostringstream os;
    os << "pde_residual: grid too coarse for central differencing at t = " << t
       << " with h = " << h;
    throw DomainError(os.str());
  }
  auto G = [&](int i, cplx x) { return cauchy_from_moments(traj.moments[i], x); };
  const cplx dt_g = (G(ip, z) - G(im, z)) / (2.0 * h);
  const cplx dz_f = (flux(family, traj.alpha, G(i0, z + h), z + h) -
                     flux(family, traj.alpha, G(i0, z - h), z - h)) /
                    (2.0 * h);
  return std::abs(dt_g - dz_f);
}

double hausdorff_min_eigenvalue(std::span<const double> m, int k) {
  if (static_cast<int>(m.size()) < 2 * k + 3)
    throw DomainError("hausdorff_min_eigenvalue: need m_0..m_{2k+2}");
  double lo = std::numeric_limits<double>::infinity();
  for (int size = 1; size <= k + 1; ++size) {
    Eigen::MatrixXd h0(size, size), h1(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        h0(i, j) = m[i + j];
        h1(i, j) = m[i + j + 1] - m[i + j + 2];
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e0(h0, Eigen::EigenvaluesOnly),
        e1(h1, Eigen::EigenvaluesOnly);
    lo = std::min({lo, e0.eigenvalues().minCoeff(), e1.eigenvalues().minCoeff()});
  }
  return lo;
}

void write_csv(std::ostream& os, const MomentTrajectory& traj) {
  std::vector<std::string> row{"t"};
  for (int n = 0; n <= traj.order(); ++n) row.push_back("m_" + std::to_string(n));
  csv::write_row(os, row);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    row.assign(1, csv::num(traj.times[i]));
    for (double v : traj.moments[i]) row.push_back(csv::num(v));
    csv::write_row(os, row);
  }
}

}  // namespace fj
