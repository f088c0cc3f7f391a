#include "freejacobi/wachter_kunisky.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "freejacobi/errors.hpp"
#include "freejacobi/matrix_mc.hpp"

namespace fj {

std::string to_string(MeasureKind k) { return k == MeasureKind::Nu ? "nu" : "mu_inf"; }

double MeasureSpec::density(double x) const {
  if (!(x > x_minus && x < x_plus)) return 0.0;
  return density_scale * std::sqrt((x_plus - x) * (x - x_minus)) / (x * (1.0 - x));
}

double MeasureSpec::atom_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

namespace {

template <class T>
T integrate_impl(const MeasureSpec& m, const std::function<T(double)>& g) {
  const double width = m.x_plus - m.x_minus;
  if (!(width > 0.0)) return T(0.0);
  auto rule = [&](int n) {
    T acc = T(0.0);
    const double h = std::numbers::pi / n;
    for (int k = 0; k < n; ++k) {
      const double th = (k + 0.5) * h;
      const double c = std::cos(0.5 * th), s = std::sin(0.5 * th);
      const double x = m.x_minus + width * c * c;
      const double one_minus_x = (1.0 - m.x_plus) + width * s * s;
      // sqrt((x_+ - x)(x - x_-)) dx/dtheta = width^2 s^2 c^2
      acc += g(x) * (width * width * s * s * c * c / (x * one_minus_x));
    }
    return acc * (h * m.density_scale);
  };
  int n = 1024;
  T prev = rule(n);
  while (n < (1 << 22)) {
    n *= 2;
    const T cur = rule(n);
    if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceError("integrate_ac: quadrature did not converge");
}

}  // namespace

double integrate_ac(const MeasureSpec& m, const std::function<double(double)>& g) {
  return integrate_impl<double>(m, g);
}

cplx integrate_ac(const MeasureSpec& m, const std::function<cplx(double)>& g) {
  return integrate_impl<cplx>(m, g);
}

MeasureSpec make_measure(MeasureKind kind, double beta, double alpha) {
  if (!(beta > 0.0 && beta < 1.0 && alpha > 0.0 && alpha < 1.0))
    throw DomainError("make_measure: beta and alpha must lie in (0,1)");
  MeasureSpec m;
  m.kind = kind;
  m.beta = beta;
  m.alpha = alpha;
  const double r1 = std::sqrt(alpha * (1.0 - beta)), r2 = std::sqrt(beta * (1.0 - alpha));
  m.x_minus = (r1 - r2) * (r1 - r2);
  m.x_plus = (r1 + r2) * (r1 + r2);
  double w0, w1;
  if (kind == MeasureKind::Nu) {
    w0 = 1.0 - std::min(beta, alpha);
    w1 = std::max(0.0, alpha + beta - 1.0);
    m.density_scale = 1.0 / (2.0 * std::numbers::pi);
  } else {
    w0 = std::max(0.0, 1.0 - alpha / beta);
    w1 = std::max(0.0, (alpha + beta - 1.0) / beta);
    m.density_scale = 1.0 / (2.0 * std::numbers::pi * beta);
  }
  if (w0 > 0.0) m.atoms.push_back({0.0, w0});
  if (w1 > 0.0) m.atoms.push_back({1.0, w1});
  m.mass_ac = integrate_ac(m, std::function<double(double)>([](double) { return 1.0; }));
  if (std::abs(m.mass_ac + m.atom_mass() - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "make_measure: total mass " << m.mass_ac + m.atom_mass() << " for " << to_string(kind)
       << "(" << beta << ", " << alpha << ")";
    throw ValidationError(os.str());
  }
  return m;
}

double moment(const MeasureSpec& m, int j) {
  if (j < 0) throw DomainError("moment: j must be >= 0");
  double s = 0.0;
  for (const auto& a : m.atoms) s += a.weight * std::pow(a.location, j);
  return s + integrate_ac(m, std::function<double(double)>([j](double x) { return std::pow(x, j); }));
}

cplx cauchy_transform_ac(const MeasureSpec& m, cplx z) {
  return integrate_ac(m, std::function<cplx(double)>([z](double x) { return 1.0 / (z - x); }));
}

std::vector<KunBisRow> kunisky_table(double alpha, int j_max) {
  if (!(alpha >= 0.5 && alpha < 1.0)) throw DomainError("kunisky_check: alpha must lie in [1/2,1)");
  const MeasureSpec half = make_measure(MeasureKind::MuInf, 0.5, alpha);
  const MeasureSpec equal = make_measure(MeasureKind::MuInf, alpha, alpha);
  std::vector<KunBisRow> rows;
  for (int j = 0; j <= j_max; ++j) {
    const double lhs =
        integrate_ac(half, std::function<double(double)>([j](double x) {
          return std::pow(2.0 * x - 1.0, 2 * j);
        })) /
        (2.0 * (1.0 - alpha));
    const double rhs =
        integrate_ac(equal, std::function<double(double)>([j](double x) { return std::pow(x, j); })) *
        alpha / (1.0 - alpha);
    rows.push_back({j, lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)});
  }
  return rows;
}

double kunisky_check(double alpha, int j_max) {
  double worst = 0.0;
  for (const auto& r : kunisky_table(alpha, j_max)) worst = std::max(worst, r.rel_error);
  return worst;
}

double demham_matrix_check(int N, int rank1, int rank2, std::uint64_t seed, int j_max) {
  if (rank1 != rank2) throw DomainError("demham_matrix_check: ranks must agree");
  if (rank1 < 1 || rank1 > N) throw DomainError("demham_matrix_check: rank out of range");
  Engine rng = replica_engine(seed, 0);
  const CMatrix q1 = random_projection(N, rank1, rng), q2 = random_projection(N, rank2, rng);
  const double alpha = static_cast<double>(rank1) / N;
  const CMatrix s = q1 + q2 - CMatrix::Identity(N, N);
  const CMatrix s2 = s * s, k = q1 * q2 * q1;
  CMatrix lhs_pow = CMatrix::Identity(N, N), rhs_pow = q1;
  double worst = 0.0;
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) {
      lhs_pow = lhs_pow * s2;
      rhs_pow = (j == 1) ? k : CMatrix(rhs_pow * k);
    }
    const double lhs = normalized_trace(lhs_pow);
    const double rhs = 2.0 * normalized_trace(rhs_pow) - (2.0 * alpha - 1.0);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double pqp_binomial_check(int N, int rank_q, std::uint64_t seed, int j_max) {
  if (N % 2 != 0) throw DomainError("pqp_binomial_check: N must be even");
  if (rank_q < 0 || rank_q > N) throw DomainError("pqp_binomial_check: rank out of range");
  Engine rng = replica_engine(seed, 0);
  const CMatrix p = random_projection(N, N / 2, rng), q = random_projection(N, rank_q, rng);
  const CMatrix id = CMatrix::Identity(N, N);
  const CMatrix r = 2.0 * p - id, s = 2.0 * q - id, rs = r * s, pqp = p * q * p;
  std::vector<double> rs_traces(j_max + 1, 1.0);
  CMatrix pw = id;
  for (int k = 1; k <= j_max; ++k) {
    pw = pw * rs;
    rs_traces[k] = normalized_trace(pw);
  }
  auto binom = [](int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  const double ts = normalized_trace(s);
  double worst = 0.0;
  CMatrix lhs_pow = id;
  for (int j = 1; j <= j_max; ++j) {
    lhs_pow = lhs_pow * pqp;
    double rhs = std::ldexp(binom(2 * j, j), -2 * j - 1) + ts / 4.0;
    for (int k = 1; k <= j; ++k) rhs += std::ldexp(binom(2 * j, j - k), -2 * j) * rs_traces[k];
    worst = std::max(worst, std::abs(normalized_trace(lhs_pow) - rhs));
  }
  return worst;
}

}  // namespace fj
