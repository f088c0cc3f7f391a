#ifndef FREEJACOBI_WACHTER_KUNISKY_HPP
#define FREEJACOBI_WACHTER_KUNISKY_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fj {

using cplx = std::complex<double>;

// nu: law of PQP with tau(P) = beta, tau(Q) = alpha in free position.
// mu_inf: the same compressed to P, i.e. (nu - (1-beta) delta_0) / beta.
enum class MeasureKind { Nu, MuInf };
std::string to_string(MeasureKind k);

struct Atom {
  double location;
  double weight;
};

struct MeasureSpec {
  MeasureKind kind = MeasureKind::Nu;
  double beta = 0.5, alpha = 0.5;
  std::vector<Atom> atoms;
  double x_minus = 0.0, x_plus = 1.0;
  // density(x) = density_scale * sqrt((x_+ - x)(x - x_-)) / (x(1-x)) on (x_-, x_+)
  double density_scale = 0.0;
  double mass_ac = 0.0;

  double density(double x) const;
  double atom_mass() const;
};

MeasureSpec make_measure(MeasureKind kind, double beta, double alpha);

// Integral of g against the absolutely continuous part. The substitution
// x = x_- + (x_+ - x_-) cos^2(theta/2) cancels both square-root edges, so a
// midpoint rule in theta converges spectrally; the node count doubles from
// 1024 until successive values agree to 1e-13.
double integrate_ac(const MeasureSpec& m, const std::function<double(double)>& g);
cplx integrate_ac(const MeasureSpec& m, const std::function<cplx(double)>& g);

double moment(const MeasureSpec& m, int j);
// Cauchy transform of the absolutely continuous part alone.
cplx cauchy_transform_ac(const MeasureSpec& m, cplx z);

struct KunBisRow {
  int j;
  double pushforward;  // (1/(2(1-a))) int (2x-1)^{2j} f^{(1/2,a)}
  double equal_rank;   // (a/(1-a)) int x^j f^{(a,a)}
  double rel_error;
};
std::vector<KunBisRow> kunisky_table(double alpha, int j_max);
double kunisky_check(double alpha, int j_max);

// tau[(Q1+Q2-1)^{2j}] against 2 tau[(Q1Q2Q1)^j] - (2a-1) on random projectors
// of equal rank; (Q1Q2Q1)^0 stands for Q1. Returns the max absolute error.
double demham_matrix_check(int N, int rank1, int rank2, std::uint64_t seed, int j_max);

// tau[(PQP)^j] against 2^{-2j-1} C(2j,j) + tau(S)/4 + 2^{-2j} sum_k C(2j,j-k) tau[(RS)^k]
// with R = 2P-1, S = 2Q-1, rank P = N/2; j = 1..j_max. Max absolute error.
double pqp_binomial_check(int N, int rank_q, std::uint64_t seed, int j_max);

}  // namespace fj

#endif
