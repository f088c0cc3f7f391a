#ifndef FREEJACOBI_MATRIX_MC_HPP
#define FREEJACOBI_MATRIX_MC_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace fj {

using CMatrix = Eigen::MatrixXcd;
using Engine = std::mt19937_64;

// Generator for one replica; the stream depends only on (seed, replica).
Engine replica_engine(std::uint64_t seed, std::uint64_t replica);

// Complex Gaussian entries with E|g|^2 = 1.
CMatrix ginibre(int rows, int cols, Engine& rng);
// GUE normalized so that E|H_ij|^2 = 1/N.
CMatrix gue(int n, Engine& rng);

CMatrix haar_unitary(int n, Engine& rng);
CMatrix haar_unitary(int n, std::uint64_t seed);

CMatrix corner_projection(int n, int rank);
// Projector onto the span of `rank` Gaussian vectors: a Haar-rotated corner.
CMatrix random_projection(int n, int rank, Engine& rng);

double normalized_trace(const CMatrix& m);
// Largest entry of |X^* X - I|.
double isometry_defect(const CMatrix& x);

// X <- exp(i sqrt(dt) H) X with a fresh GUE H, exponential to fourth order.
// X may be N x k; increments act on the left.
void brownian_step(CMatrix& x, double dt, Engine& rng);
// One Newton-Schulz sweep X <- X (3I - X^*X)/2.
void reorthonormalize(CMatrix& x);
// Runs the left-increment walk from x to time t_end.
void evolve(CMatrix& x, double t_end, double dt, Engine& rng);

CMatrix unitary_bm(int n, double t_end, double dt, std::uint64_t seed);

struct EnsembleConfig {
  int N = 200;
  double dt = 0.005;
  double t_end = 1.0;
  int replicas = 100;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: FREEJACOBI_THREADS or 1
  void validate() const;
};

struct Estimate {
  int j = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

// 0 means: read FREEJACOBI_THREADS, default 1.
int resolve_threads(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

// Replica samples to mean and standard error per column.
std::vector<Estimate> summarize(const std::vector<std::vector<double>>& samples);

// Re tau_N(U_t^k), k = 1..k_max.
std::vector<Estimate> unitary_bm_moments(const EnsembleConfig& cfg, int k_max);

enum class Coupling {
  Auto,         // Q = P when the ranks agree, otherwise Haar-rotated Q
  Corner,       // Q a corner projector of its own rank
  HaarRotated,  // Q independently Haar-rotated
};

// tau_N[(P U Q U* P)^j] / tau_N(P), j = 1..j_max; P a corner projector of
// rank floor(beta N), Q of rank floor(alpha N).
std::vector<Estimate> jacobi_matrix_moments(const EnsembleConfig& cfg, double beta, double alpha,
                                            int j_max, Coupling coupling = Coupling::Auto);

}  // namespace fj

#endif
