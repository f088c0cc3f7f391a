#include "freejacobi/matrix_mc.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "freejacobi/errors.hpp"

namespace fj {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Engine replica_engine(std::uint64_t seed, std::uint64_t replica) {
  const std::uint64_t a = splitmix64(seed), b = splitmix64(a ^ splitmix64(replica + 1));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Engine(seq);
}

CMatrix ginibre(int rows, int cols, Engine& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = {g(rng), g(rng)};
  return m;
}

CMatrix gue(int n, Engine& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double off = 1.0 / std::sqrt(2.0 * n), diag = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix h(n, n);
  for (int j = 0; j < n; ++j) {
    h(j, j) = diag * g(rng);
    for (int i = j + 1; i < n; ++i) {
      h(i, j) = {off * g(rng), off * g(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

CMatrix haar_unitary(int n, Engine& rng) {
  if (n < 1) throw DomainError("haar_unitary: n must be >= 1");
  Eigen::HouseholderQR<CMatrix> qr(ginibre(n, n, rng));
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : std::complex<double>(1.0);
  }
  return q;
}

CMatrix haar_unitary(int n, std::uint64_t seed) {
  Engine rng = replica_engine(seed, 0);
  return haar_unitary(n, rng);
}

CMatrix corner_projection(int n, int rank) {
  if (rank < 0 || rank > n) throw DomainError("corner_projection: rank out of range");
  CMatrix p = CMatrix::Zero(n, n);
  for (int i = 0; i < rank; ++i) p(i, i) = 1.0;
  return p;
}

CMatrix random_projection(int n, int rank, Engine& rng) {
  if (rank < 0 || rank > n) throw DomainError("random_projection: rank out of range");
  if (rank == 0) return CMatrix::Zero(n, n);
  Eigen::HouseholderQR<CMatrix> qr(ginibre(n, rank, rng));
  const CMatrix q = qr.householderQ() * CMatrix::Identity(n, rank);
  return q * q.adjoint();
}

double normalized_trace(const CMatrix& m) { return m.trace().real() / m.rows(); }

double isometry_defect(const CMatrix& x) {
  return (x.adjoint() * x - CMatrix::Identity(x.cols(), x.cols())).cwiseAbs().maxCoeff();
}

void brownian_step(CMatrix& x, double dt, Engine& rng) {
  const int n = static_cast<int>(x.rows());
  const CMatrix a = std::complex<double>(0.0, std::sqrt(dt)) * gue(n, rng);
  CMatrix term = x;
  for (int k = 1; k <= 4; ++k) {
    term = (a * term) / static_cast<double>(k);
    x += term;
  }
}

void reorthonormalize(CMatrix& x) {
  const int k = static_cast<int>(x.cols());
  const CMatrix gram = x.adjoint() * x;
  x = x * (3.0 * CMatrix::Identity(k, k) - gram) * 0.5;
}

void evolve(CMatrix& x, double t_end, double dt, Engine& rng) {
  if (!(dt > 0.0)) throw DomainError("evolve: dt must be > 0");
  const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  double t = 0.0;
  for (long i = 1; i <= steps; ++i) {
    const double t1 = (i == steps) ? t_end : static_cast<double>(i) * dt;
    brownian_step(x, t1 - t, rng);
    t = t1;
    if (i % 100 == 0) reorthonormalize(x);
  }
  reorthonormalize(x);
  reorthonormalize(x);
}

CMatrix unitary_bm(int n, double t_end, double dt, std::uint64_t seed) {
  if (n < 1) throw DomainError("unitary_bm: n must be >= 1");
  if (!(t_end >= 0.0)) throw DomainError("unitary_bm: t_end must be >= 0");
  Engine rng = replica_engine(seed, 0);
  CMatrix u = CMatrix::Identity(n, n);
  evolve(u, t_end, dt, rng);
  return u;
}

void EnsembleConfig::validate() const {
  if (N < 2) throw DomainError("ensemble: N must be >= 2");
  if (!(dt > 0.0 && dt <= 0.01)) throw DomainError("ensemble: dt must lie in (0, 0.01]");
  if (!(t_end >= 0.0)) throw DomainError("ensemble: t_end must be >= 0");
  if (replicas < 1) throw DomainError("ensemble: replicas must be >= 1");
  if (threads < 0) throw DomainError("ensemble: threads must be >= 0");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FREEJACOBI_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 1;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(resolve_threads(threads), count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Estimate> summarize(const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) return {};
  const std::size_t cols = samples.front().size();
  const double r = static_cast<double>(samples.size());
  std::vector<Estimate> out(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double mean = 0.0;
    for (const auto& s : samples) mean += s[c];
    mean /= r;
    double var = 0.0;
    for (const auto& s : samples) var += (s[c] - mean) * (s[c] - mean);
    out[c].j = static_cast<int>(c) + 1;
    out[c].mean = mean;
    out[c].std_error = samples.size() > 1 ? std::sqrt(var / (r - 1.0) / r) : 0.0;
  }
  return out;
}

std::vector<Estimate> unitary_bm_moments(const EnsembleConfig& cfg, int k_max) {
  cfg.validate();
  if (k_max < 1) throw DomainError("unitary_bm_moments: k_max must be >= 1");
  std::vector<std::vector<double>> samples(cfg.replicas);
  parallel_for(cfg.replicas, cfg.threads, [&](int r) {
    Engine rng = replica_engine(cfg.seed, static_cast<std::uint64_t>(r));
    CMatrix u = CMatrix::Identity(cfg.N, cfg.N);
    evolve(u, cfg.t_end, cfg.dt, rng);
    std::vector<double> row(k_max);
    CMatrix p = u;
    for (int k = 1; k <= k_max; ++k) {
      row[k - 1] = normalized_trace(p);
      if (k < k_max) p = p * u;
    }
    samples[r] = std::move(row);
  });
  return summarize(samples);
}

std::vector<Estimate> jacobi_matrix_moments(const EnsembleConfig& cfg, double beta, double alpha,
                                            int j_max, Coupling coupling) {
  cfg.validate();
  const int kp = static_cast<int>(std::floor(beta * cfg.N));
  const int kq = static_cast<int>(std::floor(alpha * cfg.N));
  if (kp < 1 || kq < 1) throw DomainError("jacobi_matrix_moments: projector ranks must be >= 1");
  if (kp > cfg.N || kq > cfg.N) throw DomainError("jacobi_matrix_moments: rank exceeds N");
  if (j_max < 1) throw DomainError("jacobi_matrix_moments: j_max must be >= 1");
  const bool rotated = coupling == Coupling::HaarRotated || (coupling == Coupling::Auto && kp != kq);

  std::vector<std::vector<double>> samples(cfg.replicas);
  parallel_for(cfg.replicas, cfg.threads, [&](int r) {
    Engine rng = replica_engine(cfg.seed, static_cast<std::uint64_t>(r));
    // U Q U* = X X* with X = U V[:, :kq]; V = I for a corner Q.
    CMatrix x;
    if (rotated) {
      Eigen::HouseholderQR<CMatrix> qr(ginibre(cfg.N, kq, rng));
      x = qr.householderQ() * CMatrix::Identity(cfg.N, kq);
    } else {
      x = CMatrix::Identity(cfg.N, kq);
    }
    evolve(x, cfg.t_end, cfg.dt, rng);
    const CMatrix b = x.topRows(kp);
    const CMatrix g = b.adjoint() * b;  // same nonzero spectrum as P U Q U* P
    Eigen::SelfAdjointEigenSolver<CMatrix> es(g, Eigen::EigenvaluesOnly);
    std::vector<double> row(j_max, 0.0);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      const double lam = es.eigenvalues()(i);
      double p = 1.0;
      for (int j = 1; j <= j_max; ++j) row[j - 1] += (p *= lam);
    }
    for (auto& v : row) v /= kp;
    samples[r] = std::move(row);
  });
  return summarize(samples);
}

}  // namespace fj
