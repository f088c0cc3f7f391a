#ifndef FREEJACOBI_FUBM_TRANSFORMS_HPP
#define FREEJACOBI_FUBM_TRANSFORMS_HPP

#include <vector>

#include "freejacobi/series.hpp"

namespace fj {

// Moments tau(Y_s^n), n = 1..N, of the free unitary Brownian motion at
// operator time s.
struct FubmMoments {
  double time = 0.0;
  std::vector<double> moments;  // moments[n-1] = tau(Y_s^n)

  double operator()(int n) const { return n == 0 ? 1.0 : moments.at(n - 1); }
};

// xi(t, u) = (u-1)/(u+1) e^{tu}; the inverse of the Herglotz transform of Y_{2t}.
cplx xi(double t, cplx u);
cplx xi_derivative(double t, cplx u);

// Series of v -> v/(1+v) e^{(s/2)(1+2v)}, the inverse of eta at operator time s.
Series eta_inverse_series(double s, std::size_t order);
// eta_s(z) = sum_{n>=1} tau(Y_s^n) z^n.
Series eta_series(double s, std::size_t order);
FubmMoments fubm_moments(double s, int n_max);

// H_{2t}(z) = 1 + 2 eta_{2t}(z) for |z| < 1. Holds the eta series so repeated
// evaluations at the same t are cheap.
class Herglotz {
 public:
  explicit Herglotz(double t, std::size_t order = 64);
  cplx operator()(cplx z) const;
  double t() const { return t_; }

 private:
  double t_;
  Series eta_;
};

cplx herglotz(double t, cplx z);

// psi(z) = (1 - sqrt(1-z)) / (1 + sqrt(1-z)), principal branch.
cplx psi_map(cplx z);
// psi^{-1}(w) = 4w / (1+w)^2.
cplx psi_inverse(cplx w);

}  // namespace fj

#endif
