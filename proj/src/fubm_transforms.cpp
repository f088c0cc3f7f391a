#include "freejacobi/fubm_transforms.hpp"

#include <cmath>
#include <sstream>

#include "freejacobi/errors.hpp"

namespace fj {

cplx xi(double t, cplx u) {
  if (u == cplx(-1.0)) throw DomainError("xi: pole at u = -1");
  return (u - 1.0) / (u + 1.0) * std::exp(t * u);
}

cplx xi_derivative(double t, cplx u) {
  if (u == cplx(-1.0)) throw DomainError("xi: pole at u = -1");
  return (2.0 / ((u + 1.0) * (u + 1.0)) + t * (u - 1.0) / (u + 1.0)) * std::exp(t * u);
}

Series eta_inverse_series(double s, std::size_t order) {
  // v/(1+v) = v - v^2 + v^3 - ...
  std::vector<cplx> h(order + 1, cplx(0.0));
  for (std::size_t k = 1; k <= order; ++k) h[k] = (k % 2 == 1) ? 1.0 : -1.0;
  return std::exp(s / 2.0) * (Series(std::move(h)) * Series::exponential(s, order));
}

Series eta_series(double s, std::size_t order) {
  if (s < 0.0) throw DomainError("eta_series: time must be >= 0");
  return invert_composition(eta_inverse_series(s, order));
}

FubmMoments fubm_moments(double s, int n_max) {
  if (n_max < 1) throw DomainError("fubm_moments: n_max must be >= 1");
  const Series eta = eta_series(s, static_cast<std::size_t>(n_max));
  FubmMoments out;
  out.time = s;
  out.moments.resize(n_max);
  for (int n = 1; n <= n_max; ++n) out.moments[n - 1] = eta[n].real();
  return out;
}

Herglotz::Herglotz(double t, std::size_t order) : t_(t), eta_(eta_series(2.0 * t, order)) {}

cplx Herglotz::operator()(cplx z) const {
  const double r = std::abs(z);
  if (r >= 1.0) throw DomainError("herglotz: need |z| < 1");
  if (r <= 0.5) return 1.0 + 2.0 * eta_.evaluate(z);

  // Newton on xi(H) = z, continued along the ray from the series value at |z| = 0.5.
  const int legs = 8;
  const cplx z0 = 0.5 * z / r;
  cplx h = 1.0 + 2.0 * eta_.evaluate(z0);
  double residual = 0.0;
  for (int leg = 1; leg <= legs; ++leg) {
    const cplx target = z0 + (z - z0) * (static_cast<double>(leg) / legs);
    for (int it = 0; it < 60; ++it) {
      const cplx f = xi(t_, h) - target;
      residual = std::abs(f);
      if (residual < 1e-15) break;
      h -= f / xi_derivative(t_, h);
    }
  }
  residual = std::abs(xi(t_, h) - z);
  if (!(residual < 1e-10)) {
    std::ostringstream os;
    os << "herglotz: Newton did not converge at z = " << z << ", residual " << residual;
    throw ConvergenceError(os.str());
  }
  return h;
}

cplx herglotz(double t, cplx z) { return Herglotz(t)(z); }

cplx psi_map(cplx z) {
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw DomainError("psi_map: z on the cut [1, inf)");
  const cplx s = std::sqrt(1.0 - z);
  return (1.0 - s) / (1.0 + s);
}

cplx psi_inverse(cplx w) {
  if (!(std::abs(w) < 1.0)) throw DomainError("psi_inverse: need |w| < 1");
  return 4.0 * w / ((1.0 + w) * (1.0 + w));
}

}  // namespace fj
