#ifndef FREEJACOBI_CHARACTERISTIC_FLOW_HPP
#define FREEJACOBI_CHARACTERISTIC_FLOW_HPP

#include <complex>
#include <vector>

namespace fj {

using cplx = std::complex<double>;

// A(alpha) = (1-2alpha)/(2alpha).
double coefficient_A(double alpha);
// B(1-z0, alpha) = (1-alpha)/(alpha(1-z0)) + A^2.
cplx coefficient_B(double alpha, cplx z0);
// C(z0, alpha) = (alpha-1)/(1-z0).
cplx coefficient_C(double alpha, cplx z0);

// V(u) = ((u-A-1)(u-A) / ((u+A+1)(u+A))) e^{2 alpha u t}.
cplx v_map(double alpha, double t, cplx u);
cplx v_map_derivative(double alpha, double t, cplx u);

// z = 1 + 2A(1-V)/D - (u^2-A^2)((1-V)/D)^2, D = (u-A) + (u+A)V.
cplx inversion_rhs(double alpha, double t, cplx u);
cplx inversion_rhs_derivative(double alpha, double t, cplx u);

struct FlowOptions {
  double r_max = 0.1;   // starting radius for the empirical radius scan
  int steps = 20;       // initial continuation steps along 0 -> z
  double tol = 1e-12;   // accepted Newton residual
  int max_newton = 40;
};

// Everything the flow produces at one target point z.
struct FlowPoint {
  double alpha = 0.5;
  double t = 0.0;
  cplx z;        // target argument
  cplx u;        // characteristic variable sqrt(B(1-z0, alpha)), equals J(z)
  double A = 0.0;
  cplx B;        // u^2
  cplx C;        // (alpha-1)/(1-z0) of the characteristic through z
  cplx J;
  cplx psi_t;    // V(J(z))
  cplx M_sqrt;
  cplx M_homographic;
  int newton_iterations = 0;
  double residual = 0.0;
};

// Newton continuation of the inversion relation from (0, 1/(2alpha)) to z.
// The square root in the closed form is followed along the same path.
FlowPoint trace_flow(double alpha, double t, cplx z, const FlowOptions& opt = {});

cplx local_inverse_J(double alpha, double t, cplx z, const FlowOptions& opt = {});

struct MgfPair {
  cplx sqrt_form;
  cplx homographic_form;
};
MgfPair mgf_theorem1(double alpha, double t, cplx z, const FlowOptions& opt = {});

// Taylor coefficients m_0..m_n of M_t at 0 by the trapezoidal rule on |z| = r.
std::vector<double> mgf_coefficients(double alpha, double t, int n, double r = 0.02,
                                     int points = 64, const FlowOptions& opt = {});

// Largest radius (scanned along 8 rays) on which continuation still succeeds.
// A lower estimate; nothing says the true neighborhood is not larger.
double empirical_radius(double alpha, double t, const FlowOptions& opt = {});

// One point on a characteristic curve started at (z0, 1/(1-z0)).
struct CharacteristicSample {
  double t;
  cplx z;  // z_t
  cplx f;  // M_t(z_t)
  cplx y;  // integral of z_s over [0, t]
};

// RK4 integration of z' = (1-2a)z + 2a z(1-z)f, f' = a z f^2, y' = z.
std::vector<CharacteristicSample> integrate_characteristic(double alpha, cplx z0, double t_end,
                                                           double dt);

// f' from the characteristic system minus the completed-square Riccati form.
cplx riccati_residual(double alpha, cplx z0, const CharacteristicSample& s);

}  // namespace fj

#endif
