#ifndef FREEJACOBI_CHI_SADDLE_HPP
#define FREEJACOBI_CHI_SADDLE_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "freejacobi/series.hpp"

namespace fj {

struct AdmissibilityProbe {
  double alpha = 0.0;
  double t = 0.0;
  double S0 = 0.0;  // (alpha/(1-alpha)) e^t
  std::array<cplx, 2> q_roots;  // roots of alpha^2 (1-z)^2 + 4(1-alpha)^2 z
  double q_root_modulus = 0.0;  // largest of the two moduli
};
AdmissibilityProbe admissibility_probe(double alpha, double t = 0.0);

// S(u) = (u+alpha)/(u+1-alpha) e^{(1+2u)t}.
cplx s_transform_deformed(double alpha, double t, cplx u);
// chi(u) = u(u+alpha) / ((u+1)(u+1-alpha)) e^{(1+2u)t}.
cplx chi(double alpha, double t, cplx u);

// phi(w) = 2tw - log[(1+w)(w+1-alpha) / (w(w+alpha))], principal logarithm.
cplx phi_complex(double alpha, double t, cplx w);
// Real part of phi on -alpha < w < 0 with 1-alpha+w > 0, real logarithm.
double phi(double alpha, double t, double w);
cplx phi_second_derivative(double alpha, cplx w);

// (1-alpha)[(1-alpha)(1+alpha t)^2 - 2 alpha t].
double discriminant(double alpha, double t);

enum class SaddleRegime { RealFour, ComplexTwoPairs, ComplexConjugate };
std::string to_string(SaddleRegime r);

struct SaddleReport {
  double alpha = 0.0;
  double t = 0.0;
  double S0 = 0.0;
  double Delta = 0.0;
  cplx Zplus, Zminus;
  // w[0] = w_{+,+}, w[1] = w_{+,-}, w[2] = w_{-,+}, w[3] = w_{-,-};
  // w_{s1,s2} = -1/2 + s1 sqrt(1/4 + Z_{s2}).
  std::array<cplx, 4> w;
  std::array<cplx, 4> phi_at_w;
  std::array<cplx, 4> phi2_at_w;
  cplx U_plus, U_minus;  // sqrt(1 + 4 Z_{+/-})
  SaddleRegime regime = SaddleRegime::ComplexConjugate;
  double decay_plus = 0.0;   // t + Re phi(w_{+,+})
  double decay_minus = 0.0;  // t + Re phi(w_{+,-})
};
SaddleReport critical_points(double alpha, double t);

// Coefficients of the compositional inverse of chi. scaled[n-1] = a_n e^{-nt}
// is the n-th Taylor coefficient of chi^{-1}; a_n itself may overflow and is
// also available as sign and log-magnitude.
struct ChiCoefficients {
  double alpha = 0.0;
  double t = 0.0;
  std::vector<double> scaled;
  double b(int n) const { return scaled.at(n - 1); }
  double a(int n) const;
  double log_abs_a(int n) const;
};
ChiCoefficients coeffs_lagrange(double alpha, double t, int N);
Series chi_series(double alpha, double t, std::size_t order);

// Radius in (0, alpha) minimizing the largest integrand modulus on the circle.
double contour_radius(double alpha, double t, int n);

struct ContourResult {
  cplx scaled;  // a_n e^{-nt}
  double radius = 0.0;
  int points = 0;
};
// Trapezoidal rule for a_n = (1/(2 i pi n)) \oint (1+1/w)^n ((w+1-alpha)/(w+alpha))^n e^{-2ntw} dw.
// With points = 0 the node count starts at 2048 and doubles until two
// successive values agree to 1e-10 (relative).
ContourResult coeffs_contour_scaled(double alpha, double t, int n,
                                    std::optional<double> radius = std::nullopt, int points = 0);
cplx coeffs_contour(double alpha, double t, int n, std::optional<double> radius = std::nullopt,
                    int points = 0);

struct SaddleAsymptotic {
  double magnitude = 0.0;       // |c_+ + c_-|, two-saddle formula
  double rate = 0.0;            // t + min Re phi(w_{+,+/-}); only w_{+,+} at alpha = 1/2
  double predicted_sign = 0.0;  // sign of Re((-1)^n (c_+ + c_-)/|...|) pattern
  // Single saddle at w_{+,+} with the 1/n Cauchy prefactor kept:
  // -(-1)^n e^{-n(t + Re phi)} / (n sqrt(2 pi n |phi''|)).
  double single_saddle = 0.0;
};
SaddleAsymptotic saddle_asymptotic(double alpha, double t, int n);

}  // namespace fj

#endif
