#ifndef FREEJACOBI_VMAP_ANALYSIS_HPP
#define FREEJACOBI_VMAP_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fj {

// Value carried as sign * exp(log_abs), for arguments where e^{tu} overflows.
struct SignedLog {
  int sign = 0;
  double log_abs = 0.0;
  double value() const;
};

// Vt(u) = ((u-1)(u-1+2a) / ((u+1)(u+1-2a))) e^{tu}, u >= 0.
double v_tilde(double alpha, double t, double u);
SignedLog v_tilde_log(double alpha, double t, double u);
// Vt(1 + d), with u - 1 = d kept exact.
double v_tilde_offset(double alpha, double t, double d);
double v_tilde_derivative(double alpha, double t, double u);

// R(y) = 4(1-a)(y-1+2a) + t(y-1)(y-(2a-1)^2); sign of dVt/du at u = sqrt(y).
double r_polynomial(double alpha, double t, double y);
// T(a) = 4(1-a)/(1+(1-2a)^2).
double threshold_T(double alpha);

struct TransitionTimes {
  double t0;
  double t1;
};
TransitionTimes transition_times(double alpha);

enum class VRegime { Increasing, InteriorMin, NotApplicable };
enum class Verdict { Bijection, ProperSubset, Undetermined };
std::string to_string(VRegime r);
std::string to_string(Verdict v);

struct PhaseReport {
  double alpha = 0.0;
  double t = 0.0;
  double T_alpha = 0.0;
  std::optional<TransitionTimes> times;  // only for alpha >= 1/2
  VRegime regime = VRegime::NotApplicable;
  std::vector<double> critical_points;   // positive u with R(u^2) = 0
  std::optional<double> a, b;            // Vt(a) = -1, Vt(b) = +1
  // a - 1 and b - 1 before rounding; near u = 1 these carry the endpoints to
  // far more digits than a and b
  std::optional<double> a_offset, b_offset;
  std::optional<double> min_location, min_value;
  Verdict verdict = Verdict::Undetermined;
};

PhaseReport phase_report(double alpha, double t);

// The alpha in [1/2, 1) with t1(alpha) = t.
double alpha_at_time(double t);

// Vt at u = sqrt(sqrt(2a-1)(2a - sqrt(2a-1))); at a = 1/2 the removable limit -1.
double remark_probe(double alpha, double t);

void write_phase_csv_header(std::ostream& os);
void write_phase_csv_row(std::ostream& os, const PhaseReport& r);

}  // namespace fj

#endif
