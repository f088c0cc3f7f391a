#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "freejacobi/acceptance.hpp"
#include "freejacobi/characteristic_flow.hpp"
#include "freejacobi/chi_saddle.hpp"
#include "freejacobi/csv.hpp"
#include "freejacobi/dynamic_identity.hpp"
#include "freejacobi/errors.hpp"
#include "freejacobi/fubm_transforms.hpp"
#include "freejacobi/jacobi_moments.hpp"
#include "freejacobi/matrix_mc.hpp"
#include "freejacobi/vmap_analysis.hpp"
#include "freejacobi/wachter_kunisky.hpp"

namespace fj::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return csv::num(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
  if (const auto* i = std::get_if<long long>(&c)) return json(*i);
  return json(std::get<std::string>(c));
}

void write_table(std::ostream& os, const Table& t, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
      rows.push_back(std::move(o));
    }
    json doc = json::object();
    doc["columns"] = t.columns;
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
    return;
  }
  csv::write_row(os, t.columns);
  for (const auto& r : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : r) cells.push_back(cell_text(c));
    csv::write_row(os, cells);
  }
}

// Flag values as parsed; unset flags stay empty and take per-subcommand defaults.
struct Flags {
  std::optional<double> alpha, beta, t, t_end, dt, radius, spread;
  std::optional<int> order, n, points, N, replicas, threads;
  std::optional<std::uint64_t> seed;
  std::string out, format = "csv", family = "equal", init = "delta", ensemble = "unitary";
  bool control = false;
};

// Records every resolved parameter for the manifest.
class Params {
 public:
  template <class T>
  T get(const std::optional<T>& v, T fallback, const std::string& name) {
    const T x = v.value_or(fallback);
    record_[name] = x;
    return x;
  }
  void set(const std::string& name, const json& v) { record_[name] = v; }
  const json& record() const { return record_; }

 private:
  json record_ = json::object();
};

struct Context {
  const Flags& flags;
  Params params;
  std::ostream& out;
  std::vector<std::string> outputs;

  // Writes text to path (or stdout when path is empty) and remembers the path.
  void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
      body(out);
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + path);
    body(f);
    outputs.push_back(path);
  }
  void emit_table(const std::string& path, const Table& t) {
    emit(path, [&](std::ostream& os) { write_table(os, t, flags.format); });
  }
};

MomentVector two_atom_half(double alpha, double spread, int order) {
  // (2a-1) delta_1 + (1-a)(delta_{(1-s)/2} + delta_{(1+s)/2})
  MomentVector m(order + 1);
  const double lo = 0.5 * (1.0 - spread), hi = 0.5 * (1.0 + spread);
  for (int n = 0; n <= order; ++n)
    m[n] = (2.0 * alpha - 1.0) + (1.0 - alpha) * (std::pow(lo, n) + std::pow(hi, n));
  return m;
}

// Trajectory whose grid contains center - r, center and center + r exactly.
MomentTrajectory window(Family family, double alpha, const MomentVector& m0, double center,
                        double r, double dt) {
  if (!(center - r >= 0.0)) throw DomainError("finite-difference window reaches below t = 0");
  MomentVector start = m0;
  if (center - r > 0.0)
    start = integrate(family, alpha, m0, center - r, std::min(dt, center - r)).moments.back();
  MomentTrajectory w = integrate(family, alpha, start, 2.0 * r, 0.5 * r);
  for (double& s : w.times) s += center - r;
  return w;
}

// ---- subcommands

int run_moments(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.5, "alpha");
  const double t_end = c.params.get(c.flags.t_end, 1.0, "t_end");
  const double dt = c.params.get(c.flags.dt, 1e-3, "dt");
  const int order = c.params.get(c.flags.order, 10, "order");
  c.params.set("family", c.flags.family);
  c.params.set("init", c.flags.init);
  if (order < 1) throw DomainError("--order must be >= 1");
  const Family family = c.flags.family == "half" ? Family::HalfRank : Family::EqualRanks;
  MomentVector m0;
  if (c.flags.init == "stationary")
    m0 = family == Family::HalfRank ? stationary_half_moments(alpha, order)
                                    : stationary_moments(alpha, order);
  else
    m0 = delta_one_moments(order);
  const MomentTrajectory traj = integrate(family, alpha, m0, t_end, dt);
  Table t;
  t.columns.push_back("t");
  for (int n = 0; n <= order; ++n) t.columns.push_back("m_" + std::to_string(n));
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::vector<Cell> row{traj.times[i]};
    for (double v : traj.moments[i]) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_flow(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.5, "alpha");
  const double time = c.params.get(c.flags.t, 1.0, "t");
  const double radius = c.params.get(c.flags.radius, 0.05, "radius");
  const int points = c.params.get(c.flags.points, 16, "points");
  if (points < 1) throw DomainError("--points must be >= 1");
  Table t{{"k", "z_re", "z_im", "M_sqrt_re", "M_sqrt_im", "M_homographic_re",
           "M_homographic_im", "J_re", "J_im", "newton_iterations", "residual"},
          {}};
  for (int k = 0; k < points; ++k) {
    const cplx z = std::polar(radius, 2.0 * std::numbers::pi * k / points);
    const FlowPoint p = trace_flow(alpha, time, z);
    t.rows.push_back({static_cast<long long>(k), z.real(), z.imag(), p.M_sqrt.real(),
                      p.M_sqrt.imag(), p.M_homographic.real(), p.M_homographic.imag(),
                      p.J.real(), p.J.imag(), static_cast<long long>(p.newton_iterations),
                      p.residual});
  }
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_vmap(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.7, "alpha");
  const double time = c.params.get(c.flags.t, 1.0, "t");
  const PhaseReport r = phase_report(alpha, time);
  auto opt = [](const std::optional<double>& v) {
    return v ? Cell(*v) : Cell(std::numeric_limits<double>::quiet_NaN());
  };
  Table t{{"alpha", "t", "verdict", "regime", "T_alpha", "t0", "t1", "a", "b", "a_minus_1",
           "b_minus_1", "min_location", "min_value", "remark_probe"},
          {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  t.rows.push_back({alpha, time, to_string(r.verdict), to_string(r.regime), r.T_alpha,
                    r.times ? r.times->t0 : nan, r.times ? r.times->t1 : nan, opt(r.a), opt(r.b),
                    opt(r.a_offset), opt(r.b_offset), opt(r.min_location), opt(r.min_value),
                    alpha >= 0.5 ? remark_probe(alpha, time) : nan});
  c.emit_table(c.flags.out, t);
  return 0;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

int run_saddle(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.7, "alpha");
  const double time = c.params.get(c.flags.t, 7.0, "t");
  const int n = c.params.get(c.flags.n, 60, "n");
  if (n < 1) throw DomainError("--n must be >= 1");
  const SaddleReport r = critical_points(alpha, time);
  json rep = json::object();
  rep["alpha"] = alpha;
  rep["t"] = time;
  rep["S0"] = r.S0;
  rep["Delta"] = r.Delta;
  rep["regime"] = to_string(r.regime);
  rep["Z_plus"] = complex_json(r.Zplus);
  rep["Z_minus"] = complex_json(r.Zminus);
  const char* names[4] = {"w_pp", "w_pm", "w_mp", "w_mm"};
  json w = json::object();
  for (int i = 0; i < 4; ++i) {
    json e = json::object();
    e["w"] = complex_json(r.w[i]);
    e["phi"] = complex_json(r.phi_at_w[i]);
    e["phi2"] = complex_json(r.phi2_at_w[i]);
    w[names[i]] = std::move(e);
  }
  rep["critical_points"] = std::move(w);
  rep["U_plus"] = complex_json(r.U_plus);
  rep["U_minus"] = complex_json(r.U_minus);
  rep["decay_plus"] = r.decay_plus;
  rep["decay_minus"] = r.decay_minus;
  c.emit(c.flags.out, [&](std::ostream& os) { os << rep.dump(2) << '\n'; });

  if (r.regime != SaddleRegime::RealFour || alpha < 0.5) return 0;
  const ChiCoefficients lag = coeffs_lagrange(alpha, time, n);
  Table t{{"n", "a_scaled", "log_abs_a", "two_saddle_magnitude", "ratio", "single_saddle",
           "single_saddle_ratio"},
          {}};
  for (int k = 1; k <= n; ++k) {
    const SaddleAsymptotic sa = saddle_asymptotic(alpha, time, k);
    t.rows.push_back({static_cast<long long>(k), lag.b(k), lag.log_abs_a(k), sa.magnitude,
                      std::abs(lag.b(k)) / sa.magnitude, sa.single_saddle,
                      lag.b(k) / sa.single_saddle});
  }
  const std::string path =
      c.flags.out.empty() ? "" : c.flags.out + ".coeffs." + (c.flags.format == "json" ? "json" : "csv");
  c.emit_table(path, t);
  return 0;
}

int run_coeffs(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.7, "alpha");
  const double time = c.params.get(c.flags.t, 1.0, "t");
  const int n = c.params.get(c.flags.n, 30, "n");
  const int points = c.params.get(c.flags.points, 0, "points");
  std::optional<double> radius = c.flags.radius;
  c.params.set("radius", radius ? json(*radius) : json("auto"));
  if (n < 1) throw DomainError("--n must be >= 1");
  const ChiCoefficients lag = coeffs_lagrange(alpha, time, n);
  Table t{{"n", "lagrange_scaled", "contour_re", "contour_im", "radius", "points", "rel_diff"}, {}};
  for (int k = 1; k <= n; ++k) {
    const ContourResult cr = coeffs_contour_scaled(alpha, time, k, radius, points);
    t.rows.push_back({static_cast<long long>(k), lag.b(k), cr.scaled.real(), cr.scaled.imag(),
                      cr.radius, static_cast<long long>(cr.points),
                      std::abs(cr.scaled.real() - lag.b(k)) / std::abs(lag.b(k))});
  }
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_wachter(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.5, "alpha");
  const double beta = c.params.get(c.flags.beta, alpha, "beta");
  const int n = c.params.get(c.flags.n, 10, "n");
  const MeasureSpec nu = make_measure(MeasureKind::Nu, beta, alpha);
  const MeasureSpec mu = make_measure(MeasureKind::MuInf, beta, alpha);
  Table t{{"j", "nu_moment", "mu_inf_moment"}, {}};
  for (int j = 0; j <= n; ++j)
    t.rows.push_back({static_cast<long long>(j), moment(nu, j), moment(mu, j)});
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_kunisky(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.7, "alpha");
  const int n = c.params.get(c.flags.n, 10, "n");
  Table t{{"j", "pushforward", "equal_rank", "rel_error"}, {}};
  bool ok = true;
  for (const auto& r : kunisky_table(alpha, n)) {
    t.rows.push_back({static_cast<long long>(r.j), r.pushforward, r.equal_rank, r.rel_error});
    ok = ok && r.rel_error < 1e-8;
  }
  c.emit_table(c.flags.out, t);
  return ok ? 0 : 2;
}

int run_dynamic(Context& c) {
  const double alpha = c.params.get(c.flags.alpha, 0.7, "alpha");
  const double time = c.params.get(c.flags.t, 1.0, "t");
  const double h = c.params.get(c.flags.dt, 1e-3, "h");
  const int order = c.params.get(c.flags.order, 60, "order");
  const double spread = c.params.get(c.flags.spread, 0.5, "spread");
  c.params.set("init", c.flags.init);
  if (!(h > 0.0)) throw DomainError("--dt (finite-difference step) must be > 0");
  const bool stationary = c.flags.init == "stationary";
  const MomentVector equal0 =
      stationary ? stationary_moments(alpha, order) : delta_one_moments(order);
  const MomentVector half0 =
      stationary ? stationary_half_moments(alpha, order) : two_atom_half(alpha, spread, order);

  const double grid = std::min(1e-3, h);
  const auto equal = window(Family::EqualRanks, alpha, equal0, time, h, grid);
  const auto chain = window(Family::EqualRanks, alpha, equal0, timemap::u_chain_source_time(time),
                            2.0 * h, grid);
  const auto half = window(Family::HalfRank, alpha, half0, timemap::half_rank_time(time), 0.5 * h,
                           grid);
  const double proxy = evenness_proxy(half, timemap::half_rank_time(time));

  Table t{{"branch", "t", "z_re", "z_im", "residual", "evenness_proxy", "status"}, {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  bool blocked = false;
  for (cplx z : {cplx(2.0, 0.0), cplx(3.0, 0.0), cplx(2.0, 1.0)})
    t.rows.push_back({std::string("alpha"), time, z.real(), z.imag(),
                      same_pde_residual(Branch::Alpha, equal, time, z, h), nan,
                      std::string("ok")});
  for (cplx z : {cplx(2.0, 0.0), cplx(3.0, 0.0), cplx(2.0, 1.0)})
    t.rows.push_back({std::string("u_chain"), time, z.real(), z.imag(),
                      u_chain_residual(chain, time, z, h), nan, std::string("ok")});
  for (cplx y : {cplx(4.0, 0.0), cplx(6.0, 0.0), cplx(4.0, 4.0)}) {
    try {
      t.rows.push_back({std::string("v"), time, y.real(), y.imag(),
                        same_pde_residual(Branch::V, half, time, y, h), proxy,
                        std::string("ok")});
    } catch (const ValidationError& e) {
      blocked = true;
      t.rows.push_back({std::string("v"), time, y.real(), y.imag(), nan, proxy,
                        std::string("blocked: ") + e.what()});
    }
  }
  c.emit_table(c.flags.out, t);
  return blocked ? 2 : 0;
}

int run_equa3(Context& c) {
  const int N = c.params.get(c.flags.N, 400, "N");
  const double alpha = c.params.get(c.flags.alpha, 0.5, "alpha");
  const std::uint64_t seed = c.params.get(c.flags.seed, std::uint64_t{1}, "seed");
  const int j_max = c.params.get(c.flags.n, 3, "j_max");
  const int replicas = c.params.get(c.flags.replicas, 20, "replicas");
  const int threads = c.params.get(c.flags.threads, 0, "threads");
  c.params.set("coupling", c.flags.control ? "non-free-control" : "free");
  const auto rows = equa3_check(N, alpha, seed, j_max, replicas,
                                c.flags.control ? Equa3Coupling::NonFreeControl : Equa3Coupling::Free,
                                threads);
  Table t{{"j", "lhs", "rhs", "gap", "stderr"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({static_cast<long long>(r.j), r.lhs, r.rhs, r.gap, r.std_error});
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_mc(Context& c) {
  EnsembleConfig cfg;
  cfg.N = c.params.get(c.flags.N, 200, "N");
  cfg.replicas = c.params.get(c.flags.replicas, 100, "replicas");
  cfg.t_end = c.params.get(c.flags.t_end, 1.0, "t_end");
  cfg.dt = c.params.get(c.flags.dt, 0.005, "dt");
  cfg.seed = c.params.get(c.flags.seed, std::uint64_t{1}, "seed");
  cfg.threads = c.params.get(c.flags.threads, 0, "threads");
  const int k_max = c.params.get(c.flags.n, 3, "n");
  c.params.set("ensemble", c.flags.ensemble);
  Table t{{"j", "mean", "stderr", "limit"}, {}};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (c.flags.ensemble == "jacobi") {
    const double alpha = c.params.get(c.flags.alpha, 0.6, "alpha");
    const double beta = c.params.get(c.flags.beta, alpha, "beta");
    const auto est = jacobi_matrix_moments(cfg, beta, alpha, k_max);
    // the hierarchy limit is available when P and Q start equal
    std::optional<MomentVector> limit;
    if (beta == alpha)
      limit = integrate(Family::EqualRanks, alpha, delta_one_moments(k_max), cfg.t_end, 1e-3)
                  .moments.back();
    for (const auto& e : est)
      t.rows.push_back({static_cast<long long>(e.j), e.mean, e.std_error,
                        limit ? (*limit)[e.j] : nan});
  } else {
    const auto est = unitary_bm_moments(cfg, k_max);
    const FubmMoments lim = fubm_moments(cfg.t_end, k_max);
    for (const auto& e : est)
      t.rows.push_back({static_cast<long long>(e.j), e.mean, e.std_error, lim(e.j)});
  }
  c.emit_table(c.flags.out, t);
  return 0;
}

int run_selftest(Context& c) {
  const int threads = c.params.get(c.flags.threads, 0, "threads");
  int failures = 0;
  c.emit(c.flags.out, [&](std::ostream& os) { failures = acceptance::run_all(os, threads); });
  return failures == 0 ? 0 : 2;
}

void write_manifest(const Context& c, const std::string& sub, double seconds) {
  json m = json::object();
  m["subcommand"] = sub;
  m["parameters"] = c.params.record();
  m["format"] = c.flags.format;
  if (c.flags.seed) m["seed"] = *c.flags.seed;
  m["version"] = FREEJACOBI_VERSION;
  m["outputs"] = c.outputs;
  m["duration_seconds"] = seconds;
  std::ofstream f(c.flags.out + ".manifest.json", std::ios::binary);
  if (!f) throw DomainError("cannot write manifest for " + c.flags.out);
  f << m.dump(2) << '\n';
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free Jacobi process: moments, characteristic flow, phase and saddle analysis"};
  app.set_version_flag("--version", std::string(FREEJACOBI_VERSION));
  app.require_subcommand(1);
  Flags f;

  using Handler = int (*)(Context&);
  struct Sub {
    const char* name;
    const char* help;
    Handler run;
  };
  const Sub subs[] = {
      {"moments", "moment trajectory from the hierarchy", run_moments},
      {"flow", "moment generating function through the characteristic flow", run_flow},
      {"vmap", "phase report of the rescaled map", run_vmap},
      {"saddle", "critical points and saddle-point comparison", run_saddle},
      {"coeffs", "inverse coefficients by Lagrange inversion and contour integration", run_coeffs},
      {"wachter", "moments of the stationary measures", run_wachter},
      {"kunisky", "static pushforward identity table", run_kunisky},
      {"dynamic", "same-equation residuals and evenness proxy", run_dynamic},
      {"equa3", "initial-data identity on random projections", run_equa3},
      {"mc", "finite-N Monte Carlo moments", run_mc},
      {"selftest", "full acceptance suite", run_selftest},
  };
  std::map<const CLI::App*, const Sub*> by_app;
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    by_app[sc] = &s;
    sc->add_option("--alpha", f.alpha, "rank parameter alpha")->check(CLI::Range(0.0, 1.0));
    sc->add_option("--beta", f.beta, "rank of P")->check(CLI::Range(0.0, 1.0));
    sc->add_option("--t", f.t, "time")->check(CLI::NonNegativeNumber);
    sc->add_option("--t-end", f.t_end, "final time")->check(CLI::NonNegativeNumber);
    sc->add_option("--dt", f.dt, "time step (finite-difference step for dynamic)")
        ->check(CLI::PositiveNumber);
    sc->add_option("--order", f.order, "highest moment order")->check(CLI::Range(1, 400));
    sc->add_option("--n", f.n, "coefficient index or largest power")->check(CLI::Range(1, 200));
    sc->add_option("--radius", f.radius, "circle radius")->check(CLI::PositiveNumber);
    sc->add_option("--points", f.points, "quadrature points (0: adaptive)")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--N", f.N, "matrix size")->check(CLI::Range(2, 4096));
    sc->add_option("--replicas", f.replicas, "Monte Carlo replicas")->check(CLI::Range(1, 100000));
    sc->add_option("--seed", f.seed, "random seed");
    sc->add_option("--threads", f.threads, "worker cap (FREEJACOBI_THREADS when unset)")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--out", f.out, "output path; a manifest is written next to it");
    sc->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (std::string(s.name) == "moments") {
      sc->add_option("--family", f.family, "equal or half")->check(CLI::IsMember({"equal", "half"}));
      sc->add_option("--init", f.init, "delta or stationary")
          ->check(CLI::IsMember({"delta", "stationary"}));
    }
    if (std::string(s.name) == "dynamic") {
      sc->add_option("--init", f.init, "delta (two-atom for the half-rank branch) or stationary")
          ->check(CLI::IsMember({"delta", "stationary"}));
      sc->add_option("--spread", f.spread, "two-atom half-rank data at (1 -/+ spread)/2")
          ->check(CLI::Range(0.0, 1.0));
    }
    if (std::string(s.name) == "equa3")
      sc->add_flag("--control", f.control, "non-free control: Q = P without rotation");
    if (std::string(s.name) == "mc")
      sc->add_option("--ensemble", f.ensemble, "unitary or jacobi")
          ->check(CLI::IsMember({"unitary", "jacobi"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Sub& sub = *by_app.at(chosen);
  Context ctx{f, {}, out, {}};
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = sub.run(ctx);
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    code = 2;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    code = 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!f.out.empty()) {
    try {
      write_manifest(ctx, sub.name, secs);
    } catch (const std::exception& e) {
      err << e.what() << '\n';
      return 1;
    }
  }
  return code;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"freejacobi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fj::cli
