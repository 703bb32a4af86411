#ifndef FSURF_EXPERIMENT_HPP
#define FSURF_EXPERIMENT_HPP

// End-to-end intervention experiment: fit control surfaces for a list of
// Fourier orders, score them against the collocation reference, time the
// analytic gradient against finite differences and write plot-ready files.

#include "fsurf/cost_gradient.hpp"
#include "fsurf/dynamics.hpp"
#include "fsurf/fourier_surface.hpp"
#include "fsurf/io.hpp"
#include "fsurf/optimizer.hpp"
#include "fsurf/oracles.hpp"
#include "fsurf/quadrature.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsurf {

struct LatticeSpec {
  double start = 0.05;
  double stop = 0.95;
  double step = 0.05;
};

struct BenchmarkSettings {
  double learning_rate = 0.01;
  int max_iterations = 5'000;
  int repeats = 5;
  double fd_step = 1e-6;
};

struct AuditSettings {
  double mape_floor = 1e-6;
  double monotone_tolerance = 0.02;
  double negative_threshold = -0.01;
};

/// Every field defaults to the standard intervention setup:
/// max integral alpha x u - C u^2 with alpha = 2, C = 1, beta = 1/2, xi = 1/4,
/// T = 4, lattice t in {0, 0.05, ..., 4}, x0 in {0.05, ..., 0.95}, eps = 1e-4.
struct ExperimentConfig {
  double alpha = 2.0;
  double C = 1.0;
  double beta = 0.5;
  double xi = 0.25;
  double T = 4.0;
  double L = 1.0;
  LatticeSpec training_x0{};
  double eval_t_step = 0.05;
  LatticeSpec eval_x0{};
  QuadratureRule quadrature{QuadratureScheme::simpson, 0.05};
  std::vector<std::pair<int, int>> fourier_orders{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};
  DescentConfig descent{};
  ReferenceOptions reference{};
  bool reference_nonneg = true;
  BenchmarkSettings benchmark{};
  AuditSettings audit{};
  std::string output_dir = "results";

  [[nodiscard]] GameParams game() const { return {beta, xi}; }
  [[nodiscard]] InterventionCost intervention() const { return {alpha, C}; }
};

/// max integral alpha x u - C u^2  ==  -min integral R x u + (k2/2) u^2
/// with k1 = 0, R = -alpha, k2 = 2 C.
inline CostParams map_to_lagrange(const ExperimentConfig& cfg) { return {0.0, -cfg.alpha, 2.0 * cfg.C}; }

// ---------------------------------------------------------------------------
// Config file: JSON, one nested table per module. Missing keys keep their
// defaults; unknown keys are rejected.

namespace detail {

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> known,
                           const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument("config: '" + where + "' must be an object");
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument("config: unknown key '" + where + key + "'");
}

template <class T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

inline void read_lattice(const nlohmann::json& j, LatticeSpec& out, const std::string& where) {
  reject_unknown(j, {"start", "stop", "step"}, where);
  read_if(j, "start", out.start);
  read_if(j, "stop", out.stop);
  read_if(j, "step", out.step);
}

inline std::vector<double> lattice_values(const LatticeSpec& spec) {
  const auto set = TrainingSet::lattice(spec.start, spec.stop, spec.step);
  return {set.values().begin(), set.values().end()};
}

}  // namespace detail

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  using detail::read_if;
  ExperimentConfig cfg;
  detail::reject_unknown(j,
                         {"alpha", "C", "beta", "xi", "T", "L", "training_x0", "eval_grid", "quadrature",
                          "fourier_orders", "descent", "reference", "benchmark", "audit", "output_dir"},
                         "");
  read_if(j, "alpha", cfg.alpha);
  read_if(j, "C", cfg.C);
  read_if(j, "beta", cfg.beta);
  read_if(j, "xi", cfg.xi);
  read_if(j, "T", cfg.T);
  read_if(j, "L", cfg.L);
  read_if(j, "output_dir", cfg.output_dir);
  if (j.contains("training_x0")) detail::read_lattice(j["training_x0"], cfg.training_x0, "training_x0.");
  if (j.contains("eval_grid")) {
    const auto& e = j["eval_grid"];
    detail::reject_unknown(e, {"t_step", "x0_start", "x0_stop", "x0_step"}, "eval_grid.");
    read_if(e, "t_step", cfg.eval_t_step);
    read_if(e, "x0_start", cfg.eval_x0.start);
    read_if(e, "x0_stop", cfg.eval_x0.stop);
    read_if(e, "x0_step", cfg.eval_x0.step);
  }
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    detail::reject_unknown(q, {"scheme", "step"}, "quadrature.");
    if (q.contains("scheme")) cfg.quadrature.scheme = parse_quadrature_scheme(q["scheme"].get<std::string>());
    read_if(q, "step", cfg.quadrature.step);
  }
  if (j.contains("fourier_orders")) {
    cfg.fourier_orders.clear();
    for (const auto& o : j["fourier_orders"]) {
      if (!o.is_array() || o.size() != 2)
        throw std::invalid_argument("config: fourier_orders entries must be [M, N]");
      cfg.fourier_orders.emplace_back(o[0].get<int>(), o[1].get<int>());
    }
  }
  if (j.contains("descent")) {
    const auto& d = j["descent"];
    detail::reject_unknown(d, {"learning_rate", "grad_tolerance", "max_iterations", "step_rule", "armijo_c", "shrink"},
                           "descent.");
    read_if(d, "learning_rate", cfg.descent.learning_rate);
    read_if(d, "grad_tolerance", cfg.descent.grad_tolerance);
    read_if(d, "max_iterations", cfg.descent.max_iterations);
    const std::string rule = d.value("step_rule", std::string("backtracking"));
    if (rule == "fixed") {
      cfg.descent.step_rule = FixedStep{};
    } else if (rule == "backtracking") {
      Backtracking bt;
      read_if(d, "armijo_c", bt.armijo_c);
      read_if(d, "shrink", bt.shrink);
      cfg.descent.step_rule = bt;
    } else {
      throw std::invalid_argument("config: descent.step_rule must be 'fixed' or 'backtracking'");
    }
  }
  if (j.contains("reference")) {
    const auto& r = j["reference"];
    detail::reject_unknown(r, {"grad_tolerance", "max_iterations", "fd_step", "nonneg"}, "reference.");
    read_if(r, "grad_tolerance", cfg.reference.grad_tolerance);
    read_if(r, "max_iterations", cfg.reference.max_iterations);
    read_if(r, "fd_step", cfg.reference.fd_step);
    read_if(r, "nonneg", cfg.reference_nonneg);
  }
  if (j.contains("benchmark")) {
    const auto& b = j["benchmark"];
    detail::reject_unknown(b, {"learning_rate", "max_iterations", "repeats", "fd_step"}, "benchmark.");
    read_if(b, "learning_rate", cfg.benchmark.learning_rate);
    read_if(b, "max_iterations", cfg.benchmark.max_iterations);
    read_if(b, "repeats", cfg.benchmark.repeats);
    read_if(b, "fd_step", cfg.benchmark.fd_step);
  }
  if (j.contains("audit")) {
    const auto& a = j["audit"];
    detail::reject_unknown(a, {"mape_floor", "monotone_tolerance", "negative_threshold"}, "audit.");
    read_if(a, "mape_floor", cfg.audit.mape_floor);
    read_if(a, "monotone_tolerance", cfg.audit.monotone_tolerance);
    read_if(a, "negative_threshold", cfg.audit.negative_threshold);
  }
  return cfg;
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json orders = nlohmann::json::array();
  for (auto [m, n] : cfg.fourier_orders) orders.push_back({m, n});
  const bool fixed = std::holds_alternative<FixedStep>(cfg.descent.step_rule);
  nlohmann::json descent = {{"learning_rate", cfg.descent.learning_rate},
                            {"grad_tolerance", cfg.descent.grad_tolerance},
                            {"max_iterations", cfg.descent.max_iterations},
                            {"step_rule", fixed ? "fixed" : "backtracking"}};
  if (const auto* bt = std::get_if<Backtracking>(&cfg.descent.step_rule)) {
    descent["armijo_c"] = bt->armijo_c;
    descent["shrink"] = bt->shrink;
  }
  return {
      {"alpha", cfg.alpha}, {"C", cfg.C}, {"beta", cfg.beta}, {"xi", cfg.xi}, {"T", cfg.T}, {"L", cfg.L},
      {"training_x0", {{"start", cfg.training_x0.start}, {"stop", cfg.training_x0.stop}, {"step", cfg.training_x0.step}}},
      {"eval_grid", {{"t_step", cfg.eval_t_step}, {"x0_start", cfg.eval_x0.start}, {"x0_stop", cfg.eval_x0.stop},
                     {"x0_step", cfg.eval_x0.step}}},
      {"quadrature", {{"scheme", to_string(cfg.quadrature.scheme)}, {"step", cfg.quadrature.step}}},
      {"fourier_orders", orders},
      {"descent", descent},
      {"reference", {{"grad_tolerance", cfg.reference.grad_tolerance}, {"max_iterations", cfg.reference.max_iterations},
                     {"fd_step", cfg.reference.fd_step}, {"nonneg", cfg.reference_nonneg}}},
      {"benchmark", {{"learning_rate", cfg.benchmark.learning_rate}, {"max_iterations", cfg.benchmark.max_iterations},
                     {"repeats", cfg.benchmark.repeats}, {"fd_step", cfg.benchmark.fd_step}}},
      {"audit", {{"mape_floor", cfg.audit.mape_floor}, {"monotone_tolerance", cfg.audit.monotone_tolerance},
                 {"negative_threshold", cfg.audit.negative_threshold}}},
      {"output_dir", cfg.output_dir}};
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  return config_from_json(nlohmann::json::parse(in));
}

// ---------------------------------------------------------------------------
// Surfaces and audits

inline Surface sample_control_surface(const CoefficientGrid& grid, std::span<const double> times,
                                      std::span<const double> x0s) {
  Surface s{{times.begin(), times.end()}, {x0s.begin(), x0s.end()},
            Matrix(static_cast<Eigen::Index>(times.size()), static_cast<Eigen::Index>(x0s.size()))};
  for (std::size_t i = 0; i < times.size(); ++i)
    for (std::size_t j = 0; j < x0s.size(); ++j)
      s.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval_u(grid, times[i], x0s[j]);
  return s;
}

inline Surface sample_state_surface(const CoefficientGrid& grid, const GameParams& game,
                                    std::span<const double> times, std::span<const double> x0s) {
  Surface s{{times.begin(), times.end()}, {x0s.begin(), x0s.end()},
            Matrix(static_cast<Eigen::Index>(times.size()), static_cast<Eigen::Index>(x0s.size()))};
  for (std::size_t j = 0; j < x0s.size(); ++j) {
    const FlowContext ctx(grid, game, x0s[j]);
    for (std::size_t i = 0; i < times.size(); ++i)
      s.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval_phi(ctx, times[i]);
  }
  return s;
}

/// Reference solutions (one per x0, shared time grid) as (control, state) surfaces.
inline std::pair<Surface, Surface> reference_surfaces(const std::vector<ReferenceSolution>& refs) {
  if (refs.empty()) throw std::invalid_argument("reference_surfaces: no solutions");
  Surface control;
  control.times = refs.front().time_grid;
  for (const auto& r : refs) control.x0s.push_back(r.x0);
  const auto nt = static_cast<Eigen::Index>(control.times.size());
  const auto nx = static_cast<Eigen::Index>(refs.size());
  control.values.resize(nt, nx);
  Surface state = control;
  for (Eigen::Index j = 0; j < nx; ++j) {
    const auto& r = refs[static_cast<std::size_t>(j)];
    if (r.time_grid != control.times) throw std::invalid_argument("reference_surfaces: time grids differ");
    for (Eigen::Index i = 0; i < nt; ++i) {
      control.values(i, j) = r.control_values[static_cast<std::size_t>(i)];
      state.values(i, j) = r.state_values[static_cast<std::size_t>(i)];
    }
  }
  return {std::move(control), std::move(state)};
}

struct MonotoneReport {
  bool passed = true;
  /// Largest u(t_{i+1}, x0) - u(t_i, x0) over the surface (negative when
  /// every column strictly decreases).
  double max_increase = -std::numeric_limits<double>::infinity();
  std::size_t t_index = 0;
  std::size_t x0_index = 0;
};

/// Checks u(t_{i+1}, x0) <= u(t_i, x0) + tolerance in every x0 column.
inline MonotoneReport check_monotone_decreasing(const Surface& surface, double tolerance) {
  MonotoneReport r;
  for (Eigen::Index j = 0; j < surface.values.cols(); ++j)
    for (Eigen::Index i = 0; i + 1 < surface.values.rows(); ++i) {
      const double inc = surface.values(i + 1, j) - surface.values(i, j);
      if (inc > r.max_increase) {
        r.max_increase = inc;
        r.t_index = static_cast<std::size_t>(i);
        r.x0_index = static_cast<std::size_t>(j);
      }
    }
  r.passed = !(r.max_increase > tolerance);
  return r;
}

/// Fraction of lattice points with value below threshold.
inline double fraction_below(const Surface& surface, double threshold) {
  if (surface.values.size() == 0) return 0.0;
  return static_cast<double>((surface.values.array() < threshold).count()) /
         static_cast<double>(surface.values.size());
}

// ---------------------------------------------------------------------------
// Timing benchmark

struct BenchmarkRow {
  int M = 0;
  int N = 0;
  double analytic_seconds = 0.0;
  double fd_seconds = 0.0;
  int analytic_iterations = 0;
  int fd_iterations = 0;
  bool analytic_converged = false;
  bool fd_converged = false;
  std::string analytic_error;
  std::string fd_error;

  [[nodiscard]] int coefficients() const { return (M + 1) * (N + 1); }
  [[nodiscard]] double ratio() const { return fd_seconds / analytic_seconds; }
};

/// Wall-clock of fixed-rate descent from zero coefficients with the analytic
/// gradient vs central finite differences. Both arms share the objective,
/// initialization and stopping rule; each is timed as the fastest of
/// benchmark.repeats runs after one warm-up.
inline std::vector<BenchmarkRow> timing_benchmark(const ExperimentConfig& cfg,
                                                  const std::vector<std::pair<int, int>>& orders) {
  DescentConfig descent;
  descent.learning_rate = cfg.benchmark.learning_rate;
  descent.grad_tolerance = cfg.descent.grad_tolerance;
  descent.max_iterations = cfg.benchmark.max_iterations;
  descent.step_rule = FixedStep{};
  const auto train = TrainingSet::lattice(cfg.training_x0.start, cfg.training_x0.stop, cfg.training_x0.step);
  const int repeats = std::max(1, cfg.benchmark.repeats);

  std::vector<BenchmarkRow> rows;
  for (auto [M, N] : orders) {
    const auto initial = CoefficientGrid::zeros(M, N, cfg.T, cfg.L);
    const Objective objective(initial, cfg.game(), map_to_lagrange(cfg), train, cfg.quadrature);
    auto value = [&](const CoefficientGrid& g) { return objective.value(g); };
    auto analytic = [&](const CoefficientGrid& g, Matrix& out) { return objective.value_and_gradient(g, out); };
    auto finite = [&](const CoefficientGrid& g, Matrix& out) {
      out = fd_gradient(objective, g, cfg.benchmark.fd_step);
      return objective.value(g);
    };

    BenchmarkRow row;
    row.M = M;
    row.N = N;
    auto time_arm = [&](const auto& oracle, double& seconds, int& iterations, bool& converged, std::string& error) {
      seconds = std::numeric_limits<double>::infinity();
      // Run -1 is an untimed warm-up.
      for (int r = -1; r < repeats; ++r) {
        try {
          const auto report = minimize(initial, descent, value, oracle);
          if (r >= 0) seconds = std::min(seconds, report.wall_time);
          iterations = report.iterations;
          converged = report.converged;
        } catch (const DivergedError& e) {
          error = e.what();
          return;
        }
      }
    };
    time_arm(analytic, row.analytic_seconds, row.analytic_iterations, row.analytic_converged, row.analytic_error);
    time_arm(finite, row.fd_seconds, row.fd_iterations, row.fd_converged, row.fd_error);
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Full experiment

struct OrderResult {
  int M = 0;
  int N = 0;
  std::optional<FitReport> fit;
  std::string error;
  Surface control;
  Surface state;
  MapeResult control_mape;
  MapeResult state_mape;
  MonotoneReport monotone;
  double negative_fraction = 0.0;
  bool flagged = false;
};

struct ExperimentResult {
  std::vector<ReferenceSolution> reference;
  std::vector<OrderResult> orders;
  std::vector<BenchmarkRow> benchmark;
  nlohmann::json report;
  int exit_status = 0;
};

struct RunOptions {
  bool fits = true;
  bool reference = true;
  bool benchmark = true;
  bool write_files = true;
};

inline std::vector<ReferenceSolution> solve_reference_set(const ExperimentConfig& cfg) {
  const auto times = uniform_time_grid(cfg.T, cfg.eval_t_step);
  std::vector<ReferenceSolution> out;
  for (double x0 : detail::lattice_values(cfg.eval_x0))
    out.push_back(solve_reference(x0, cfg.game(), cfg.intervention(), times, cfg.reference_nonneg, cfg.reference));
  return out;
}

/// Fit one order and score it against the reference surfaces.
inline OrderResult fit_order(const ExperimentConfig& cfg, int M, int N, const Surface& ref_control,
                             const Surface& ref_state) {
  OrderResult row;
  row.M = M;
  row.N = N;
  const auto train = TrainingSet::lattice(cfg.training_x0.start, cfg.training_x0.stop, cfg.training_x0.step);
  const auto initial = CoefficientGrid::zeros(M, N, cfg.T, cfg.L);
  try {
    row.fit = minimize(initial, cfg.game(), map_to_lagrange(cfg), train, cfg.quadrature, cfg.descent);
  } catch (const DivergedError& e) {
    row.error = e.what();
    row.flagged = true;
    return row;
  }
  const auto& grid = row.fit->final_coeffs;
  row.control = sample_control_surface(grid, ref_control.times, ref_control.x0s);
  row.state = sample_state_surface(grid, cfg.game(), ref_control.times, ref_control.x0s);
  row.control_mape = mape(row.control, ref_control, cfg.audit.mape_floor);
  row.state_mape = mape(row.state, ref_state, cfg.audit.mape_floor);
  row.monotone = check_monotone_decreasing(row.control, cfg.audit.monotone_tolerance);
  row.negative_fraction = fraction_below(row.control, cfg.audit.negative_threshold);
  row.flagged = !row.fit->converged;
  return row;
}

namespace detail {

inline nlohmann::json mape_json(const MapeResult& m) {
  return {{"percent", m.percent}, {"included", m.included}, {"excluded", m.excluded}};
}

inline void write_text(const std::filesystem::path& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

}  // namespace detail

inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {}) {
  namespace fs = std::filesystem;
  ExperimentResult result;
  auto& report = result.report;
  report["domain_length_L"] = cfg.L;
  report["config"] = config_to_json(cfg);
  report["orders"] = nlohmann::json::array();
  report["benchmark"] = nlohmann::json::array();

  const fs::path out_dir(cfg.output_dir);
  if (opts.write_files) fs::create_directories(out_dir);

  const bool need_reference = opts.reference && (!opts.fits || !cfg.fourier_orders.empty());
  bool reference_ok = true;
  if (need_reference) {
    const auto start = std::chrono::steady_clock::now();
    result.reference = solve_reference_set(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto [ref_control, ref_state] = reference_surfaces(result.reference);
    int unconverged = 0;
    double worst = 0.0;
    for (const auto& r : result.reference) {
      unconverged += r.converged ? 0 : 1;
      worst = std::max(worst, r.grad_norm);
    }
    reference_ok = unconverged == 0;
    report["reference"] = {{"solutions", result.reference.size()}, {"unconverged", unconverged},
                           {"max_grad_norm", worst}, {"seconds", seconds}};
    if (opts.write_files)
      detail::write_text(out_dir / "reference.csv",
                         [&](std::ostream& os) { write_surface_csv(os, ref_control, ref_state); });

    if (opts.fits) {
      for (auto [M, N] : cfg.fourier_orders) {
        auto row = fit_order(cfg, M, N, ref_control, ref_state);
        row.flagged = row.flagged || !reference_ok;
        nlohmann::json j = {{"M", M}, {"N", N}, {"flagged", row.flagged}};
        if (row.fit) {
          const auto tag = std::to_string(M) + "_" + std::to_string(N);
          j["objective"] = row.fit->objective_history.back();
          j["iterations"] = row.fit->iterations;
          j["converged"] = row.fit->converged;
          j["stalled"] = row.fit->stalled;
          j["grad_norm"] = row.fit->grad_norm_history.back();
          j["fit_seconds"] = row.fit->wall_time;
          j["control_mape"] = detail::mape_json(row.control_mape);
          j["state_mape"] = detail::mape_json(row.state_mape);
          j["monotone"] = {{"passed", row.monotone.passed}, {"tolerance", cfg.audit.monotone_tolerance},
                           {"max_increase", row.monotone.max_increase},
                           {"t", row.control.times[row.monotone.t_index]},
                           {"x0", row.control.x0s[row.monotone.x0_index]}};
          j["negative_fraction"] = row.negative_fraction;
          j["coefficients"] = grid_to_json(row.fit->final_coeffs);
          if (opts.write_files) {
            detail::write_text(out_dir / ("surface_control_" + tag + ".csv"),
                               [&](std::ostream& os) { write_surface_csv(os, row.control, row.state); });
            detail::write_text(out_dir / ("surface_state_" + tag + ".csv"),
                               [&](std::ostream& os) { write_surface_csv(os, row.control, row.state); });
            detail::write_text(out_dir / ("trace_" + tag + ".csv"),
                               [&](std::ostream& os) { write_trace_csv(os, *row.fit); });
          }
        } else {
          j["error"] = row.error;
        }
        report["orders"].push_back(j);
        if (row.flagged) result.exit_status = 1;
        result.orders.push_back(std::move(row));
      }
    }
  }
  if (!reference_ok) result.exit_status = 1;

  if (opts.benchmark && !cfg.fourier_orders.empty()) {
    result.benchmark = timing_benchmark(cfg, cfg.fourier_orders);
    for (const auto& b : result.benchmark) {
      nlohmann::json j = {{"M", b.M},
                          {"N", b.N},
                          {"coefficients", b.coefficients()},
                          {"analytic_seconds", b.analytic_seconds},
                          {"fd_seconds", b.fd_seconds},
                          {"speedup", b.ratio()},
                          {"analytic_iterations", b.analytic_iterations},
                          {"fd_iterations", b.fd_iterations}};
      if (!b.analytic_error.empty()) j["analytic_error"] = b.analytic_error;
      if (!b.fd_error.empty()) j["fd_error"] = b.fd_error;
      report["benchmark"].push_back(j);
      if (!b.analytic_error.empty() || !b.fd_error.empty()) result.exit_status = 1;
    }
  }

  report["exit_status"] = result.exit_status;
  if (opts.write_files)
    detail::write_text(out_dir / "report.json", [&](std::ostream& os) { os << report.dump(2) << '\n'; });
  return result;
}

}  // namespace fsurf

#endif  // FSURF_EXPERIMENT_HPP
