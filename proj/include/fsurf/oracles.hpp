#ifndef FSURF_ORACLES_HPP
#define FSURF_ORACLES_HPP

// Verification machinery kept independent of the closed-form path: finite
// differences, explicit integration of the replicator ODE, a direct
// collocation reference solver and the MAPE metric.

#include "fsurf/cost_gradient.hpp"
#include "fsurf/dynamics.hpp"
#include "fsurf/errors.hpp"
#include "fsurf/fourier_surface.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsurf {

/// Central differences (J(a + h e_mn) - J(a - h e_mn)) / 2h, two calls of
/// value_fn per coefficient.
template <std::invocable<const CoefficientGrid&> F>
Matrix fd_gradient(const F& value_fn, const CoefficientGrid& grid, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: h must be positive");
  Matrix g(grid.M() + 1, grid.N() + 1);
  Matrix shifted = grid.coeffs();
  for (int m = 0; m <= grid.M(); ++m) {
    for (int n = 0; n <= grid.N(); ++n) {
      const double a = shifted(m, n);
      shifted(m, n) = a + h;
      const double up = value_fn(grid.with_coeffs(shifted));
      shifted(m, n) = a - h;
      const double down = value_fn(grid.with_coeffs(shifted));
      shifted(m, n) = a;
      g(m, n) = (up - down) / (2.0 * h);
    }
  }
  return g;
}

inline Matrix fd_gradient(const Objective& objective, const CoefficientGrid& grid, double h) {
  return fd_gradient([&objective](const CoefficientGrid& g) { return objective.value(g); }, grid, h);
}

inline Matrix fd_gradient(const CoefficientGrid& grid, const GameParams& game,
                          const CostParams& cost, const TrainingSet& train,
                          const QuadratureRule& quad, double h) {
  return fd_gradient(Objective(grid, game, cost, train, quad), grid, h);
}

// ---------------------------------------------------------------------------

struct Trajectory {
  std::vector<double> times;
  std::vector<double> states;
};

/// Classical RK4 for x' = x (1 - x) (beta u(t) - xi) on a uniform grid whose
/// last node is exactly T. The step is shrunk so that it tiles [0, T].
template <std::invocable<double> Control>
Trajectory integrate_ode(const GameParams& game, const Control& control, double x0, double step,
                         double horizon) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_ode: step must be positive");
  if (!(horizon > 0.0)) throw std::invalid_argument("integrate_ode: horizon must be positive");
  detail::check_interior(x0);

  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(horizon / step - 1e-9)));
  const double h = horizon / static_cast<double>(n);
  auto rhs = [&](double t, double x) {
    return x * (1.0 - x) * (game.beta * static_cast<double>(control(t)) - game.xi);
  };

  Trajectory traj;
  traj.times.resize(n + 1);
  traj.states.resize(n + 1);
  traj.times[0] = 0.0;
  traj.states[0] = x0;
  double x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = horizon * static_cast<double>(i) / static_cast<double>(n);
    const double t_end = i + 1 == n ? horizon : horizon * static_cast<double>(i + 1) / static_cast<double>(n);
    const double t_mid = 0.5 * (t + t_end);
    const double k1 = rhs(t, x);
    const double k2 = rhs(t_mid, x + 0.5 * h * k1);
    const double k3 = rhs(t_mid, x + 0.5 * h * k2);
    const double k4 = rhs(t_end, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(x) || x < -1e-9 || x > 1.0 + 1e-9)
      throw IntegrationBlowup("integrate_ode: state left [0, 1] at t = " + std::to_string(t_end));
    traj.times[i + 1] = t_end;
    traj.states[i + 1] = x;
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Reference solver for   max  integral_0^T alpha x u - C u^2 dt,  u >= 0.

struct InterventionCost {
  double alpha = 2.0;
  double C = 1.0;
};

struct ReferenceOptions {
  double grad_tolerance = 1e-6;
  int max_iterations = 20'000;
  double fd_step = 1e-6;
  double armijo_c = 1e-4;
};

struct ReferenceSolution {
  double x0 = 0.0;
  std::vector<double> time_grid;
  std::vector<double> control_values;
  std::vector<double> state_values;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
  double grad_norm = 0.0;
  std::vector<double> objective_history;
};

/// Uniform grid {0, h, ..., T} with the last node exactly T.
inline std::vector<double> uniform_time_grid(double horizon, double step) {
  if (!(step > 0.0) || !(horizon > 0.0))
    throw std::invalid_argument("uniform_time_grid: step and horizon must be positive");
  const double count = std::round(horizon / step);
  if (count < 1.0 || std::abs(count * step - horizon) > 1e-9 * std::max(1.0, horizon))
    throw std::invalid_argument("uniform_time_grid: step does not divide the horizon");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = horizon * static_cast<double>(i) / static_cast<double>(n);
  t.back() = horizon;
  return t;
}

namespace detail {

/// Linear interpolation of node values on a uniform grid.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::span<const double> times, std::span<const double> values)
      : times_(times), values_(values),
        step_((times.back() - times.front()) / static_cast<double>(times.size() - 1)) {}

  double operator()(double t) const {
    const auto last = times_.size() - 1;
    auto i = static_cast<std::size_t>(std::clamp((t - times_.front()) / step_, 0.0, static_cast<double>(last)));
    if (i >= last) i = last - 1;
    const double s = (t - times_[i]) / (times_[i + 1] - times_[i]);
    return (1.0 - s) * values_[i] + s * values_[i + 1];
  }

 private:
  std::span<const double> times_;
  std::span<const double> values_;
  double step_;
};

struct ReferenceEvaluation {
  double objective;
  std::vector<double> states;
};

inline ReferenceEvaluation evaluate_reference(double x0, const GameParams& game,
                                              const InterventionCost& cost,
                                              std::span<const double> times,
                                              std::span<const double> control) {
  const double horizon = times.back();
  const double h = horizon / static_cast<double>(times.size() - 1);
  const auto traj = integrate_ode(game, PiecewiseLinear(times, control), x0, h, horizon);
  double total = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double w = (i == 0 || i + 1 == times.size()) ? 0.5 * h : h;
    total += w * (cost.alpha * traj.states[i] * control[i] - cost.C * control[i] * control[i]);
  }
  return {total, traj.states};
}

}  // namespace detail

/// Direct collocation: one control value per grid node (piecewise linear in
/// t), objective by RK4 on the same grid plus the trapezoid rule, maximized by
/// projected gradient ascent on finite-difference node gradients with an
/// Armijo step. Stops once the projected node gradient's max-abs entry drops
/// below options.grad_tolerance; otherwise the result is marked unconverged.
inline ReferenceSolution solve_reference(double x0, const GameParams& game,
                                         const InterventionCost& cost,
                                         std::span<const double> time_grid, bool nonneg,
                                         const ReferenceOptions& options = {}) {
  detail::check_interior(x0);
  if (time_grid.size() < 2) throw std::invalid_argument("solve_reference: need at least two nodes");

  const std::size_t n = time_grid.size();
  std::vector<double> u(n, 0.0);
  auto objective = [&](std::span<const double> control) {
    return detail::evaluate_reference(x0, game, cost, time_grid, control).objective;
  };
  auto project = [&](double v) { return nonneg ? std::max(v, 0.0) : v; };

  ReferenceSolution sol;
  sol.x0 = x0;
  sol.time_grid.assign(time_grid.begin(), time_grid.end());

  double value = objective(u);
  std::vector<double> grad(n);
  std::vector<double> trial(n);
  double step = 1.0;
  for (;;) {
    sol.objective_history.push_back(value);
    std::vector<double> probe = u;
    for (std::size_t i = 0; i < n; ++i) {
      probe[i] = u[i] + options.fd_step;
      const double up = objective(probe);
      probe[i] = u[i] - options.fd_step;
      const double down = objective(probe);
      probe[i] = u[i];
      grad[i] = (up - down) / (2.0 * options.fd_step);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool pinned = nonneg && u[i] <= 0.0 && grad[i] < 0.0;
      if (!pinned) norm = std::max(norm, std::abs(grad[i]));
    }
    sol.grad_norm = norm;
    if (norm < options.grad_tolerance) {
      sol.converged = true;
      break;
    }
    if (sol.iterations >= options.max_iterations) break;

    step = std::min(step * 2.0, 1e6);
    bool accepted = false;
    double trial_value = value;
    while (step > 1e-14) {
      double predicted = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = project(u[i] + step * grad[i]);
        predicted += grad[i] * (trial[i] - u[i]);
      }
      trial_value = objective(trial);
      if (trial_value >= value + options.armijo_c * predicted) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    u = trial;
    value = trial_value;
    ++sol.iterations;
  }

  auto eval = detail::evaluate_reference(x0, game, cost, time_grid, u);
  sol.control_values = std::move(u);
  sol.state_values = std::move(eval.states);
  sol.state_values.front() = x0;
  sol.objective = eval.objective;
  return sol;
}

// ---------------------------------------------------------------------------

/// Values sampled on a (t, x0) lattice: values(i, j) at (times[i], x0s[j]).
struct Surface {
  std::vector<double> times;
  std::vector<double> x0s;
  Matrix values;
};

struct MapeResult {
  double percent = 0.0;
  std::size_t included = 0;
  std::size_t excluded = 0;
};

/// 100 / |P| * sum_P |ref - approx| / |ref|, where P skips reference values
/// with magnitude below floor.
inline MapeResult mape(const Surface& approx, const Surface& reference, double floor) {
  auto same = [](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > 1e-12) return false;
    return true;
  };
  if (!same(approx.times, reference.times) || !same(approx.x0s, reference.x0s) ||
      approx.values.rows() != reference.values.rows() || approx.values.cols() != reference.values.cols())
    throw std::invalid_argument("mape: surfaces are sampled on different lattices");

  MapeResult r;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < reference.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < reference.values.cols(); ++j) {
      const double ref = reference.values(i, j);
      if (std::abs(ref) < floor) {
        ++r.excluded;
        continue;
      }
      sum += std::abs(ref - approx.values(i, j)) / std::abs(ref);
      ++r.included;
    }
  }
  if (r.included == 0) throw UndefinedMetric("mape: every reference point is below the floor");
  r.percent = 100.0 * sum / static_cast<double>(r.included);
  return r;
}

}  // namespace fsurf

#endif  // FSURF_ORACLES_HPP
