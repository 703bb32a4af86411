#ifndef FSURF_OPTIMIZER_HPP
#define FSURF_OPTIMIZER_HPP

#include "fsurf/cost_gradient.hpp"
#include "fsurf/fourier_surface.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <concepts>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

namespace fsurf {

/// a <- a - lr * grad, lr constant.
struct FixedStep {};

/// Armijo backtracking starting from the configured learning rate each
/// iteration: accept s once J(a - s g) <= J(a) - c s |g|_2^2, else s *= shrink.
struct Backtracking {
  double armijo_c = 1e-4;
  double shrink = 0.5;
  int max_shrinks = 60;
};

using StepRule = std::variant<FixedStep, Backtracking>;

struct DescentConfig {
  double learning_rate = 1.0;
  double grad_tolerance = 1e-4;
  int max_iterations = 50'000;
  StepRule step_rule = Backtracking{};
  /// Fixed-rate mode aborts once J rises above J0 + factor * max(|J0|, 1).
  double divergence_factor = 1e6;

  void validate() const {
    if (!(learning_rate > 0.0)) throw std::invalid_argument("DescentConfig: learning_rate must be > 0");
    if (!(grad_tolerance > 0.0)) throw std::invalid_argument("DescentConfig: grad_tolerance must be > 0");
    if (max_iterations < 1) throw std::invalid_argument("DescentConfig: max_iterations must be >= 1");
    if (const auto* bt = std::get_if<Backtracking>(&step_rule)) {
      if (!(bt->armijo_c > 0.0 && bt->armijo_c < 1.0))
        throw std::invalid_argument("DescentConfig: armijo_c must be in (0, 1)");
      if (!(bt->shrink > 0.0 && bt->shrink < 1.0))
        throw std::invalid_argument("DescentConfig: shrink must be in (0, 1)");
    }
  }
};

struct FitReport {
  CoefficientGrid final_coeffs;
  int iterations = 0;
  /// Entry k is J(a^k); entry 0 is the initial grid.
  std::vector<double> objective_history;
  std::vector<double> grad_norm_history;
  /// Step taken from a^k to a^{k+1}.
  std::vector<double> step_history;
  bool converged = false;
  /// Backtracking could not find an Armijo step.
  bool stalled = false;
  double wall_time = 0.0;
};

/// The objective or gradient stopped being finite, or fixed-rate descent blew up.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(const std::string& what, CoefficientGrid last_finite, int iteration)
      : std::runtime_error(what), last_finite_(std::move(last_finite)), iteration_(iteration) {}

  [[nodiscard]] const CoefficientGrid& last_finite() const { return last_finite_; }
  [[nodiscard]] int iteration() const { return iteration_; }

 private:
  CoefficientGrid last_finite_;
  int iteration_;
};

/// Max-absolute-entry norm.
inline double gradient_norm(const Matrix& g) {
  return g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
}

/// Objective source for minimize(): (grid) -> J.
template <class F>
concept ValueOracle = requires(const F& f, const CoefficientGrid& grid) {
  { f(grid) } -> std::convertible_to<double>;
};

/// Gradient source for minimize(): (grid, out) -> J, writing dJ/da into out.
template <class G>
concept GradientOracle = requires(const G& g, const CoefficientGrid& grid, Matrix& out) {
  { g(grid, out) } -> std::convertible_to<double>;
};

/// Gradient descent over the coefficient space, stopping once the gradient's
/// max-abs entry drops below the tolerance. Rejected backtracking trials
/// only call value_fn.
template <ValueOracle F, GradientOracle G>
FitReport minimize(const CoefficientGrid& initial, const DescentConfig& config,
                   const F& value_fn, const G& value_and_gradient) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  FitReport report{initial, 0, {}, {}, {}, false, false, 0.0};
  CoefficientGrid current = initial;
  Matrix grad;
  double value = value_and_gradient(current, grad);
  if (!std::isfinite(value) || !grad.allFinite())
    throw DivergedError("objective or gradient not finite at the initial grid", current, 0);
  const double initial_value = value;

  auto finish = [&] {
    report.final_coeffs = current;
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  for (;;) {
    const double norm = gradient_norm(grad);
    report.objective_history.push_back(value);
    report.grad_norm_history.push_back(norm);
    if (norm < config.grad_tolerance) {
      report.converged = true;
      return finish();
    }
    if (report.iterations >= config.max_iterations) return finish();

    double step = config.learning_rate;
    Matrix trial_grad;
    double trial_value = 0.0;
    std::optional<CoefficientGrid> trial;

    if (const auto* bt = std::get_if<Backtracking>(&config.step_rule)) {
      const double slope = grad.squaredNorm();
      bool accepted = false;
      for (int k = 0; k <= bt->max_shrinks; ++k, step *= bt->shrink) {
        const Matrix next = current.coeffs() - step * grad;
        if (!next.allFinite()) continue;
        trial.emplace(current.with_coeffs(next));
        trial_value = value_fn(*trial);
        if (std::isfinite(trial_value) && trial_value <= value - bt->armijo_c * step * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        report.stalled = true;
        return finish();
      }
      trial_value = value_and_gradient(*trial, trial_grad);
    } else {
      const Matrix next = current.coeffs() - step * grad;
      if (!next.allFinite())
        throw DivergedError("coefficients left the finite range", current, report.iterations);
      trial.emplace(current.with_coeffs(next));
      trial_value = value_and_gradient(*trial, trial_grad);
      if (std::isfinite(trial_value) &&
          trial_value - initial_value > config.divergence_factor * std::max(std::abs(initial_value), 1.0))
        throw DivergedError("objective grew past the divergence threshold", current,
                            report.iterations);
    }
    if (!std::isfinite(trial_value) || !trial_grad.allFinite())
      throw DivergedError("objective or gradient not finite", current, report.iterations);

    report.step_history.push_back(step);
    current = *trial;
    value = trial_value;
    grad = std::move(trial_grad);
    ++report.iterations;
  }
}

/// minimize() with the analytic gradient.
inline FitReport minimize(const CoefficientGrid& initial, const Objective& objective,
                          const DescentConfig& config) {
  return minimize(
      initial, config, [&objective](const CoefficientGrid& g) { return objective.value(g); },
      [&objective](const CoefficientGrid& g, Matrix& out) {
        return objective.value_and_gradient(g, out);
      });
}

inline FitReport minimize(const CoefficientGrid& initial, const GameParams& game,
                          const CostParams& cost, const TrainingSet& train,
                          const QuadratureRule& quad, const DescentConfig& config) {
  const Objective objective(initial, game, cost, train, quad);
  return minimize(initial, objective, config);
}

/// Per-iteration CSV: iteration,objective,grad_norm,step (step empty on the last row).
inline void write_trace_csv(std::ostream& os, const FitReport& report) {
  os << "iteration,objective,grad_norm,step\n" << std::setprecision(17);
  for (std::size_t k = 0; k < report.objective_history.size(); ++k) {
    os << k << ',' << report.objective_history[k] << ',' << report.grad_norm_history[k] << ',';
    if (k < report.step_history.size()) os << report.step_history[k];
    os << '\n';
  }
}

}  // namespace fsurf

#endif  // FSURF_OPTIMIZER_HPP
