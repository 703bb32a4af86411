#ifndef FSURF_COST_GRADIENT_HPP
#define FSURF_COST_GRADIENT_HPP

#include "fsurf/dynamics.hpp"
#include "fsurf/fourier_surface.hpp"
#include "fsurf/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <concepts>
#include <iostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fsurf {

/// Running cost f(x, u) = (k1 / 2) x^2 + R x u + (k2 / 2) u^2.
struct CostParams {
  double k1 = 0.0;
  double R = 0.0;
  double k2 = 1.0;

  void validate() const {
    if (!std::isfinite(k1) || !std::isfinite(R) || !std::isfinite(k2))
      throw std::invalid_argument("CostParams: k1, R and k2 must be finite");
  }
  /// The control penalty only bounds the problem when k2 > 0.
  [[nodiscard]] bool coercive() const { return k2 > 0.0; }
};

/// Initial conditions X0 the surface is fitted on: non-empty, strictly
/// increasing, each inside (0, 1).
class TrainingSet {
 public:
  explicit TrainingSet(std::vector<double> x0_values) : values_(std::move(x0_values)) {
    if (values_.empty()) throw std::invalid_argument("TrainingSet: empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      detail::check_interior(values_[i]);
      if (i > 0 && !(values_[i] > values_[i - 1]))
        throw std::invalid_argument("TrainingSet: x0 values must be strictly increasing");
    }
  }

  /// {start, start + step, ...} up to stop inclusive, snapped to 12 decimals
  /// so 0.05 + 18 * 0.05 reads back as 0.95.
  static TrainingSet lattice(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("TrainingSet: step must be positive");
    const auto count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> v;
    for (int i = 0; i < count; ++i) v.push_back(std::round((start + i * step) * 1e12) / 1e12);
    return TrainingSet(std::move(v));
  }

  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Summed objective J(a) over a training set and its exact gradient, with
/// the basis tabulated once on the quadrature lattice. The gradient
/// differentiates the discretized objective, so it matches finite
/// differences of value() up to rounding.
class Objective {
 public:
  Objective(int M, int N, double horizon, double domain_length, GameParams game, CostParams cost,
            TrainingSet train, QuadratureRule quad)
      : game_(game), cost_(cost), train_(std::move(train)), quad_(quad),
        times_(quad_.nodes(horizon)), weights_(quad_.weights(horizon)),
        basis_(M, N, horizon, domain_length, times_, train_.values()) {
    game_.validate();
    cost_.validate();
    if (!cost_.coercive())
      std::clog << "warning: k2 = " << cost_.k2 << " <= 0, control penalty is not coercive\n";
    log_odds_.reserve(train_.size());
    for (double x0 : train_.values()) log_odds_.push_back(std::log((1.0 - x0) / x0));
  }

  Objective(const CoefficientGrid& shape, GameParams game, CostParams cost, TrainingSet train,
            QuadratureRule quad)
      : Objective(shape.M(), shape.N(), shape.horizon(), shape.domain_length(), game, cost,
                  std::move(train), quad) {}

  [[nodiscard]] double value(const CoefficientGrid& grid) const {
    check(grid);
    double total = 0.0;
    for (std::size_t j = 0; j < train_.size(); ++j) total += accumulate(grid, j, nullptr);
    return total;
  }

  /// J(x0_j; a) for one training point.
  [[nodiscard]] double value_single(const CoefficientGrid& grid, std::size_t j) const {
    check(grid);
    if (j >= train_.size()) throw std::out_of_range("Objective: training index out of range");
    return accumulate(grid, j, nullptr);
  }

  [[nodiscard]] Matrix gradient(const CoefficientGrid& grid) const {
    Matrix g;
    value_and_gradient(grid, g);
    return g;
  }

  double value_and_gradient(const CoefficientGrid& grid, Matrix& grad) const {
    check(grid);
    grad = Matrix::Zero(grid.M() + 1, grid.N() + 1);
    double total = 0.0;
    for (std::size_t j = 0; j < train_.size(); ++j) total += accumulate(grid, j, &grad);
    return total;
  }

  [[nodiscard]] const GameParams& game() const { return game_; }
  [[nodiscard]] const CostParams& cost() const { return cost_; }
  [[nodiscard]] const TrainingSet& training() const { return train_; }
  [[nodiscard]] const QuadratureRule& quadrature() const { return quad_; }
  [[nodiscard]] const BasisTable& basis() const { return basis_; }

 private:
  void check(const CoefficientGrid& grid) const {
    if (!basis_.matches(grid))
      throw std::invalid_argument("Objective: grid shape differs from the tabulated basis");
  }

  double accumulate(const CoefficientGrid& grid, std::size_t j, Matrix* grad) const {
    const auto col = static_cast<Eigen::Index>(j);
    const Eigen::VectorXd modes = basis_.mode_weights(grid, col);
    const Eigen::VectorXd u = basis_.time_cos().transpose() * modes;
    const Eigen::VectorXd U = basis_.time_integral().transpose() * modes;

    const double beta = game_.beta;
    const double log_k = log_odds_[j] + detail::clamp_potential(beta * U(0) - game_.xi * times_[0]);

    const auto n_t = static_cast<Eigen::Index>(times_.size());
    Eigen::VectorXd state_w;
    Eigen::VectorXd control_w;
    if (grad) {
      state_w.resize(n_t);
      control_w.resize(n_t);
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n_t; ++i) {
      const double w = weights_[static_cast<std::size_t>(i)];
      const double v = beta * U(i) - game_.xi * times_[static_cast<std::size_t>(i)];
      const double phi = detail::logistic_flow(v, log_k);
      const double ui = u(i);
      sum += w * (0.5 * cost_.k1 * phi * phi + cost_.R * phi * ui + 0.5 * cost_.k2 * ui * ui);
      if (grad) {
        state_w(i) = w * (cost_.k1 * phi + cost_.R * ui) * detail::logistic_slope(v, log_k) * beta;
        control_w(i) = w * (cost_.R * phi + cost_.k2 * ui);
      }
    }
    if (grad) {
      const Eigen::VectorXd per_mode =
          basis_.time_integral() * state_w + basis_.time_cos() * control_w;
      grad->noalias() += per_mode * basis_.state_cos().col(col).transpose();
    }
    return sum;
  }

  GameParams game_;
  CostParams cost_;
  TrainingSet train_;
  QuadratureRule quad_;
  std::vector<double> times_;
  std::vector<double> weights_;
  BasisTable basis_;
  std::vector<double> log_odds_;
};

/// Per-x0 objective along the closed-form flow.
inline double j_single(const CoefficientGrid& grid, const GameParams& game, const CostParams& cost,
                       double x0, const QuadratureRule& quad) {
  return Objective(grid, game, cost, TrainingSet({x0}), quad).value(grid);
}

/// Sum of j_single over the training set.
inline double j_total(const CoefficientGrid& grid, const GameParams& game, const CostParams& cost,
                      const TrainingSet& train, const QuadratureRule& quad) {
  return Objective(grid, game, cost, train, quad).value(grid);
}

/// Exact gradient of j_total, same shape as grid.coeffs().
inline Matrix grad_j(const CoefficientGrid& grid, const GameParams& game, const CostParams& cost,
                     const TrainingSet& train, const QuadratureRule& quad) {
  return Objective(grid, game, cost, train, quad).gradient(grid);
}

// ---------------------------------------------------------------------------
// Generic path: any separable dynamics and any running cost with analytic
// partials in x and u.

template <class F>
concept DifferentiableRunningCost = requires(const F& f, double x, double u) {
  { f.value(x, u) } -> std::convertible_to<double>;
  { f.d_state(x, u) } -> std::convertible_to<double>;
  { f.d_control(x, u) } -> std::convertible_to<double>;
};

struct QuadraticCost {
  CostParams params;

  [[nodiscard]] double value(double x, double u) const {
    return 0.5 * params.k1 * x * x + params.R * x * u + 0.5 * params.k2 * u * u;
  }
  [[nodiscard]] double d_state(double x, double u) const { return params.k1 * x + params.R * u; }
  [[nodiscard]] double d_control(double x, double u) const { return params.R * x + params.k2 * u; }
};

template <SeparableDynamics D, DifferentiableRunningCost F>
double j_total_generalized(const D& dyn, const GameParams& game, const CoefficientGrid& grid,
                           const F& running_cost, const TrainingSet& train,
                           const QuadratureRule& quad) {
  const auto times = quad.nodes(grid.horizon());
  const auto weights = quad.weights(grid.horizon());
  double total = 0.0;
  for (double x0 : train.values())
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double x = generalized_flow(dyn, game, grid, x0, times[i]);
      total += weights[i] * running_cost.value(x, eval_u(grid, times[i], x0));
    }
  return total;
}

/// dJ/da(m, n) = sum_x0 integral [ df/dx dx/da + df/du du/da ] dt.
template <SeparableDynamics D, DifferentiableRunningCost F>
Matrix grad_j_generalized(const D& dyn, const GameParams& game, const CoefficientGrid& grid,
                          const F& running_cost, const TrainingSet& train,
                          const QuadratureRule& quad) {
  const auto times = quad.nodes(grid.horizon());
  const auto weights = quad.weights(grid.horizon());
  Matrix g = Matrix::Zero(grid.M() + 1, grid.N() + 1);
  for (double x0 : train.values()) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double t = times[i];
      const double x = generalized_flow(dyn, game, grid, x0, t);
      const double u = eval_u(grid, t, x0);
      const double fx = running_cost.d_state(x, u);
      const double fu = running_cost.d_control(x, u);
      for (int m = 0; m <= grid.M(); ++m)
        for (int n = 0; n <= grid.N(); ++n)
          g(m, n) += weights[i] * (fx * generalized_state_sensitivity(dyn, game, grid, x0, m, n, t) +
                                   fu * du_da(grid, m, n, t, x0));
    }
  }
  return g;
}

}  // namespace fsurf

#endif  // FSURF_COST_GRADIENT_HPP
