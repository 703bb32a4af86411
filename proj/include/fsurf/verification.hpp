#ifndef FSURF_VERIFICATION_HPP
#define FSURF_VERIFICATION_HPP

// Randomized cross-checks of the closed-form path against the oracles.

#include "fsurf/cost_gradient.hpp"
#include "fsurf/dynamics.hpp"
#include "fsurf/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace fsurf {

struct RandomInstance {
  CoefficientGrid grid;
  GameParams game;
  CostParams cost;
  TrainingSet train;
};

struct InstanceRanges {
  int max_order = 3;
  int max_training = 5;
  double coeff_bound = 1.0;
  double param_bound = 2.0;
  double horizon = 4.0;
  double domain_length = 1.0;
};

inline CoefficientGrid random_grid(std::mt19937_64& rng, int M, int N, double bound, double horizon,
                                   double domain_length) {
  std::uniform_real_distribution<double> coeff(-bound, bound);
  Matrix a(M + 1, N + 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = coeff(rng);
  return {std::move(a), horizon, domain_length};
}

/// beta, xi, k1, R in [-b, b]; k2 in (0, b]; 1..max_training distinct x0 in (0.02, 0.98).
inline RandomInstance random_instance(std::mt19937_64& rng, const InstanceRanges& ranges = {}) {
  std::uniform_int_distribution<int> order(0, ranges.max_order);
  std::uniform_int_distribution<int> count(1, ranges.max_training);
  std::uniform_real_distribution<double> param(-ranges.param_bound, ranges.param_bound);
  std::uniform_real_distribution<double> positive(0.0, ranges.param_bound);
  std::uniform_real_distribution<double> state(0.02, 0.98);

  const int M = order(rng);
  const int N = order(rng);
  auto grid = random_grid(rng, M, N, ranges.coeff_bound, ranges.horizon, ranges.domain_length);
  GameParams game{param(rng), param(rng)};
  double k2 = 0.0;
  while (!(k2 > 1e-3)) k2 = positive(rng);
  CostParams cost{param(rng), param(rng), k2};

  const int size = count(rng);
  std::vector<double> x0;
  while (static_cast<int>(x0.size()) < size) {
    const double x = state(rng);
    if (std::none_of(x0.begin(), x0.end(), [x](double y) { return std::abs(x - y) < 1e-3; })) x0.push_back(x);
  }
  std::sort(x0.begin(), x0.end());
  return {std::move(grid), game, cost, TrainingSet(std::move(x0))};
}

/// max_mn |g - fd| / |fd|, entries where both sides are below abs_floor
/// count as agreeing.
inline double max_relative_error(const Matrix& g, const Matrix& fd, double abs_floor = 0.0) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double a = g.data()[i];
    const double b = fd.data()[i];
    const double diff = std::abs(a - b);
    if (std::abs(a) <= abs_floor && std::abs(b) <= abs_floor) continue;
    worst = std::max(worst, diff / std::max(std::abs(b), abs_floor));
  }
  return worst;
}

/// Relative error of grad_j against central differences of j_total.
inline double gradient_check(const RandomInstance& inst, const QuadratureRule& quad, double h = 1e-6) {
  const Objective objective(inst.grid, inst.game, inst.cost, inst.train, quad);
  return max_relative_error(objective.gradient(inst.grid), fd_gradient(objective, inst.grid, h));
}

/// sup over the integrator grid of |phi - RK4 solution|, for every x0 in train.
inline double flow_check(const CoefficientGrid& grid, const GameParams& game, const TrainingSet& train,
                         double step = 1e-3) {
  double worst = 0.0;
  for (double x0 : train.values()) {
    const FlowContext ctx(grid, game, x0);
    const auto traj = integrate_ode(
        game, [&](double t) { return eval_u(grid, t, x0); }, x0, step, grid.horizon());
    for (std::size_t i = 0; i < traj.times.size(); ++i)
      worst = std::max(worst, std::abs(eval_phi(ctx, traj.times[i]) - traj.states[i]));
  }
  return worst;
}

}  // namespace fsurf

#endif  // FSURF_VERIFICATION_HPP
