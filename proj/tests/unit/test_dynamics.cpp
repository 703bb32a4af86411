#include "fsurf/dynamics.hpp"
#include "fsurf/oracles.hpp"
#include "fsurf/verification.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using fsurf::CoefficientGrid;
using fsurf::FlowContext;
using fsurf::GameParams;
using fsurf::Matrix;

namespace {

CoefficientGrid constant(double c, int M = 2, int N = 2) {
  Matrix a = Matrix::Zero(M + 1, N + 1);
  a(0, 0) = c;
  return {a, 4.0, 1.0};
}

}  // namespace

TEST(EvalV, UncontrolledDecay) {
  const FlowContext ctx(constant(0.0), {0.5, 0.25}, 0.5);
  EXPECT_DOUBLE_EQ(fsurf::eval_V(ctx, 4.0), -1.0);
}

TEST(EvalV, BalancedControlCancels) {
  const FlowContext ctx(constant(0.5), {0.5, 0.25}, 0.3);
  for (double t : {0.0, 1.0, 2.5, 4.0}) EXPECT_NEAR(fsurf::eval_V(ctx, t), 0.0, 1e-15);
}

TEST(EvalV, ZeroAtTimeZeroForCosineBasis) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    const FlowContext ctx(fsurf::random_grid(rng, 3, 3, 3.0, 4.0, 1.0), {1.3, -0.7}, 0.42);
    EXPECT_EQ(fsurf::eval_V(ctx, 0.0), 0.0);
  }
}

TEST(EvalK, ClosedForm) {
  EXPECT_DOUBLE_EQ(fsurf::eval_K(FlowContext(constant(0.7), {0.5, 0.25}, 0.5)), 1.0);
  EXPECT_DOUBLE_EQ(fsurf::eval_K(FlowContext(constant(0.7), {0.5, 0.25}, 0.2)), 4.0);
}

TEST(EvalK, BoundaryStatesAreDegenerate) {
  EXPECT_THROW(FlowContext(constant(0.0), {0.5, 0.25}, 0.0), fsurf::DegenerateInitialCondition);
  EXPECT_THROW(FlowContext(constant(0.0), {0.5, 0.25}, 1.0), fsurf::DegenerateInitialCondition);
  EXPECT_THROW(FlowContext(constant(0.0), {0.5, 0.25}, -0.1), fsurf::DegenerateInitialCondition);
}

TEST(EvalPhi, UncontrolledLogisticDecay) {
  const FlowContext ctx(constant(0.0), {0.5, 0.25}, 0.5);
  EXPECT_NEAR(fsurf::eval_phi(ctx, 4.0), 1.0 / (1.0 + std::exp(1.0)), 1e-15);
  EXPECT_NEAR(fsurf::eval_phi(ctx, 4.0), 0.268941, 1e-6);
}

TEST(EvalPhi, ZeroRateHoldsInitialState) {
  const FlowContext ctx(constant(0.5), {0.5, 0.25}, 0.37);
  for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(fsurf::eval_phi(ctx, t), 0.37, 1e-15);
}

TEST(EvalPhi, FixedRateMatchesTextbookLogistic) {
  for (double c : {-1.0, 0.0, 0.3, 2.0}) {
    const GameParams game{0.8, 0.25};
    const double x0 = 0.2;
    const FlowContext ctx(constant(c), game, x0);
    const double r = game.beta * c - game.xi;
    for (double t : {0.5, 2.0, 4.0}) {
      const double e = std::exp(r * t);
      EXPECT_NEAR(fsurf::eval_phi(ctx, t), x0 * e / (1.0 - x0 + x0 * e), 1e-14);
    }
  }
}

TEST(EvalPhi, MatchesRungeKuttaIntegration) {
  std::mt19937_64 rng(99);
  const GameParams game{0.5, 0.25};
  const auto grid = fsurf::random_grid(rng, 3, 3, 1.0, 4.0, 1.0);
  const FlowContext ctx(grid, game, 0.3);
  const auto traj = fsurf::integrate_ode(game, [&](double t) { return fsurf::eval_u(grid, t, 0.3); }, 0.3, 1e-3, 4.0);
  double sup = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    sup = std::max(sup, std::abs(fsurf::eval_phi(ctx, traj.times[i]) - traj.states[i]));
  EXPECT_LE(sup, 1e-5);
}

TEST(EvalPhi, SimplexInvarianceAndInitialCondition) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> state(0.01, 0.99), param(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const auto grid = fsurf::random_grid(rng, k % 4, (k / 4) % 4, 0.5, 4.0, 1.0);
    const FlowContext ctx(grid, {param(rng), param(rng)}, state(rng));
    EXPECT_NEAR(fsurf::eval_phi(ctx, 0.0), ctx.x0(), 1e-12);
    for (double t = 0.0; t <= 4.0; t += 0.25) {
      const double phi = fsurf::eval_phi(ctx, t);
      EXPECT_GT(phi, 0.0);
      EXPECT_LT(phi, 1.0);
    }
  }
}

TEST(EvalPhi, RunawayCoefficientsStayFinite) {
  const FlowContext up(constant(1e6), {1.0, 0.0}, 0.5);
  const FlowContext down(constant(-1e6), {1.0, 0.0}, 0.5);
  EXPECT_TRUE(std::isfinite(fsurf::eval_phi(up, 4.0)));
  EXPECT_TRUE(std::isfinite(fsurf::eval_phi(down, 4.0)));
  EXPECT_TRUE(std::isfinite(fsurf::dphi_dV(up, 4.0)));
  EXPECT_TRUE(std::isfinite(fsurf::dphi_da(down, 1, 1, 4.0)));
  EXPECT_GE(fsurf::eval_phi(down, 4.0), 0.0);
  EXPECT_LE(fsurf::eval_phi(up, 4.0), 1.0);
}

TEST(DphiDV, SymmetricPointIsQuarter) {
  const FlowContext ctx(constant(0.0), {0.5, 0.0}, 0.5);
  EXPECT_DOUBLE_EQ(fsurf::dphi_dV(ctx, 2.0), 0.25);
}

TEST(DphiDV, EqualsLogisticIdentityAndFiniteDifference) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> state(0.05, 0.95);
  const double h = 1e-6;
  for (int k = 0; k < 30; ++k) {
    const auto grid = fsurf::random_grid(rng, 2, 2, 1.0, 4.0, 1.0);
    const GameParams game{0.5, 0.25};
    const FlowContext ctx(grid, game, state(rng));
    for (double t : {0.5, 1.7, 3.9}) {
      const double phi = fsurf::eval_phi(ctx, t);
      const double slope = fsurf::dphi_dV(ctx, t);
      EXPECT_NEAR(slope, phi * (1.0 - phi), 1e-12);
      EXPECT_GT(slope, 0.0);
      EXPECT_LE(slope, 0.25);
      // Shifting xi by -h/t adds exactly h to V(t) and leaves K unchanged.
      const FlowContext plus(grid, {game.beta, game.xi - h / t}, ctx.x0());
      const FlowContext minus(grid, {game.beta, game.xi + h / t}, ctx.x0());
      EXPECT_NEAR((fsurf::eval_phi(plus, t) - fsurf::eval_phi(minus, t)) / (2 * h), slope, 1e-7);
    }
  }
}

TEST(DphiDa, ClosedFormCases) {
  const FlowContext ctx(constant(0.0), {0.5, 0.0}, 0.5);
  EXPECT_DOUBLE_EQ(fsurf::dphi_da(ctx, 0, 0, 2.0), 0.25);

  std::mt19937_64 rng(3);
  const FlowContext decoupled(fsurf::random_grid(rng, 2, 2, 1.0, 4.0, 1.0), {0.0, 0.3}, 0.4);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(fsurf::dphi_da(decoupled, m, n, 1.3), 0.0);
  EXPECT_THROW((void)fsurf::dphi_da(ctx, 3, 0, 1.0), std::out_of_range);
}

TEST(DphiDa, MatchesFiniteDifferences) {
  std::mt19937_64 rng(77);
  const double h = 1e-6;
  for (int k = 0; k < 10; ++k) {
    const auto grid = fsurf::random_grid(rng, 3, 3, 1.0, 4.0, 1.0);
    const GameParams game{0.5, 0.25};
    const double x0 = 0.15 + 0.07 * k;
    const FlowContext ctx(grid, game, x0);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        Matrix up = grid.coeffs(), down = grid.coeffs();
        up(m, n) += h;
        down(m, n) -= h;
        const double t = 2.6;
        const double fd = (fsurf::eval_phi(FlowContext(grid.with_coeffs(up), game, x0), t) -
                           fsurf::eval_phi(FlowContext(grid.with_coeffs(down), game, x0), t)) /
                          (2 * h);
        EXPECT_NEAR(fsurf::dphi_da(ctx, m, n, t), fd, 1e-7);
      }
  }
}

TEST(SeparableDynamics, PotentialRoundTrip) {
  const fsurf::LogisticDynamics logistic;
  const fsurf::LinearDynamics linear;
  for (double x : {1e-6, 0.01, 0.3, 0.5, 0.77, 0.999}) {
    EXPECT_NEAR(logistic.inverse_potential(logistic.potential(x)), x, 1e-12);
    EXPECT_EQ(linear.inverse_potential(linear.potential(x)), x);
  }
  EXPECT_FALSE(logistic.in_domain(0.0));
  EXPECT_FALSE(logistic.in_domain(1.0));
}

TEST(GeneralizedFlow, LogisticInstanceReproducesClosedForm) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> state(0.02, 0.98), param(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const auto grid = fsurf::random_grid(rng, 3, 3, 1.0, 4.0, 1.0);
    const GameParams game{param(rng), param(rng)};
    const double x0 = state(rng);
    const FlowContext ctx(grid, game, x0);
    for (double t : {0.0, 0.9, 2.0, 4.0})
      EXPECT_NEAR(fsurf::generalized_flow(fsurf::LogisticDynamics{}, game, grid, x0, t), fsurf::eval_phi(ctx, t), 1e-12);
  }
}

TEST(GeneralizedFlow, LinearInstance) {
  const GameParams game{0.5, 0.25};
  const fsurf::LinearDynamics linear;
  for (double t : {0.0, 1.0, 3.5}) {
    EXPECT_NEAR(fsurf::generalized_flow(linear, game, constant(0.0), 0.4, t), 0.4 - 0.25 * t, 1e-14);
    EXPECT_NEAR(fsurf::generalized_flow(linear, game, constant(1.5), 0.4, t), 0.4 + (0.5 * 1.5 - 0.25) * t, 1e-14);
  }
}

TEST(GeneralizedFlow, RejectsStateOutsideDomain) {
  EXPECT_THROW((void)fsurf::generalized_flow(fsurf::LogisticDynamics{}, {0.5, 0.25}, constant(0.0), 1.0, 1.0),
               fsurf::DegenerateInitialCondition);
}
