#include "fsurf/optimizer.hpp"
#include "fsurf/oracles.hpp"
#include "fsurf/verification.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using fsurf::CoefficientGrid;
using fsurf::CostParams;
using fsurf::DescentConfig;
using fsurf::GameParams;
using fsurf::Matrix;
using fsurf::QuadratureRule;
using fsurf::TrainingSet;

namespace {

const QuadratureRule kSimpson{};
const TrainingSet kLattice = TrainingSet::lattice(0.05, 0.95, 0.05);

DescentConfig fixed(double lr, int max_iterations = 5000) {
  DescentConfig c;
  c.learning_rate = lr;
  c.max_iterations = max_iterations;
  c.step_rule = fsurf::FixedStep{};
  return c;
}

}  // namespace

TEST(GradientNorm, MaxAbsEntry) {
  Matrix g(2, 2);
  g << 0.5, -3.0, 1.0, 2.0;
  EXPECT_EQ(fsurf::gradient_norm(g), 3.0);
  EXPECT_EQ(fsurf::gradient_norm(Matrix::Zero(3, 1)), 0.0);
}

TEST(DescentConfig, Validation) {
  DescentConfig c;
  EXPECT_NO_THROW(c.validate());
  c.learning_rate = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.grad_tolerance = -1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.max_iterations = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.step_rule = fsurf::Backtracking{1.5, 0.5, 60};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.step_rule = fsurf::Backtracking{1e-4, 1.0, 60};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Minimize, PurePenaltyDrivesCoefficientsToZero) {
  std::mt19937_64 rng(1);
  for (auto rule : {fsurf::StepRule{fsurf::Backtracking{}}, fsurf::StepRule{fsurf::FixedStep{}}}) {
    const auto start = fsurf::random_grid(rng, 3, 3, 1.0, 4.0, 1.0);
    DescentConfig config;
    config.step_rule = rule;
    config.learning_rate = std::holds_alternative<fsurf::FixedStep>(rule) ? 0.01 : 1.0;
    const auto report = fsurf::minimize(start, {0.5, 0.25}, {0.0, 0.0, 1.0}, kLattice, kSimpson, config);
    EXPECT_TRUE(report.converged);
    EXPECT_LE(report.final_coeffs.coeffs().cwiseAbs().maxCoeff(), 1e-3);
  }
}

TEST(Minimize, DecoupledDynamicsMatchesLeastSquares) {
  // beta = xi = 0 freezes x at x0, so the optimum fits u = -R x0 / k2 with the
  // time-constant modes only.
  const double R = -2.0;
  const double k2 = 2.0;
  const int N = 3;
  DescentConfig config;
  config.grad_tolerance = 1e-6;
  const auto report = fsurf::minimize(CoefficientGrid::zeros(2, N, 4.0, 1.0), {0.0, 0.0}, {0.5, R, k2}, kLattice,
                                      kSimpson, config);
  ASSERT_TRUE(report.converged);

  const auto x = kLattice.values();
  Eigen::MatrixXd A(static_cast<Eigen::Index>(x.size()), N + 1);
  Eigen::VectorXd b(static_cast<Eigen::Index>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (int n = 0; n <= N; ++n) A(static_cast<Eigen::Index>(j), n) = std::cos(n * std::numbers::pi * x[j]);
    b(static_cast<Eigen::Index>(j)) = -R * x[j] / k2;
  }
  const Eigen::VectorXd expected = A.colPivHouseholderQr().solve(b);
  const Matrix& a = report.final_coeffs.coeffs();
  for (int n = 0; n <= N; ++n) EXPECT_NEAR(a(0, n), expected(n), 1e-6);
  for (int m = 1; m <= 2; ++m)
    for (int n = 0; n <= N; ++n) EXPECT_NEAR(a(m, n), 0.0, 1e-6);
}

TEST(Minimize, FirstOrderGridMatchesGridSearch) {
  const GameParams game{0.5, 0.25};
  const CostParams cost{0.0, -2.0, 2.0};
  const auto shape = CoefficientGrid::zeros(1, 1, 4.0, 1.0);
  const fsurf::Objective objective(shape, game, cost, kLattice, kSimpson);
  const auto report = fsurf::minimize(shape, objective, DescentConfig{});
  ASSERT_TRUE(report.converged);

  std::array<double, 4> best{0.0, 0.0, 0.0, 0.0};
  double best_value = objective.value(shape);
  double spacing = 0.5;
  for (int level = 0; level < 7; ++level) {
    const auto centre = best;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j)
        for (int k = -4; k <= 4; ++k)
          for (int l = -4; l <= 4; ++l) {
            Matrix a(2, 2);
            a << centre[0] + i * spacing, centre[1] + j * spacing, centre[2] + k * spacing, centre[3] + l * spacing;
            const double v = objective.value(shape.with_coeffs(a));
            if (v < best_value) {
              best_value = v;
              best = {a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
            }
          }
    spacing /= 4.0;
  }
  const Matrix& a = report.final_coeffs.coeffs();
  EXPECT_NEAR(a(0, 0), best[0], 1e-3);
  EXPECT_NEAR(a(0, 1), best[1], 1e-3);
  EXPECT_NEAR(a(1, 0), best[2], 1e-3);
  EXPECT_NEAR(a(1, 1), best[3], 1e-3);
  EXPECT_LE(report.objective_history.back(), best_value + 1e-9);
}

TEST(Minimize, BacktrackingHistoryIsNonIncreasing) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    auto inst = fsurf::random_instance(rng);
    inst.cost.k2 = std::max(inst.cost.k2, 0.5);
    DescentConfig config;
    config.max_iterations = 300;
    const auto report = fsurf::minimize(inst.grid, inst.game, inst.cost, inst.train, kSimpson, config);
    for (std::size_t i = 1; i < report.objective_history.size(); ++i)
      EXPECT_LE(report.objective_history[i], report.objective_history[i - 1]);
    EXPECT_EQ(report.objective_history.size(), report.grad_norm_history.size());
    EXPECT_EQ(report.step_history.size(), static_cast<std::size_t>(report.iterations));
  }
}

TEST(Minimize, DeterministicAcrossRuns) {
  const auto shape = CoefficientGrid::zeros(3, 3, 4.0, 1.0);
  const CostParams cost{0.0, -2.0, 2.0};
  const auto a = fsurf::minimize(shape, {0.5, 0.25}, cost, kLattice, kSimpson, fixed(0.01, 200));
  const auto b = fsurf::minimize(shape, {0.5, 0.25}, cost, kLattice, kSimpson, fixed(0.01, 200));
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.objective_history, b.objective_history);
  EXPECT_EQ((a.final_coeffs.coeffs() - b.final_coeffs.coeffs()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Minimize, ConvergedPointIsStationaryUnderFiniteDifferences) {
  const GameParams game{0.5, 0.25};
  const CostParams cost{0.0, -2.0, 2.0};
  const auto shape = CoefficientGrid::zeros(3, 3, 4.0, 1.0);
  const fsurf::Objective objective(shape, game, cost, kLattice, kSimpson);
  const DescentConfig config;
  const auto report = fsurf::minimize(shape, objective, config);
  ASSERT_TRUE(report.converged);
  EXPECT_LT(report.grad_norm_history.back(), config.grad_tolerance);
  EXPECT_LT(fsurf::gradient_norm(fsurf::fd_gradient(objective, report.final_coeffs, 1e-6)),
            10 * config.grad_tolerance);
}

TEST(Minimize, IterationCapReportsUnconverged) {
  const auto report = fsurf::minimize(CoefficientGrid::zeros(2, 2, 4.0, 1.0), {0.5, 0.25}, {0.0, -2.0, 2.0},
                                      kLattice, kSimpson, fixed(1e-4, 3));
  EXPECT_FALSE(report.converged);
  EXPECT_EQ(report.iterations, 3);
  EXPECT_EQ(report.objective_history.size(), 4u);
}

TEST(Minimize, FixedRateDivergenceIsReported) {
  try {
    (void)fsurf::minimize(CoefficientGrid::zeros(2, 2, 4.0, 1.0), {0.5, 0.25}, {0.0, -2.0, 2.0}, kLattice,
                          kSimpson, fixed(10.0, 1000));
    FAIL() << "expected DivergedError";
  } catch (const fsurf::DivergedError& e) {
    EXPECT_TRUE(e.last_finite().coeffs().allFinite());
    EXPECT_GE(e.iteration(), 0);
  }
}

TEST(WriteTraceCsv, OneRowPerIterate) {
  const auto report = fsurf::minimize(CoefficientGrid::zeros(1, 1, 4.0, 1.0), {0.5, 0.25}, {0.0, -2.0, 2.0},
                                      kLattice, kSimpson, fixed(0.01, 2));
  std::ostringstream os;
  fsurf::write_trace_csv(os, report);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "iteration,objective,grad_norm,step");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(os.str().back(), '\n');
}
