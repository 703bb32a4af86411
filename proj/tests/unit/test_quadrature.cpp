#include "fsurf/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using fsurf::QuadratureRule;
using fsurf::QuadratureScheme;

namespace {

double integrate(const QuadratureRule& rule, double T, auto f) {
  const auto t = rule.nodes(T);
  const auto w = rule.weights(T);
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += w[i] * f(t[i]);
  return s;
}

}  // namespace

TEST(QuadratureRule, DefaultLatticeHasEightyIntervals) {
  const QuadratureRule rule;
  EXPECT_EQ(rule.intervals(4.0), 80);
  const auto t = rule.nodes(4.0);
  ASSERT_EQ(t.size(), 81u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 4.0);
  EXPECT_NEAR(t[1], 0.05, 1e-15);
}

TEST(QuadratureRule, RejectsBadSteps) {
  EXPECT_THROW((void)QuadratureRule({QuadratureScheme::trapezoid, 0.3}).intervals(4.0), std::invalid_argument);
  EXPECT_THROW((void)QuadratureRule({QuadratureScheme::simpson, 4.0 / 81}).intervals(4.0), std::invalid_argument);
  EXPECT_THROW((void)QuadratureRule({QuadratureScheme::simpson, 0.0}).intervals(4.0), std::invalid_argument);
  EXPECT_THROW((void)QuadratureRule({QuadratureScheme::simpson, 8.0}).intervals(4.0), std::invalid_argument);
  EXPECT_EQ(QuadratureRule({QuadratureScheme::trapezoid, 4.0 / 81}).intervals(4.0), 81);
}

TEST(QuadratureRule, WeightsSumToHorizon) {
  for (auto scheme : {QuadratureScheme::trapezoid, QuadratureScheme::simpson}) {
    const auto w = QuadratureRule{scheme, 0.25}.weights(3.0);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 3.0, 1e-14);
  }
}

TEST(QuadratureRule, PolynomialExactness) {
  const QuadratureRule simpson{QuadratureScheme::simpson, 0.5};
  const QuadratureRule trapezoid{QuadratureScheme::trapezoid, 0.5};
  EXPECT_NEAR(integrate(simpson, 4.0, [](double t) { return t * t * t - 2 * t; }), 64.0 - 16.0, 1e-12);
  EXPECT_NEAR(integrate(trapezoid, 4.0, [](double t) { return 3 * t + 1; }), 28.0, 1e-12);
}

TEST(QuadratureRule, ConvergenceOrders) {
  auto f = [](double t) { return std::exp(-t) * std::cos(2 * t); };
  const double exact = (1.0 - std::exp(-4.0) * (std::cos(8.0) - 2 * std::sin(8.0))) / 5.0;
  for (auto [scheme, expected] : {std::pair{QuadratureScheme::trapezoid, 4.0}, std::pair{QuadratureScheme::simpson, 16.0}}) {
    const double e1 = std::abs(integrate(QuadratureRule{scheme, 0.1}, 4.0, f) - exact);
    const double e2 = std::abs(integrate(QuadratureRule{scheme, 0.05}, 4.0, f) - exact);
    EXPECT_NEAR(e1 / e2, expected, 0.1 * expected);
  }
}

TEST(QuadratureScheme, ParsesNames) {
  EXPECT_EQ(fsurf::parse_quadrature_scheme("simpson"), QuadratureScheme::simpson);
  EXPECT_EQ(fsurf::parse_quadrature_scheme("trapezoid"), QuadratureScheme::trapezoid);
  EXPECT_THROW(fsurf::parse_quadrature_scheme("gauss"), std::invalid_argument);
}
