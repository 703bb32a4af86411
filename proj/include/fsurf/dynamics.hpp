#ifndef FSURF_DYNAMICS_HPP
#define FSURF_DYNAMICS_HPP

#include "fsurf/errors.hpp"
#include "fsurf/fourier_surface.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <stdexcept>

namespace fsurf {

/// Payoff rate rho = beta * u - xi of the 2x2 skew-symmetric game. With
/// x the share of the first strategy the replicator reduces to
/// x' = x (1 - x) (beta u - xi).
struct GameParams {
  double beta = 0.5;
  double xi = 0.25;

  void validate() const {
    if (!std::isfinite(beta) || !std::isfinite(xi))
      throw std::invalid_argument("GameParams: beta and xi must be finite");
  }
};

/// Largest |V| passed to exp(). Beyond |V| ~ 40 the flow is already saturated.
inline constexpr double kPotentialClamp = 700.0;

namespace detail {

inline double clamp_potential(double v) { return std::clamp(v, -kPotentialClamp, kPotentialClamp); }

/// Logistic sigmoid without overflow for either sign.
inline double sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

inline void check_interior(double x0) {
  if (!(x0 > 0.0 && x0 < 1.0))
    throw DegenerateInitialCondition("initial state must lie in (0, 1); boundary states are fixed points");
}

// Flow and its V-slope given V(t) and ln K. phi = 1 / (1 + K exp(-V)) is
// sigma(V - ln K), and dphi/dV = K e^V / (K + e^V)^2 = sigma(s) sigma(-s).
inline double logistic_flow(double v, double log_k) { return sigmoid(clamp_potential(v) - log_k); }

inline double logistic_slope(double v, double log_k) {
  const double s = clamp_potential(v) - log_k;
  return sigmoid(s) * sigmoid(-s);
}

}  // namespace detail

/// One initial condition of the controlled replicator under a given surface.
class FlowContext {
 public:
  FlowContext(CoefficientGrid grid, GameParams params, double x0)
      : grid_(std::move(grid)), params_(params), x0_(x0) {
    params_.validate();
    detail::check_interior(x0_);
  }

  [[nodiscard]] const CoefficientGrid& grid() const { return grid_; }
  [[nodiscard]] const GameParams& params() const { return params_; }
  [[nodiscard]] double x0() const { return x0_; }

 private:
  CoefficientGrid grid_;
  GameParams params_;
  double x0_;
};

/// V(t) = beta U(t, x0) - xi t.
inline double eval_V(const FlowContext& ctx, double t) {
  return ctx.params().beta * eval_U(ctx.grid(), t, ctx.x0()) - ctx.params().xi * t;
}

/// Integration constant K = ((1 - x0) / x0) exp(V(0)). V(0) vanishes for the
/// cosine basis; the factor stays so other bases can be dropped in.
inline double eval_K(const FlowContext& ctx) {
  return (1.0 - ctx.x0()) / ctx.x0() * std::exp(detail::clamp_potential(eval_V(ctx, 0.0)));
}

namespace detail {
inline double log_K(const FlowContext& ctx) {
  return std::log((1.0 - ctx.x0()) / ctx.x0()) + clamp_potential(eval_V(ctx, 0.0));
}
}  // namespace detail

/// Closed-form state phi(t) = 1 / (1 + K exp(-V(t))).
inline double eval_phi(const FlowContext& ctx, double t) {
  return detail::logistic_flow(eval_V(ctx, t), detail::log_K(ctx));
}

/// dphi/dV = K e^V / (K + e^V)^2, identical to phi (1 - phi).
inline double dphi_dV(const FlowContext& ctx, double t) {
  return detail::logistic_slope(eval_V(ctx, t), detail::log_K(ctx));
}

/// dphi/da(m, n) = dphi/dV * beta * dU/da(m, n).
inline double dphi_da(const FlowContext& ctx, int m, int n, double t) {
  const double dU = dU_da(ctx.grid(), m, n, t, ctx.x0());
  return dphi_dV(ctx, t) * ctx.params().beta * dU;
}

// ---------------------------------------------------------------------------
// Separable dynamics: P(x(t)) = integral_0^t w(u) dtau + P(x0), with the
// control-side integrand restricted to the affine rate w(u) = beta u - xi so
// that the integral is V(t) in closed form.

/// State-side antiderivative P, its inverse and the inverse's derivative.
template <class D>
concept SeparableDynamics = requires(const D& d, double x, double s) {
  { d.potential(x) } -> std::convertible_to<double>;
  { d.inverse_potential(s) } -> std::convertible_to<double>;
  { d.inverse_potential_slope(s) } -> std::convertible_to<double>;
  { d.in_domain(x) } -> std::convertible_to<bool>;
};

/// P(x) = ln(x / (1 - x)): the replicator x' = x (1 - x) w(u).
struct LogisticDynamics {
  [[nodiscard]] double potential(double x) const { return std::log(x) - std::log1p(-x); }
  [[nodiscard]] double inverse_potential(double s) const { return detail::sigmoid(s); }
  [[nodiscard]] double inverse_potential_slope(double s) const {
    return detail::sigmoid(s) * detail::sigmoid(-s);
  }
  [[nodiscard]] bool in_domain(double x) const { return x > 0.0 && x < 1.0; }
};

/// P(x) = x: the linear system x' = w(u).
struct LinearDynamics {
  [[nodiscard]] double potential(double x) const { return x; }
  [[nodiscard]] double inverse_potential(double s) const { return s; }
  [[nodiscard]] double inverse_potential_slope(double) const { return 1.0; }
  [[nodiscard]] bool in_domain(double x) const { return std::isfinite(x); }
};

namespace detail {
template <SeparableDynamics D>
double separable_argument(const D& dyn, const GameParams& game, const CoefficientGrid& grid,
                          double x0, double t) {
  if (!dyn.in_domain(x0))
    throw DegenerateInitialCondition("initial state outside the dynamics' state domain");
  const double v = game.beta * eval_U(grid, t, x0) - game.xi * t;
  return clamp_potential(v) + dyn.potential(x0);
}
}  // namespace detail

/// x(t) = P^{-1}(V(t) + P(x0)).
template <SeparableDynamics D>
double generalized_flow(const D& dyn, const GameParams& game, const CoefficientGrid& grid,
                        double x0, double t) {
  return dyn.inverse_potential(detail::separable_argument(dyn, game, grid, x0, t));
}

/// dx/da(m, n) = (P^{-1})'(V(t) + P(x0)) * beta * dU/da(m, n).
template <SeparableDynamics D>
double generalized_state_sensitivity(const D& dyn, const GameParams& game,
                                     const CoefficientGrid& grid, double x0, int m, int n,
                                     double t) {
  const double dU = dU_da(grid, m, n, t, x0);
  return dyn.inverse_potential_slope(detail::separable_argument(dyn, game, grid, x0, t)) *
         game.beta * dU;
}

}  // namespace fsurf

#endif  // FSURF_DYNAMICS_HPP
