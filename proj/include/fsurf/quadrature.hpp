#ifndef FSURF_QUADRATURE_HPP
#define FSURF_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsurf {

enum class QuadratureScheme { trapezoid, simpson };

inline QuadratureScheme parse_quadrature_scheme(std::string_view name) {
  if (name == "trapezoid") return QuadratureScheme::trapezoid;
  if (name == "simpson") return QuadratureScheme::simpson;
  throw std::invalid_argument("unknown quadrature scheme '" + std::string(name) + "'");
}

inline const char* to_string(QuadratureScheme s) {
  return s == QuadratureScheme::trapezoid ? "trapezoid" : "simpson";
}

/// Composite rule on a uniform grid over [0, T].
struct QuadratureRule {
  QuadratureScheme scheme = QuadratureScheme::simpson;
  double step = 0.05;

  /// Number of intervals; the step must tile [0, T] and Simpson needs an even count.
  [[nodiscard]] int intervals(double horizon) const {
    if (!(step > 0.0) || !std::isfinite(step))
      throw std::invalid_argument("QuadratureRule: step must be positive");
    const double ratio = horizon / step;
    const double count = std::round(ratio);
    if (count < 1.0 || std::abs(count * step - horizon) > 1e-12 * std::max(1.0, horizon))
      throw std::invalid_argument("QuadratureRule: step " + std::to_string(step) +
                                  " does not divide T = " + std::to_string(horizon));
    const int n = static_cast<int>(count);
    if (scheme == QuadratureScheme::simpson && n % 2 != 0)
      throw std::invalid_argument("QuadratureRule: Simpson needs an even number of intervals");
    return n;
  }

  /// Nodes t_i = i T / n, so the last node is exactly T.
  [[nodiscard]] std::vector<double> nodes(double horizon) const {
    const int n = intervals(horizon);
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = horizon * i / n;
    t.back() = horizon;
    return t;
  }

  [[nodiscard]] std::vector<double> weights(double horizon) const {
    const int n = intervals(horizon);
    const double h = horizon / n;
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    if (scheme == QuadratureScheme::trapezoid) {
      for (auto& wi : w) wi = h;
      w.front() = w.back() = 0.5 * h;
    } else {
      for (int i = 0; i <= n; ++i)
        w[static_cast<std::size_t>(i)] = (i == 0 || i == n) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    }
    return w;
  }
};

}  // namespace fsurf

#endif  // FSURF_QUADRATURE_HPP
