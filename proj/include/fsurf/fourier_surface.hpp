#ifndef FSURF_FOURIER_SURFACE_HPP
#define FSURF_FOURIER_SURFACE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsurf {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Coefficients a(m, n) of the truncated cosine series
///
///   u(t, x0) = sum_{m=0..M} sum_{n=0..N} a(m, n) cos(m pi t / T) cos(n pi x0 / L)
///
/// together with the horizon T and the state-domain length L. Immutable once
/// built; optimizer updates produce new grids through with_coeffs().
class CoefficientGrid {
 public:
  CoefficientGrid(Matrix coeffs, double horizon, double domain_length)
      : coeffs_(std::move(coeffs)), horizon_(horizon), domain_length_(domain_length) {
    if (coeffs_.rows() < 1 || coeffs_.cols() < 1)
      throw std::invalid_argument("CoefficientGrid: need at least one coefficient (M, N >= 0)");
    if (!(horizon_ > 0.0) || !std::isfinite(horizon_))
      throw std::invalid_argument("CoefficientGrid: horizon T must be positive and finite");
    if (!(domain_length_ > 0.0) || !std::isfinite(domain_length_))
      throw std::invalid_argument("CoefficientGrid: domain length L must be positive and finite");
    if (!coeffs_.allFinite())
      throw std::invalid_argument("CoefficientGrid: coefficients must be finite");
  }

  static CoefficientGrid zeros(int M, int N, double horizon, double domain_length) {
    if (M < 0 || N < 0) throw std::invalid_argument("CoefficientGrid: M and N must be >= 0");
    return {Matrix::Zero(M + 1, N + 1), horizon, domain_length};
  }

  [[nodiscard]] CoefficientGrid with_coeffs(Matrix coeffs) const {
    if (coeffs.rows() != coeffs_.rows() || coeffs.cols() != coeffs_.cols())
      throw std::invalid_argument("CoefficientGrid: replacement coefficients change the shape");
    return {std::move(coeffs), horizon_, domain_length_};
  }

  [[nodiscard]] int M() const { return static_cast<int>(coeffs_.rows()) - 1; }
  [[nodiscard]] int N() const { return static_cast<int>(coeffs_.cols()) - 1; }
  [[nodiscard]] double horizon() const { return horizon_; }
  [[nodiscard]] double domain_length() const { return domain_length_; }
  [[nodiscard]] const Matrix& coeffs() const { return coeffs_; }
  [[nodiscard]] double operator()(int m, int n) const { return coeffs_(m, n); }

  [[nodiscard]] bool same_shape(const CoefficientGrid& other) const {
    return M() == other.M() && N() == other.N() && horizon_ == other.horizon_ &&
           domain_length_ == other.domain_length_;
  }

 private:
  Matrix coeffs_;
  double horizon_;
  double domain_length_;
};

namespace detail {

inline void check_time(const CoefficientGrid& grid, double t) {
  if (!(t >= 0.0 && t <= grid.horizon()))
    throw std::out_of_range("time " + std::to_string(t) + " outside [0, T]");
}

inline void check_index(const CoefficientGrid& grid, int m, int n) {
  if (m < 0 || m > grid.M() || n < 0 || n > grid.N())
    throw std::out_of_range("coefficient index (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") out of range");
}

inline double time_cos(int m, double t, double horizon) {
  return std::cos(m * std::numbers::pi * t / horizon);
}

// Time factor of the antiderivative of cos(m pi t / T) on [0, t].
inline double time_integral(int m, double t, double horizon) {
  if (m == 0) return t;
  const double w = m * std::numbers::pi / horizon;
  return std::sin(w * t) / w;
}

inline double state_cos(int n, double x0, double domain_length) {
  return std::cos(n * std::numbers::pi * x0 / domain_length);
}

}  // namespace detail

/// Control surface u(t, x0).
inline double eval_u(const CoefficientGrid& grid, double t, double x0) {
  detail::check_time(grid, t);
  double sum = 0.0;
  for (int m = 0; m <= grid.M(); ++m) {
    const double ct = detail::time_cos(m, t, grid.horizon());
    for (int n = 0; n <= grid.N(); ++n)
      sum += grid(m, n) * ct * detail::state_cos(n, x0, grid.domain_length());
  }
  return sum;
}

/// U(t, x0) = integral of u(tau, x0) over tau in [0, t]. U(0, x0) == 0 exactly.
inline double eval_U(const CoefficientGrid& grid, double t, double x0) {
  detail::check_time(grid, t);
  double sum = 0.0;
  for (int m = 0; m <= grid.M(); ++m) {
    const double it = detail::time_integral(m, t, grid.horizon());
    for (int n = 0; n <= grid.N(); ++n)
      sum += grid(m, n) * it * detail::state_cos(n, x0, grid.domain_length());
  }
  return sum;
}

/// du/da(m, n): the (m, n) basis function. Does not read the coefficients.
inline double du_da(const CoefficientGrid& grid, int m, int n, double t, double x0) {
  detail::check_index(grid, m, n);
  detail::check_time(grid, t);
  return detail::time_cos(m, t, grid.horizon()) * detail::state_cos(n, x0, grid.domain_length());
}

/// dU/da(m, n): time-integrated basis function.
inline double dU_da(const CoefficientGrid& grid, int m, int n, double t, double x0) {
  detail::check_index(grid, m, n);
  detail::check_time(grid, t);
  return detail::time_integral(m, t, grid.horizon()) *
         detail::state_cos(n, x0, grid.domain_length());
}

/// Basis values tabulated on a fixed (t, x0) lattice. Every descent step
/// re-evaluates the same lattice, so the transcendental calls happen once here.
///
///   time_cos(m, i)      = cos(m pi t_i / T)
///   time_integral(m, i) = integral_0^{t_i} cos(m pi s / T) ds
///   state_cos(n, j)     = cos(n pi x0_j / L)
class BasisTable {
 public:
  BasisTable(int M, int N, double horizon, double domain_length, std::span<const double> times,
             std::span<const double> x0s)
      : M_(M), N_(N), horizon_(horizon), domain_length_(domain_length),
        time_cos_(M + 1, static_cast<Eigen::Index>(times.size())),
        time_integral_(M + 1, static_cast<Eigen::Index>(times.size())),
        state_cos_(N + 1, static_cast<Eigen::Index>(x0s.size())) {
    for (int m = 0; m <= M; ++m) {
      for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0 && times[i] <= horizon))
          throw std::out_of_range("BasisTable: sample time outside [0, T]");
        time_cos_(m, static_cast<Eigen::Index>(i)) = detail::time_cos(m, times[i], horizon);
        time_integral_(m, static_cast<Eigen::Index>(i)) =
            detail::time_integral(m, times[i], horizon);
      }
    }
    for (int n = 0; n <= N; ++n)
      for (std::size_t j = 0; j < x0s.size(); ++j)
        state_cos_(n, static_cast<Eigen::Index>(j)) = detail::state_cos(n, x0s[j], domain_length);
  }

  BasisTable(const CoefficientGrid& grid, std::span<const double> times,
             std::span<const double> x0s)
      : BasisTable(grid.M(), grid.N(), grid.horizon(), grid.domain_length(), times, x0s) {}

  [[nodiscard]] bool matches(const CoefficientGrid& grid) const {
    return grid.M() == M_ && grid.N() == N_ && grid.horizon() == horizon_ &&
           grid.domain_length() == domain_length_;
  }

  [[nodiscard]] const Matrix& time_cos() const { return time_cos_; }
  [[nodiscard]] const Matrix& time_integral() const { return time_integral_; }
  [[nodiscard]] const Matrix& state_cos() const { return state_cos_; }

  /// Column j of coeffs * state_cos: the per-time-mode weights b(m) for x0_j.
  [[nodiscard]] Eigen::VectorXd mode_weights(const CoefficientGrid& grid, Eigen::Index j) const {
    return grid.coeffs() * state_cos_.col(j);
  }

 private:
  int M_;
  int N_;
  double horizon_;
  double domain_length_;
  Matrix time_cos_;
  Matrix time_integral_;
  Matrix state_cos_;
};

}  // namespace fsurf

#endif  // FSURF_FOURIER_SURFACE_HPP
