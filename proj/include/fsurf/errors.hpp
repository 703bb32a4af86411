#ifndef FSURF_ERRORS_HPP
#define FSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsurf {

/// Initial condition sits on a fixed point of the flow (x0 = 0 or 1) or
/// outside the state domain of a dynamics instance.
class DegenerateInitialCondition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An explicit integrator left the admissible state interval.
class IntegrationBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// MAPE over an empty set of lattice points.
class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fsurf

#endif  // FSURF_ERRORS_HPP
