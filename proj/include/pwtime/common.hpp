#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pwtime {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultValidationTol = 1e-9;
inline constexpr double kDefaultGroupTol = 1e-9;
inline constexpr double kDefaultWitnessTol = 1e-10;

/// Inputs whose dimensions do not line up (non-square, mismatched factors, ...).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A state failed its defining checks (hermiticity, trace, positivity, normalization).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mixture weights that are negative or do not sum to one.
struct WeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An energy label that does not match any level group.
struct LookupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Conditioning on an outcome of (numerically) zero probability.
struct ZeroProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative solver ran out of sweeps.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario configuration that cannot be parsed or fails schema checks.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pwtime
