#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace majorana {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Default tolerance for structural invariants (norms, hermiticity, roundtrips).
inline constexpr double kDefaultTol = 1e-9;
/// Default tolerance for quantities produced by an iterative optimizer.
inline constexpr double kOptimizationTol = 1e-6;
/// Default chordal clustering radius for merging Majorana points.
inline constexpr double kClusterTol = 1e-6;
/// Largest qubit count for which dense 2^n vectors are built.
inline constexpr int kMaxDenseQubits = 12;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a trustworthy answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace majorana
