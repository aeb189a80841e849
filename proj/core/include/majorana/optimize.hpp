#pragma once

#include <functional>

#include <Eigen/Core>

namespace majorana {

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  double initial_step = 0.1;
  /// Stop once the spread of simplex values and its diameter are both small.
  double value_tol = 1e-16;
  double size_tol = 1e-11;
  int max_iterations = 5000;
};

/// Derivative-free simplex minimization (reflection, expansion, contraction, shrink).
MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& start,
                           const NelderMeadOptions& options = {});

/// Returns f(x) and writes the gradient into grad (already sized).
using ValueAndGradient = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct QuasiNewtonOptions {
  int memory = 8;
  double gradient_tol = 1e-13;
  /// Stop as soon as the objective falls to this value (useful for zero-residual fits).
  double value_floor = 0.0;
  int max_iterations = 2000;
};

/// Limited-memory BFGS with a backtracking Armijo line search.
MinimizeResult minimize_lbfgs(const ValueAndGradient& f, const Eigen::VectorXd& start,
                              const QuasiNewtonOptions& options = {});

}  // namespace majorana
