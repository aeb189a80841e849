#include "majorana/polynomial.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "majorana/state.hpp"

namespace majorana {

namespace {

// Parlett-Reinsch balancing restricted to powers of two so no rounding is
// introduced. gamma < 1 avoids cycling between equivalent scalings.
void balance(Matrix& m) {
  constexpr double kGamma = 0.9;
  const Eigen::Index n = m.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < kGamma * (col + row)) {
        changed = true;
        const double up = std::ldexp(1.0, exponent);
        const double down = std::ldexp(1.0, -exponent);
        for (Eigen::Index j = 0; j < n; ++j) {
          if (j == i) continue;
          m(i, j) *= down;
          m(j, i) *= up;
        }
      }
    }
  }
}

}  // namespace

Complex evaluate_polynomial(std::span<const Complex> ascending, Complex z) {
  Complex value = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) value = value * z + *it;
  return value;
}

std::vector<Complex> taylor_coefficients(std::span<const Complex> ascending, Complex center, int count) {
  // Repeated synthetic division by (z - center).
  std::vector<Complex> work(ascending.begin(), ascending.end());
  std::vector<Complex> out;
  out.reserve(count);
  const int size = static_cast<int>(work.size());
  for (int t = 0; t < count; ++t) {
    if (t >= size) {
      out.push_back(0.0);
      continue;
    }
    Complex acc = 0.0;
    for (int i = size - 1; i >= t; --i) {
      acc = acc * center + work[i];
      work[i] = acc;
    }
    out.push_back(work[t]);
  }
  return out;
}

double taylor_error_scale(std::span<const Complex> ascending, Complex center, int t) {
  const double r = std::abs(center);
  double scale = 0.0;
  for (int i = t; i < static_cast<int>(ascending.size()); ++i) {
    scale += std::abs(ascending[i]) * binomial(i, t) * std::pow(r, i - t);
  }
  return scale;
}

std::vector<Complex> companion_roots(std::span<const Complex> ascending) {
  const int degree = static_cast<int>(ascending.size()) - 1;
  if (degree < 1) return {};
  const Complex lead = ascending[degree];
  if (lead == Complex(0.0)) throw InvalidArgument("leading coefficient must be nonzero");
  if (degree == 1) return {-ascending[0] / lead};

  Matrix companion = Matrix::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -ascending[i] / lead;
  balance(companion);

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration did not converge");
  const Vector& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace majorana
