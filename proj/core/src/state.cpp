#include "majorana/state.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace majorana {

namespace {

// Entries below this fraction of the largest magnitude do not anchor the phase.
constexpr double kPhaseAnchorFraction = 1e-10;

int qubits_for_size(Eigen::Index size) {
  require(size >= 2 && std::has_single_bit(static_cast<std::size_t>(size)),
          "amplitude vector length must be a power of two >= 2");
  return std::countr_zero(static_cast<std::size_t>(size));
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return std::round(result);
}

int popcount(std::size_t index) { return std::popcount(index); }

Spinor::Spinor(Complex a, Complex b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  require(norm > 0.0, "spinor must be nonzero");
  a_ = a / norm;
  b_ = b / norm;
}

Spinor Spinor::from_angles(double alpha, double beta) {
  return Spinor(std::cos(beta / 2) * std::polar(1.0, -alpha / 2),
                std::sin(beta / 2) * std::polar(1.0, alpha / 2));
}

double Spinor::beta() const { return 2.0 * std::atan2(std::abs(b_), std::abs(a_)); }

double Spinor::alpha() const {
  if (std::abs(a_) < 1e-12 || std::abs(b_) < 1e-12) return 0.0;
  double alpha = std::arg(b_) - std::arg(a_);
  alpha = std::fmod(alpha, 2 * std::numbers::pi);
  if (alpha < 0) alpha += 2 * std::numbers::pi;
  return alpha;
}

Spinor Spinor::canonical() const {
  Vector v(2);
  v << a_, b_;
  const Vector c = canonicalize(v);
  return Spinor(c(0), c(1));
}

bool Spinor::equivalent(const Spinor& other, double tol) const {
  const Complex inner = std::conj(a_) * other.a_ + std::conj(b_) * other.b_;
  const Complex phase = std::abs(inner) > 0.0 ? std::conj(inner) / std::abs(inner) : Complex(1.0);
  return std::hypot(std::abs(a_ - phase * other.a_), std::abs(b_ - phase * other.b_)) <= tol;
}

Vector canonicalize(const Vector& v) {
  const double norm = v.norm();
  require(v.size() > 0 && norm > 0.0 && std::isfinite(norm), "state vector must be nonzero and finite");
  Vector out = v / norm;
  const double largest = out.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(out(i)) > kPhaseAnchorFraction * largest) {
      out *= std::conj(out(i)) / std::abs(out(i));
      out(i) = std::abs(out(i));
      break;
    }
  }
  return out;
}

double phase_distance(const Vector& x, const Vector& y) {
  require(x.size() == y.size(), "dimension mismatch");
  // Direct difference after aligning phases; the 2 - 2|<x|y>| form loses
  // half the digits to cancellation.
  const Complex inner = y.dot(x);
  const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0);
  return (x - phase * y).norm();
}

double phase_distance(const SymmetricState& x, const SymmetricState& y) {
  return phase_distance(x.coefficients(), y.coefficients());
}

double phase_distance(const FullState& x, const FullState& y) {
  return phase_distance(x.amplitudes(), y.amplitudes());
}

double fidelity(const FullState& x, const FullState& y) { return std::norm(overlap(x, y)); }

SymmetricState SymmetricState::from_coefficients(const Vector& coefficients) {
  require(coefficients.size() >= 2, "symmetric state needs at least one qubit");
  return SymmetricState(canonicalize(coefficients));
}

FullState FullState::from_amplitudes(const Vector& amplitudes) {
  const int n = qubits_for_size(amplitudes.size());
  require(n <= kMaxDenseQubits, "dense states are limited to 12 qubits");
  return FullState(n, canonicalize(amplitudes));
}

SymmetricState dicke_state(int n, int l) {
  require(n >= 1, "qubit count must be >= 1");
  require(l >= 0 && l <= n, "Dicke index out of range");
  Vector c = Vector::Zero(n + 1);
  c(l) = 1.0;
  return SymmetricState::from_coefficients(c);
}

SymmetricState dicke_ket(int n, int two_m) {
  require(n >= 1, "qubit count must be >= 1");
  require(std::abs(two_m) <= n && (n - two_m) % 2 == 0, "magnetic number out of range");
  return dicke_state(n, (n - two_m) / 2);
}

SymmetricState ghz_state(int n) {
  require(n >= 2, "GHZ state needs at least two qubits");
  Vector c = Vector::Zero(n + 1);
  c(0) = c(n) = 1.0 / std::numbers::sqrt2;
  return SymmetricState::from_coefficients(c);
}

FullState expand_to_full(const SymmetricState& s) {
  const int n = s.qubits();
  require(n <= kMaxDenseQubits, "dense expansion is limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> scale(n + 1);
  for (int l = 0; l <= n; ++l) scale[l] = 1.0 / std::sqrt(binomial(n, l));
  Vector amp(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const int w = popcount(i);
    amp(i) = s[w] * scale[w];
  }
  return FullState::from_amplitudes(amp);
}

SymmetricProjection project_to_symmetric(const FullState& f) {
  const int n = f.qubits();
  Vector c = Vector::Zero(n + 1);
  for (Eigen::Index i = 0; i < f.amplitudes().size(); ++i) c(popcount(static_cast<std::size_t>(i))) += f[i];
  for (int l = 0; l <= n; ++l) c(l) /= std::sqrt(binomial(n, l));
  const double kept = c.squaredNorm();
  if (kept < 1e-24) throw InvalidArgument("state has no permutation-symmetric component");
  double orthogonal = 0.0;
  for (Eigen::Index i = 0; i < f.amplitudes().size(); ++i) {
    const int w = popcount(static_cast<std::size_t>(i));
    orthogonal += std::norm(f[i] - c(w) / std::sqrt(binomial(n, w)));
  }
  const double residual = std::sqrt(orthogonal);
  return {SymmetricState::from_coefficients(c), residual};
}

Complex overlap(const SymmetricState& x, const SymmetricState& y) {
  require(x.qubits() == y.qubits(), "qubit count mismatch");
  return x.coefficients().dot(y.coefficients());
}

Complex overlap(const FullState& x, const FullState& y) {
  require(x.qubits() == y.qubits(), "qubit count mismatch");
  return x.amplitudes().dot(y.amplitudes());
}

Complex overlap(const SymmetricState& x, const FullState& y) {
  require(x.qubits() == y.qubits(), "qubit count mismatch");
  const int n = x.qubits();
  Vector projected = Vector::Zero(n + 1);
  for (Eigen::Index i = 0; i < y.amplitudes().size(); ++i) projected(popcount(static_cast<std::size_t>(i))) += y[i];
  for (int l = 0; l <= n; ++l) projected(l) /= std::sqrt(binomial(n, l));
  return x.coefficients().dot(projected);
}

Complex overlap(const FullState& x, const SymmetricState& y) { return std::conj(overlap(y, x)); }

SymmetricState symmetrize(std::span<const Spinor> spinors) {
  const int n = static_cast<int>(spinors.size());
  require(n >= 1, "need at least one spinor");
  // Coefficient of t^l in prod (a_i + b_i t) is the elementary sum over
  // l-subsets that sets every qubit of the subset to |1>.
  Vector e = Vector::Zero(n + 1);
  e(0) = 1.0;
  int degree = 0;
  for (const Spinor& s : spinors) {
    for (int l = degree + 1; l >= 1; --l) e(l) = e(l) * s.a() + e(l - 1) * s.b();
    e(0) *= s.a();
    ++degree;
  }
  for (int l = 0; l <= n; ++l) e(l) /= std::sqrt(binomial(n, l));
  return SymmetricState::from_coefficients(e);
}

}  // namespace majorana
