#pragma once

#include <span>
#include <vector>

#include "majorana/types.hpp"

namespace majorana {

/// Binomial coefficient C(n, k) as a double; zero outside 0 <= k <= n.
double binomial(int n, int k);

/// Normalized single-qubit state a|0> + b|1>.
class Spinor {
 public:
  /// Normalizes (a, b); throws on the zero vector.
  Spinor(Complex a, Complex b);

  /// cos(beta/2) e^{-i alpha/2} |0> + sin(beta/2) e^{i alpha/2} |1>.
  static Spinor from_angles(double alpha, double beta);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  /// Polar angle in [0, pi].
  double beta() const;
  /// Azimuth in [0, 2 pi); zero at the poles.
  double alpha() const;

  /// Same spinor with the first nonzero component made real and positive.
  Spinor canonical() const;

  /// Equality up to a unit-modulus factor.
  bool equivalent(const Spinor& other, double tol = kDefaultTol) const;

 private:
  Complex a_;
  Complex b_;
};

/// Permutation-symmetric N-qubit pure state in the Dicke basis.
///
/// Coefficient c_l multiplies the normalized Dicke state with l qubits in
/// |1>, i.e. |N/2, N/2 - l>. Instances are always normalized and carry the
/// canonical global phase (first nonzero coefficient real and positive).
class SymmetricState {
 public:
  /// Builds from n+1 coefficients, normalizing and fixing the phase.
  /// Throws InvalidArgument on an empty or zero vector.
  static SymmetricState from_coefficients(const Vector& coefficients);

  int qubits() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Vector& coefficients() const { return coefficients_; }
  Complex operator[](int l) const { return coefficients_(l); }

 private:
  explicit SymmetricState(Vector coefficients) : coefficients_(std::move(coefficients)) {}
  Vector coefficients_;
};

/// Dense 2^n amplitude vector; qubit 1 is the most significant bit of the index.
class FullState {
 public:
  /// Builds from 2^n amplitudes (1 <= n <= 12), normalizing and fixing the phase.
  static FullState from_amplitudes(const Vector& amplitudes);

  int qubits() const { return qubits_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index index) const { return amplitudes_(index); }

 private:
  FullState(int qubits, Vector amplitudes) : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}
  int qubits_;
  Vector amplitudes_;
};

/// Returns v scaled to unit norm with its first significant entry real and
/// non-negative. Throws InvalidArgument when v is (numerically) zero.
Vector canonicalize(const Vector& v);

/// min over theta of || x - e^{i theta} y ||, for unit vectors of equal size.
double phase_distance(const Vector& x, const Vector& y);
double phase_distance(const SymmetricState& x, const SymmetricState& y);
double phase_distance(const FullState& x, const FullState& y);

/// |<x|y>|^2.
double fidelity(const FullState& x, const FullState& y);

SymmetricState dicke_state(int n, int l);
SymmetricState ghz_state(int n);

/// The Dicke state |n/2, m> given twice the magnetic number (two_m = 2m).
SymmetricState dicke_ket(int n, int two_m);

FullState expand_to_full(const SymmetricState& s);

struct SymmetricProjection {
  SymmetricState state;
  /// Norm of the component orthogonal to the symmetric subspace.
  double residual;
};

/// Orthogonal projection onto the symmetric subspace, renormalized.
/// Throws InvalidArgument when the symmetric part vanishes.
SymmetricProjection project_to_symmetric(const FullState& f);

Complex overlap(const SymmetricState& x, const SymmetricState& y);
Complex overlap(const FullState& x, const FullState& y);
Complex overlap(const SymmetricState& x, const FullState& y);
Complex overlap(const FullState& x, const SymmetricState& y);

/// Normalized symmetrization of a product of spinors, computed through the
/// generating polynomial prod_i (a_i + b_i t). Independent of input order.
SymmetricState symmetrize(std::span<const Spinor> spinors);

/// Hamming weight of a basis index.
int popcount(std::size_t index);

}  // namespace majorana
