#pragma once

#include <span>
#include <vector>

#include "majorana/state.hpp"

namespace majorana {

enum class BasisKind { Symmetric, Computational };

/// Hermitian, positive semidefinite, unit-trace matrix over k retained qubits.
///
/// A symmetric(k) matrix lives in the (k+1)-dimensional Dicke basis of the
/// retained qubits; a computational(k) matrix in the 2^k qubit basis, with the
/// first retained qubit as the most significant bit.
class DensityMatrix {
 public:
  /// Validates shape, hermiticity, trace and positivity within tol.
  DensityMatrix(Matrix entries, BasisKind basis, int kept, double tol = kDefaultTol);

  const Matrix& entries() const { return entries_; }
  BasisKind basis() const { return basis_; }
  int kept() const { return kept_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
  BasisKind basis_;
  int kept_;
};

/// Reduced state of k qubits of a symmetric state, in the Dicke basis.
DensityMatrix rdm_symmetric(const SymmetricState& s, int k);

/// Reduced state on the listed qubits (1-based, in the given order).
DensityMatrix rdm_full(const FullState& f, std::span<const int> keep);

/// Re-expresses a symmetric(k) matrix in the computational basis; computational
/// inputs are returned unchanged.
DensityMatrix embed_symmetric(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Coffman-Kundu-Wootters three-tangle of a three-qubit pure state.
double three_tangle(const FullState& f);

/// Member of the D_{n-k,k} family: the symmetrization of n-k copies of |0>
/// and k copies of d0|0> + d1|1>.
SymmetricState dnk_state(int n, int k, Complex d0, Complex d1);

/// Indices of the weight-r basis states of n qubits in the labeling used by
/// generalized Dicke states: states with the last qubit in |0> first, and
/// each block in decreasing binary order.
std::vector<std::size_t> weight_bitstrings(int n, int r);

/// sum_r alphas[r] sum_i a[r][i] |i-th weight-r bitstring>, normalized.
/// alphas has k+1 entries and a[r] has C(n, r) entries.
FullState generalized_dicke_state(int n, int k, std::span<const Complex> alphas,
                                  const std::vector<std::vector<Complex>>& a);

/// True when both halves of a[k] (last qubit |0> and last qubit |1>) hold a
/// nonzero coefficient on a bitstring whose first qubit is |0>.
bool uniqueness_conditions(int n, int k, const std::vector<std::vector<Complex>>& a);

}  // namespace majorana
