#pragma once

#include <string>
#include <vector>

#include <Eigen/LU>

#include "majorana/constellation.hpp"

namespace majorana {

/// Sorted multiplicities {n_1 >= ... >= n_d} of the distinct Majorana points;
/// labels the entanglement family D_{n_1,...,n_d}.
class DegeneracyConfiguration {
 public:
  explicit DegeneracyConfiguration(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const { return mults_; }
  int diversity() const { return static_cast<int>(mults_.size()); }
  int qubits() const;
  /// "D_{n1,n2,...}".
  std::string label() const;

  friend bool operator==(const DegeneracyConfiguration&, const DegeneracyConfiguration&) = default;

 private:
  std::vector<int> mults_;
};

/// Identical invertible local operation A applied to every qubit.
class LocalOperation {
 public:
  /// Throws InvalidArgument when m is singular.
  explicit LocalOperation(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }
  /// Ratio of singular values; infinity is impossible after construction.
  double condition_number() const { return condition_; }
  LocalOperation inverse() const { return LocalOperation(m_.inverse()); }

 private:
  Matrix2 m_;
  double condition_;
};

/// Operations with a larger condition number are flagged as ill-conditioned.
inline constexpr double kIllConditionedThreshold = 1e8;

struct IloResult {
  SymmetricState state;
  double condition_number;
  bool ill_conditioned;
};

DegeneracyConfiguration classify(const SymmetricState& s, double cluster_tol = kClusterTol);

/// A^{(x)N} |s>, renormalized, computed by moving each Majorana point.
IloResult apply_ilo(const SymmetricState& s, const LocalOperation& a, double cluster_tol = kClusterTol);

/// Equality of degeneracy configurations. For diversity degree >= 4 equal
/// configurations are necessary but not sufficient for SLOCC equivalence,
/// since such families contain a continuum of inequivalent classes.
bool same_family(const SymmetricState& s1, const SymmetricState& s2, double cluster_tol = kClusterTol);

/// Every degeneracy configuration available to n qubits (the partitions of n),
/// in reverse lexicographic order starting from {n}.
std::vector<DegeneracyConfiguration> families(int n);

}  // namespace majorana
