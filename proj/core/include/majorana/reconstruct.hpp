#pragma once

#include <cstdint>
#include <vector>

#include "majorana/marginals.hpp"

namespace majorana {

struct SearchOptions {
  int restarts = 16;
  std::uint64_t seed = 1;
  /// Frobenius residual below which a minimizer counts as an exact match.
  double tol = kOptimizationTol;
  /// Two matches are the same state when their fidelity is at least 1 - distinct_tol.
  double distinct_tol = 1e-6;
  bool parallel = false;
};

struct ReconstructionResult {
  enum class Status { Unique, Ambiguous };
  Status status;
  /// Every distinct exact match, best residual first; a Unique result has one.
  std::vector<FullState> candidates;
  /// Frobenius residual of the best candidate.
  double residual;

  bool unique() const { return status == Status::Unique; }
  const FullState& state() const { return candidates.front(); }
};

/// Recovers an N-qubit pure state from its marginals on qubits 1..N-1 (rho_a)
/// and 2..N (rho_b).
///
/// rho_a must have rank at most two, so every consistent state is a
/// purification of rho_a with one ancilla qubit; the ancilla unitary is fitted
/// to rho_b from several random starts. Throws InvalidArgument when rho_a has
/// rank above two and NumericalError when no start reproduces rho_b.
ReconstructionResult reconstruct_from_two_marginals(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                                                    const SearchOptions& options = {});

struct MarginalTarget {
  std::vector<int> keep;
  DensityMatrix rho;
};

struct MarginalMatch {
  FullState state;
  double residual;
};

/// Multistart minimization of sum_t ||rdm_full(psi, keep_t) - rho_t||_F^2 over
/// normalized n-qubit states. Returns every distinct minimizer whose residual
/// is below options.tol, sorted by residual; the list may be empty.
std::vector<MarginalMatch> marginal_match_search(const std::vector<MarginalTarget>& targets, int n,
                                                 const SearchOptions& options = {});

}  // namespace majorana
