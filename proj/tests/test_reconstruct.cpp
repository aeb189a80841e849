#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace majorana;

namespace {

std::vector<int> range(int first, int last) {
  std::vector<int> out;
  for (int q = first; q <= last; ++q) out.push_back(q);
  return out;
}

ReconstructionResult reconstruct(const FullState& f, const SearchOptions& opts = {}) {
  const int n = f.qubits();
  return reconstruct_from_two_marginals(rdm_full(f, range(1, n - 1)), rdm_full(f, range(2, n)), opts);
}

FullState chi(double sign) {
  Vector v = Vector::Zero(16);
  v(0) = 1.0;
  v(1) = 1.0;
  v(15) = sign;
  return FullState::from_amplitudes(v);
}

}  // namespace

TEST(Reconstruct, DnkStatesAreUnique) {
  std::mt19937_64 rng(51);
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const auto f = expand_to_full(dnk_state(n, k, oracle::gaussian(rng), oracle::gaussian(rng)));
      const auto r = reconstruct(f);
      ASSERT_TRUE(r.unique()) << n << "," << k;
      EXPECT_GE(fidelity(r.state(), f), 1.0 - 1e-6);
      EXPECT_LE(r.residual, 1e-6);
    }
  }
}

TEST(Reconstruct, ProductStateIsUnique) {
  std::mt19937_64 rng(52);
  const auto f = expand_to_full(symmetrize(std::vector<Spinor>(4, oracle::random_spinor(rng))));
  const auto r = reconstruct(f);
  ASSERT_TRUE(r.unique());
  EXPECT_GE(fidelity(r.state(), f), 1.0 - 1e-6);
}

TEST(Reconstruct, GeneralizedDickeWithUniquenessConditions) {
  std::mt19937_64 rng(53);
  for (int n = 3; n <= 6; ++n) {
    const int k = 1;
    std::vector<Complex> alphas;
    std::vector<std::vector<Complex>> a;
    for (int r = 0; r <= k; ++r) {
      alphas.push_back(oracle::gaussian(rng));
      std::vector<Complex> block;
      for (int i = 0; i < static_cast<int>(binomial(n, r)); ++i) block.push_back(oracle::gaussian(rng));
      a.push_back(block);
    }
    ASSERT_TRUE(uniqueness_conditions(n, k, a));
    const auto f = generalized_dicke_state(n, k, alphas, a);
    const auto r = reconstruct(f);
    ASSERT_TRUE(r.unique()) << "n=" << n;
    EXPECT_GE(fidelity(r.state(), f), 1.0 - 1e-6);
  }
}

TEST(Reconstruct, GhzIsAmbiguous) {
  for (int n = 3; n <= 5; ++n) {
    const auto r = reconstruct(expand_to_full(ghz_state(n)));
    EXPECT_FALSE(r.unique()) << "n=" << n;
    EXPECT_GE(r.candidates.size(), 2U);
    for (const auto& c : r.candidates) {
      EXPECT_LE((rdm_full(c, range(1, n - 1)).entries() - rdm_full(expand_to_full(ghz_state(n)), range(1, n - 1)).entries())
                    .norm(),
                1e-5);
    }
  }
}

TEST(Reconstruct, ParallelMatchesSerial) {
  const auto f = expand_to_full(dnk_state(5, 2, 0.6, Complex(0.0, 0.8)));
  SearchOptions serial;
  SearchOptions parallel;
  parallel.parallel = true;
  const auto a = reconstruct(f, serial);
  const auto b = reconstruct(f, parallel);
  ASSERT_TRUE(a.unique());
  ASSERT_TRUE(b.unique());
  EXPECT_GE(fidelity(a.state(), b.state()), 1.0 - 1e-6);
}

TEST(Reconstruct, RejectsHighRankMarginal) {
  // A pure state's (N-1)-qubit marginal never exceeds rank two.
  const DensityMatrix mixed(Matrix::Identity(8, 8) / 8.0, BasisKind::Computational, 3);
  EXPECT_THROW(reconstruct_from_two_marginals(mixed, mixed), InvalidArgument);
}

TEST(Reconstruct, RejectsInconsistentMarginals) {
  const auto a = rdm_full(expand_to_full(dicke_state(3, 0)), range(1, 2));
  const auto b = rdm_full(expand_to_full(dicke_state(3, 3)), range(2, 3));
  EXPECT_THROW(reconstruct_from_two_marginals(a, b), NumericalError);
}

TEST(Reconstruct, RejectsMismatchedDimensions) {
  const auto a = rdm_full(expand_to_full(ghz_state(3)), range(1, 2));
  const auto b = rdm_full(expand_to_full(ghz_state(4)), range(2, 4));
  EXPECT_THROW(reconstruct_from_two_marginals(a, b), InvalidArgument);
}

TEST(MarginalMatchSearch, ChiStatesShareThreeMarginals) {
  // Any phase on |1111> leaves these three marginals unchanged, so the
  // matches trace out a circle that contains both chi states.
  const auto plus = chi(1.0);
  std::vector<MarginalTarget> targets;
  for (const auto& keep : std::vector<std::vector<int>>{{2, 3, 4}, {1, 3, 4}, {1, 2, 4}}) {
    targets.push_back({keep, rdm_full(plus, keep)});
  }
  const auto matches = marginal_match_search(targets, 4);
  ASSERT_GE(matches.size(), 2U);
  const double third = 1.0 / std::sqrt(3.0);
  for (const auto& m : matches) {
    const Vector& v = m.state.amplitudes();
    EXPECT_NEAR(std::abs(v(0)), third, 1e-6);
    EXPECT_NEAR(std::abs(v(1)), third, 1e-6);
    EXPECT_NEAR(std::abs(v(15)), third, 1e-6);
    EXPECT_NEAR(std::abs(v(1) / v(0) - 1.0), 0.0, 1e-6);
  }
}

TEST(MarginalMatchSearch, FullStateTargetIsUnique) {
  std::mt19937_64 rng(55);
  const auto f = oracle::random_full(rng, 3);
  const std::vector<MarginalTarget> targets{{{1, 2, 3}, rdm_full(f, std::vector<int>{1, 2, 3})}};
  const auto matches = marginal_match_search(targets, 3);
  ASSERT_EQ(matches.size(), 1U);
  EXPECT_GE(fidelity(matches[0].state, f), 1.0 - 1e-6);
}

TEST(MarginalMatchSearch, IsDeterministicForAFixedSeed) {
  const auto f = expand_to_full(ghz_state(3));
  const std::vector<MarginalTarget> targets{{{1, 2}, rdm_full(f, std::vector<int>{1, 2})}};
  const auto a = marginal_match_search(targets, 3);
  const auto b = marginal_match_search(targets, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(phase_distance(a[i].state, b[i].state), 1e-12);
}
