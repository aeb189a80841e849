#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"

using namespace majorana;

namespace {

Vector vec(std::initializer_list<Complex> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

}  // namespace

TEST(Spinor, NormalizesAndReportsAngles) {
  const Spinor s(3.0, 4.0);
  EXPECT_NEAR(std::norm(s.a()) + std::norm(s.b()), 1.0, 1e-15);
  const Spinor t = Spinor::from_angles(0.7, 1.1);
  EXPECT_NEAR(t.alpha(), 0.7, 1e-12);
  EXPECT_NEAR(t.beta(), 1.1, 1e-12);
  EXPECT_THROW(Spinor(0.0, 0.0), InvalidArgument);
}

TEST(Spinor, EquivalenceIgnoresGlobalPhase) {
  const Spinor s(0.6, Complex(0.0, 0.8));
  const Spinor t(std::polar(1.0, 1.3) * 0.6, std::polar(1.0, 1.3) * Complex(0.0, 0.8));
  EXPECT_TRUE(s.equivalent(t));
  EXPECT_FALSE(s.equivalent(Spinor(0.6, -0.8)));
  EXPECT_NEAR(t.canonical().a().imag(), 0.0, 1e-15);
  EXPECT_GT(t.canonical().a().real(), 0.0);
}

TEST(SymmetricState, CanonicalPhaseAndNormalization) {
  const auto s = SymmetricState::from_coefficients(vec({0.0, Complex(0.0, 2.0), 1.0}));
  EXPECT_NEAR(s.coefficients().norm(), 1.0, 1e-15);
  EXPECT_EQ(s[0], Complex(0.0));
  EXPECT_NEAR(s[1].imag(), 0.0, 1e-15);
  EXPECT_GT(s[1].real(), 0.0);
  EXPECT_THROW(SymmetricState::from_coefficients(Vector::Zero(3)), InvalidArgument);
}

TEST(Dicke, SelectsOneCoefficient) {
  const auto s = dicke_state(3, 2);
  EXPECT_EQ(s.qubits(), 3);
  for (int l = 0; l <= 3; ++l) EXPECT_EQ(s[l], Complex(l == 2 ? 1.0 : 0.0));
  EXPECT_THROW(dicke_state(3, 4), InvalidArgument);
  EXPECT_THROW(dicke_state(3, -1), InvalidArgument);
}

TEST(Dicke, SingleQubitGroundState) {
  const auto f = expand_to_full(dicke_state(1, 0));
  EXPECT_NEAR(std::abs(f[0] - 1.0), 0.0, 1e-15);
  EXPECT_EQ(f[1], Complex(0.0));
}

TEST(Dicke, WeightTwoOfFourHasSixEqualAmplitudes) {
  const auto f = expand_to_full(dicke_state(4, 2));
  int count = 0;
  for (Eigen::Index i = 0; i < 16; ++i) {
    if (popcount(static_cast<std::size_t>(i)) == 2) {
      EXPECT_NEAR(std::abs(f[i] - 1.0 / std::sqrt(6.0)), 0.0, 1e-15);
      ++count;
    } else {
      EXPECT_EQ(f[i], Complex(0.0));
    }
  }
  EXPECT_EQ(count, 6);
}

TEST(Dicke, KetLabelsByMagneticNumber) {
  // |3/2, -1/2> has two qubits in |1>.
  EXPECT_LT(phase_distance(dicke_ket(3, -1), dicke_state(3, 2)), 1e-15);
  EXPECT_LT(phase_distance(dicke_ket(2, 2), dicke_state(2, 0)), 1e-15);
  EXPECT_THROW(dicke_ket(3, 0), InvalidArgument);
}

TEST(Dicke, Orthonormal) {
  for (int n = 1; n <= 8; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        EXPECT_EQ(overlap(dicke_state(n, a), dicke_state(n, b)), Complex(a == b ? 1.0 : 0.0));
      }
    }
  }
}

TEST(Ghz, QubitExpansion) {
  const auto f = expand_to_full(ghz_state(3));
  for (Eigen::Index i = 0; i < 8; ++i) {
    const double expected = (i == 0 || i == 7) ? 1.0 / std::sqrt(2.0) : 0.0;
    EXPECT_NEAR(std::abs(f[i] - expected), 0.0, 1e-15);
  }
  const auto bell = expand_to_full(ghz_state(2));
  EXPECT_NEAR(bell[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(bell[3].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(overlap(ghz_state(4), dicke_state(4, 0))), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(ghz_state(1), InvalidArgument);
}

TEST(ExpandToFull, OneExcitationOfTwo) {
  const auto f = expand_to_full(dicke_state(2, 1));
  EXPECT_EQ(f[0], Complex(0.0));
  EXPECT_NEAR(f[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(f[2].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(f[3], Complex(0.0));
  const auto one = expand_to_full(dicke_state(1, 1));
  EXPECT_EQ(one[0], Complex(0.0));
  EXPECT_NEAR(one[1].real(), 1.0, 1e-15);
}

TEST(ExpandToFull, RejectsTooManyQubits) {
  EXPECT_THROW(expand_to_full(dicke_state(13, 2)), InvalidArgument);
}

TEST(ProjectToSymmetric, RoundTripIsExact) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n) {
    const auto s = oracle::random_symmetric(rng, n);
    const auto p = project_to_symmetric(expand_to_full(s));
    EXPECT_LE(p.residual, 1e-10) << "n=" << n;
    EXPECT_LE(phase_distance(p.state, s), 1e-10) << "n=" << n;
  }
}

TEST(ProjectToSymmetric, SingleExcitationBasisState) {
  const auto f = FullState::from_amplitudes(vec({0.0, 1.0, 0.0, 0.0}));
  const auto p = project_to_symmetric(f);
  EXPECT_LE(phase_distance(p.state, dicke_state(2, 1)), 1e-15);
  EXPECT_NEAR(p.residual, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(ProjectToSymmetric, SingletHasNoSymmetricPart) {
  const auto singlet = FullState::from_amplitudes(vec({0.0, 1.0, -1.0, 0.0}));
  EXPECT_THROW(project_to_symmetric(singlet), InvalidArgument);
}

TEST(FullState, RejectsBadLengths) {
  EXPECT_THROW(FullState::from_amplitudes(Vector::Ones(3)), InvalidArgument);
  EXPECT_THROW(FullState::from_amplitudes(Vector::Ones(1)), InvalidArgument);
  EXPECT_THROW(FullState::from_amplitudes(Vector::Zero(4)), InvalidArgument);
}

TEST(Overlap, BasicValues) {
  std::mt19937_64 rng(5);
  const auto s = oracle::random_symmetric(rng, 5);
  EXPECT_NEAR(std::abs(overlap(s, s) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(overlap(dicke_state(3, 0), ghz_state(3))), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(overlap(dicke_state(3, 1), dicke_state(3, 2)), Complex(0.0));
  EXPECT_THROW(overlap(dicke_state(3, 1), dicke_state(4, 1)), InvalidArgument);
}

TEST(Overlap, MixedRepresentationsAgree) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 6; ++n) {
    const auto s = oracle::random_symmetric(rng, n);
    const auto t = oracle::random_symmetric(rng, n);
    const auto ft = expand_to_full(t);
    const Complex reference = overlap(s, t);
    EXPECT_NEAR(std::abs(overlap(expand_to_full(s), ft) - reference), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(overlap(s, ft) - reference), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(overlap(ft, s) - std::conj(reference)), 0.0, 1e-13);
  }
}

TEST(Overlap, MagnitudeIgnoresPhase) {
  std::mt19937_64 rng(7);
  const auto s = oracle::random_full(rng, 4);
  const auto t = oracle::random_full(rng, 4);
  const auto rotated = FullState::from_amplitudes(std::polar(1.0, 0.9) * t.amplitudes());
  EXPECT_NEAR(std::abs(overlap(s, t)), std::abs(overlap(s, rotated)), 1e-14);
}

TEST(Symmetrize, ZeroAndOneGiveTwoQubitW) {
  const std::vector<Spinor> spinors{Spinor(1.0, 0.0), Spinor(0.0, 1.0)};
  EXPECT_LE(phase_distance(symmetrize(spinors), dicke_state(2, 1)), 1e-15);
}

TEST(Symmetrize, IdenticalSpinorsGiveProductState) {
  std::mt19937_64 rng(8);
  const Spinor e = oracle::random_spinor(rng);
  const std::vector<Spinor> spinors(5, e);
  Vector product = Vector::Ones(1);
  for (int i = 0; i < 5; ++i) product = oracle::kron(product, oracle::spinor_vector(e));
  EXPECT_LE(phase_distance(expand_to_full(symmetrize(spinors)).amplitudes(), canonicalize(product)), 1e-13);
}

TEST(Symmetrize, ThreeSpinorMixedState) {
  const double r2 = std::sqrt(2.0);
  for (const double sign : {1.0, -1.0}) {
    const std::vector<Spinor> spinors{Spinor(1.0 / r2, sign / r2), Spinor(1.0, 0.0), Spinor(0.0, 1.0)};
    Vector expected = Vector::Zero(8);
    expected(1) = expected(2) = expected(4) = 1.0;
    expected(3) = expected(5) = expected(6) = sign;
    EXPECT_LE(phase_distance(expand_to_full(symmetrize(spinors)).amplitudes(), canonicalize(expected)), 1e-15);
  }
}

TEST(Symmetrize, MatchesPermutationSum) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Spinor> spinors;
      for (int i = 0; i < n; ++i) spinors.push_back(oracle::random_spinor(rng));
      const Vector reference = canonicalize(oracle::symmetrize_by_permutations(spinors));
      EXPECT_LE(phase_distance(expand_to_full(symmetrize(spinors)).amplitudes(), reference), 1e-12);
    }
  }
}

TEST(Symmetrize, OrderIndependent) {
  std::mt19937_64 rng(10);
  std::vector<Spinor> spinors;
  for (int i = 0; i < 7; ++i) spinors.push_back(oracle::random_spinor(rng));
  const auto base = symmetrize(spinors);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(spinors.begin(), spinors.end(), rng);
    EXPECT_LE(phase_distance(symmetrize(spinors), base), 1e-10);
  }
}
