#include "majorana/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace majorana {

namespace {

Eigen::Index expected_dim(BasisKind basis, int kept) {
  return basis == BasisKind::Symmetric ? kept + 1 : Eigen::Index{1} << kept;
}

// Rows index the kept qubits (first listed = most significant), columns the rest.
Matrix split_amplitudes(const FullState& f, std::span<const int> keep) {
  const int n = f.qubits();
  const int k = static_cast<int>(keep.size());
  std::vector<bool> kept(n + 1, false);
  for (int q : keep) kept[q] = true;
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!kept[q]) traced.push_back(q);
  }

  Matrix m(Eigen::Index{1} << k, Eigen::Index{1} << (n - k));
  const auto bit = [n](std::size_t index, int qubit) { return (index >> (n - qubit)) & 1U; };
  for (std::size_t index = 0; index < (std::size_t{1} << n); ++index) {
    std::size_t row = 0;
    for (int q : keep) row = (row << 1) | bit(index, q);
    std::size_t col = 0;
    for (int q : traced) col = (col << 1) | bit(index, q);
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = f[static_cast<Eigen::Index>(index)];
  }
  return m;
}

Matrix hermitian_sqrt(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
  const Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries, BasisKind basis, int kept, double tol)
    : entries_(std::move(entries)), basis_(basis), kept_(kept) {
  require(kept >= 1, "density matrix must cover at least one qubit");
  require(basis != BasisKind::Computational || kept <= kMaxDenseQubits, "too many qubits for a dense matrix");
  const Eigen::Index dim = expected_dim(basis, kept);
  require(entries_.rows() == dim && entries_.cols() == dim, "density matrix has the wrong dimension for its basis");
  require((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol, "density matrix is not Hermitian");
  require(std::abs(entries_.trace() - Complex(1.0)) <= tol, "density matrix trace differs from one");
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(entries_, Eigen::EigenvaluesOnly);
  require(eig.eigenvalues().minCoeff() >= -tol, "density matrix is not positive semidefinite");
}

DensityMatrix rdm_symmetric(const SymmetricState& s, int k) {
  const int n = s.qubits();
  require(k >= 1 && k < n, "retained qubit count must satisfy 1 <= k < N");
  // |D_N,l> = sum_{j+m=l} sqrt(C(k,j) C(N-k,m) / C(N,l)) |D_k,j> |D_{N-k},m>.
  Matrix a = Matrix::Zero(k + 1, n - k + 1);
  for (int j = 0; j <= k; ++j) {
    for (int m = 0; m <= n - k; ++m) {
      a(j, m) = s[j + m] * std::sqrt(binomial(k, j) * binomial(n - k, m) / binomial(n, j + m));
    }
  }
  return DensityMatrix(a * a.adjoint(), BasisKind::Symmetric, k);
}

DensityMatrix rdm_full(const FullState& f, std::span<const int> keep) {
  const int n = f.qubits();
  require(!keep.empty(), "keep set must not be empty");
  std::vector<bool> seen(n + 1, false);
  for (int q : keep) {
    require(q >= 1 && q <= n, "keep set refers to a qubit out of range");
    require(!seen[q], "keep set lists a qubit twice");
    seen[q] = true;
  }
  const Matrix m = split_amplitudes(f, keep);
  return DensityMatrix(m * m.adjoint(), BasisKind::Computational, static_cast<int>(keep.size()));
}

DensityMatrix embed_symmetric(const DensityMatrix& rho) {
  if (rho.basis() == BasisKind::Computational) return rho;
  const int k = rho.kept();
  require(k <= kMaxDenseQubits, "too many qubits for a dense matrix");
  Matrix e = Matrix::Zero(Eigen::Index{1} << k, k + 1);
  for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) {
    const int w = popcount(x);
    e(static_cast<Eigen::Index>(x), w) = 1.0 / std::sqrt(binomial(k, w));
  }
  return DensityMatrix(e * rho.entries() * e.adjoint(), BasisKind::Computational, k);
}

double concurrence(const DensityMatrix& rho) {
  require(rho.kept() == 2, "concurrence needs a two-qubit density matrix");
  const Matrix r = embed_symmetric(rho).entries();
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix flipped = yy * r.conjugate() * yy;
  const Matrix root = hermitian_sqrt(r);
  const Matrix product = root * flipped * root;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (product + product.adjoint()), Eigen::EigenvaluesOnly);
  Eigen::Vector4d lambda = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double three_tangle(const FullState& f) {
  require(f.qubits() == 3, "three-tangle needs a three-qubit state");
  const auto a = [&f](int i, int j, int k) { return f[4 * i + 2 * j + k]; };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

SymmetricState dnk_state(int n, int k, Complex d0, Complex d1) {
  require(n >= 2, "dnk state needs at least two qubits");
  require(k >= 1 && k <= n / 2, "k must satisfy 1 <= k <= N/2");
  const double norm = std::sqrt(std::norm(d0) + std::norm(d1));
  require(norm > 0.0 && std::abs(d1) > 1e-14 * norm, "d1 must be nonzero");
  d0 /= norm;
  d1 /= norm;
  Vector c = Vector::Zero(n + 1);
  for (int r = 0; r <= k; ++r) {
    Complex term = binomial(n - r, k - r);
    for (int i = 0; i < k - r; ++i) term *= d0;
    for (int i = 0; i < r; ++i) term *= d1;
    c(r) = std::sqrt(binomial(n, r)) * term;
  }
  return SymmetricState::from_coefficients(c);
}

std::vector<std::size_t> weight_bitstrings(int n, int r) {
  require(n >= 1 && n <= kMaxDenseQubits, "qubit count out of range");
  require(r >= 0 && r <= n, "weight out of range");
  std::vector<std::size_t> out;
  for (std::size_t x = std::size_t{1} << n; x-- > 0;) {
    if (popcount(x) == r) out.push_back(x);
  }
  std::stable_partition(out.begin(), out.end(), [](std::size_t x) { return (x & 1U) == 0; });
  return out;
}

FullState generalized_dicke_state(int n, int k, std::span<const Complex> alphas,
                                  const std::vector<std::vector<Complex>>& a) {
  require(n >= 1 && n <= kMaxDenseQubits, "qubit count out of range");
  require(k >= 0 && k <= n, "k out of range");
  require(static_cast<int>(alphas.size()) == k + 1, "expected k+1 alpha coefficients");
  require(static_cast<int>(a.size()) == k + 1, "expected k+1 coefficient lists");
  Vector amp = Vector::Zero(Eigen::Index{1} << n);
  for (int r = 0; r <= k; ++r) {
    const auto strings = weight_bitstrings(n, r);
    require(a[r].size() == strings.size(), "coefficient list a[r] must have C(n, r) entries");
    for (std::size_t i = 0; i < strings.size(); ++i) {
      amp(static_cast<Eigen::Index>(strings[i])) = alphas[r] * a[r][i];
    }
  }
  return FullState::from_amplitudes(amp);
}

bool uniqueness_conditions(int n, int k, const std::vector<std::vector<Complex>>& a) {
  if (k < 1 || k > n || static_cast<int>(a.size()) <= k) return false;
  const auto strings = weight_bitstrings(n, k);
  if (a[k].size() != strings.size()) return false;
  const std::size_t first_block = static_cast<std::size_t>(binomial(n - 1, k) + 0.5);
  const std::size_t first_qubit = std::size_t{1} << (n - 1);
  bool block0 = false;
  bool block1 = false;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if ((strings[i] & first_qubit) != 0 || a[k][i] == Complex(0.0)) continue;
    (i < first_block ? block0 : block1) = true;
  }
  return block0 && block1;
}

}  // namespace majorana
