#include "majorana/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "majorana/optimize.hpp"
#include "multistart.hpp"

namespace majorana {

namespace {

struct Candidate {
  Vector psi;
  double residual;
};

// Groups candidates whose fidelity exceeds 1 - distinct_tol and keeps the best of each.
std::vector<Candidate> distinct(std::vector<Candidate> found, double distinct_tol) {
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.residual < b.residual; });
  std::vector<Candidate> out;
  for (auto& c : found) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Candidate& o) {
      return std::norm(o.psi.dot(c.psi)) >= 1.0 - distinct_tol;
    });
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

DensityMatrix as_computational(const DensityMatrix& rho) { return embed_symmetric(rho); }

// Purification of rho_a with the ancilla as the last qubit. Column 2i+j holds
// sqrt(lambda_i) v_i (x) |j>, so psi(U) = sum_{ij} U_{ji} column(2i+j).
class GaugeFit {
 public:
  GaugeFit(const DensityMatrix& rho_a, const DensityMatrix& rho_b, double rank_tol) : target_(rho_b.entries()) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_a.entries());
    const Eigen::Index dim = rho_a.dim();
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    if (dim > 2) {
      require(lambda(dim - 3) <= rank_tol, "first marginal has rank above two; no single-qubit purification exists");
    }
    basis_ = Matrix::Zero(2 * dim, 4);
    for (int i = 0; i < std::min<int>(2, static_cast<int>(dim)); ++i) {
      const Vector v = std::sqrt(std::max(0.0, lambda(dim - 1 - i))) * eig.eigenvectors().col(dim - 1 - i);
      for (Eigen::Index x = 0; x < dim; ++x) {
        basis_(2 * x, 2 * i) = v(x);
        basis_(2 * x + 1, 2 * i + 1) = v(x);
      }
    }
  }

  // Coefficients u_{2i+j} = U_{ji} and their derivatives for U(theta, phi1, phi2) in SU(2).
  static std::array<Eigen::Vector4cd, 4> chart(const Eigen::VectorXd& p) {
    const double c = std::cos(p(0));
    const double s = std::sin(p(0));
    const Complex e1 = std::polar(1.0, p(1));
    const Complex e2 = std::polar(1.0, p(2));
    const Complex i(0.0, 1.0);
    const Complex u00 = e1 * c, u01 = e2 * s, u10 = -std::conj(e2) * s, u11 = std::conj(e1) * c;
    std::array<Eigen::Vector4cd, 4> out;
    out[0] << u00, u10, u01, u11;
    out[1] << -e1 * s, -std::conj(e2) * c, e2 * c, -std::conj(e1) * s;
    out[2] << i * u00, 0.0, 0.0, -i * u11;
    out[3] << 0.0, -i * u10, i * u01, 0.0;
    return out;
  }

  double operator()(const Eigen::VectorXd& p, Eigen::VectorXd& grad) const {
    const auto u = chart(p);
    const Vector psi = basis_ * u[0];
    const Eigen::Index half = psi.size() / 2;
    const Eigen::Map<const Matrix> m(psi.data(), half, 2);
    const Matrix d = m * m.adjoint() - target_;
    const Matrix dm = d * m;
    for (int k = 0; k < 3; ++k) {
      const Vector dpsi = basis_ * u[k + 1];
      const Eigen::Map<const Matrix> dmk(dpsi.data(), half, 2);
      grad(k) = 4.0 * (dm.conjugate().cwiseProduct(dmk)).sum().real();
    }
    return d.squaredNorm();
  }

  Vector state(const Eigen::VectorXd& p) const { return basis_ * chart(p)[0]; }

 private:
  Matrix basis_;
  Matrix target_;
};

// Precomputed row/column split of the full index for one marginal target.
struct TargetLayout {
  std::vector<Eigen::Index> row;
  std::vector<Eigen::Index> col;
  Eigen::Index rows;
  Eigen::Index cols;
  Matrix rho;
};

TargetLayout layout(const MarginalTarget& t, int n) {
  const int k = static_cast<int>(t.keep.size());
  require(k >= 1 && k <= n, "marginal target keep set has the wrong size");
  std::vector<bool> kept(n + 1, false);
  for (int q : t.keep) {
    require(q >= 1 && q <= n && !kept[q], "marginal target keep set is invalid");
    kept[q] = true;
  }
  const DensityMatrix rho = as_computational(t.rho);
  require(rho.kept() == k, "marginal target matrix does not match its keep set");
  TargetLayout out{{}, {}, Eigen::Index{1} << k, Eigen::Index{1} << (n - k), rho.entries()};
  const std::size_t size = std::size_t{1} << n;
  out.row.resize(size);
  out.col.resize(size);
  for (std::size_t index = 0; index < size; ++index) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    for (int q : t.keep) r = (r << 1) | static_cast<Eigen::Index>((index >> (n - q)) & 1U);
    for (int q = 1; q <= n; ++q) {
      if (!kept[q]) c = (c << 1) | static_cast<Eigen::Index>((index >> (n - q)) & 1U);
    }
    out.row[index] = r;
    out.col[index] = c;
  }
  return out;
}

}  // namespace

ReconstructionResult reconstruct_from_two_marginals(const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                                                    const SearchOptions& options) {
  require(options.restarts >= 1, "restarts must be positive");
  const DensityMatrix a = as_computational(rho_a);
  const DensityMatrix b = as_computational(rho_b);
  require(a.kept() == b.kept(), "marginals must cover the same number of qubits");
  require(a.kept() + 1 <= kMaxDenseQubits, "too many qubits for reconstruction");

  const GaugeFit fit(a, b, options.tol);
  QuasiNewtonOptions qn;
  qn.gradient_tol = 1e-15;
  qn.max_iterations = 500;

  const auto runs = detail::run_indexed(options.restarts, options.parallel, [&](int r) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Eigen::VectorXd start(3);
    start << angle(rng) / 4.0, angle(rng), angle(rng);
    return minimize_lbfgs(fit, start, qn);
  });

  std::vector<Candidate> found;
  for (const auto& run : runs) {
    const double residual = std::sqrt(std::max(0.0, run.value));
    if (residual <= options.tol) found.push_back({canonicalize(fit.state(run.x)), residual});
  }
  if (found.empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& run : runs) best = std::min(best, std::sqrt(std::max(0.0, run.value)));
    throw NumericalError("marginals are inconsistent: best fit residual " + std::to_string(best));
  }
  auto classes = distinct(std::move(found), options.distinct_tol);
  ReconstructionResult result{classes.size() == 1 ? ReconstructionResult::Status::Unique
                                                  : ReconstructionResult::Status::Ambiguous,
                              {},
                              classes.front().residual};
  for (auto& c : classes) result.candidates.push_back(FullState::from_amplitudes(c.psi));
  return result;
}

std::vector<MarginalMatch> marginal_match_search(const std::vector<MarginalTarget>& targets, int n,
                                                 const SearchOptions& options) {
  require(n >= 1 && n <= kMaxDenseQubits, "qubit count out of range");
  require(!targets.empty(), "at least one marginal target is required");
  std::vector<TargetLayout> layouts;
  for (const auto& t : targets) layouts.push_back(layout(t, n));
  const Eigen::Index size = Eigen::Index{1} << n;

  // x packs real and imaginary parts; psi = x / |x|. A weak radial penalty
  // pins |x| near one without moving the minimizers.
  const ValueAndGradient objective = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    const double norm = x.norm();
    const Vector psi = (x.head(size) + Complex(0.0, 1.0) * x.tail(size)) / norm;
    Vector g = Vector::Zero(size);
    double value = 0.0;
    for (const auto& t : layouts) {
      Matrix m = Matrix::Zero(t.rows, t.cols);
      for (Eigen::Index i = 0; i < size; ++i) m(t.row[i], t.col[i]) = psi(i);
      const Matrix d = m * m.adjoint() - t.rho;
      value += d.squaredNorm();
      const Matrix dm = 4.0 * d * m;
      for (Eigen::Index i = 0; i < size; ++i) g(i) += dm(t.row[i], t.col[i]);
    }
    Eigen::VectorXd gpsi(2 * size);
    gpsi << g.real(), g.imag();
    Eigen::VectorXd y(2 * size);
    y << psi.real(), psi.imag();
    grad = (gpsi - y.dot(gpsi) * y) / norm;
    const double radial = norm * norm - 1.0;
    grad += 4.0 * radial * x;
    return value + radial * radial;
  };

  QuasiNewtonOptions qn;
  qn.memory = 12;
  qn.gradient_tol = 1e-14;
  qn.max_iterations = 4000;

  const auto runs = detail::run_indexed(options.restarts, options.parallel, [&](int r) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
    std::normal_distribution<double> normal;
    Eigen::VectorXd start(2 * size);
    for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = normal(rng);
    start.normalize();
    return minimize_lbfgs(objective, start, qn);
  });

  std::vector<Candidate> found;
  for (const auto& run : runs) {
    const Vector psi = run.x.head(size) + Complex(0.0, 1.0) * run.x.tail(size);
    const FullState state = FullState::from_amplitudes(psi);
    double value = 0.0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      value += (rdm_full(state, targets[t].keep).entries() - layouts[t].rho).squaredNorm();
    }
    const double residual = std::sqrt(value);
    if (residual <= options.tol) found.push_back({state.amplitudes(), residual});
  }
  std::vector<MarginalMatch> out;
  for (auto& c : distinct(std::move(found), options.distinct_tol)) {
    out.push_back({FullState::from_amplitudes(c.psi), c.residual});
  }
  return out;
}

}  // namespace majorana
