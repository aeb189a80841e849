#include "majorana/slocc.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <Eigen/SVD>

namespace majorana {

DegeneracyConfiguration::DegeneracyConfiguration(std::vector<int> multiplicities) : mults_(std::move(multiplicities)) {
  require(!mults_.empty(), "degeneracy configuration needs at least one point");
  for (int m : mults_) require(m >= 1, "multiplicities must be positive");
  std::sort(mults_.begin(), mults_.end(), std::greater<>());
}

int DegeneracyConfiguration::qubits() const {
  int n = 0;
  for (int m : mults_) n += m;
  return n;
}

std::string DegeneracyConfiguration::label() const {
  std::string out = "D_{";
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(mults_[i]);
  }
  return out + "}";
}

LocalOperation::LocalOperation(const Matrix2& m) : m_(m) {
  Eigen::JacobiSVD<Matrix2> svd(m);
  const auto& sv = svd.singularValues();
  require(sv(0) > 0.0 && sv(1) > std::numeric_limits<double>::min() * sv(0) && std::abs(m.determinant()) > 0.0,
          "local operation must be invertible");
  condition_ = sv(0) / sv(1);
}

DegeneracyConfiguration classify(const SymmetricState& s, double cluster_tol) {
  return DegeneracyConfiguration(majorana_points(s, cluster_tol).multiplicities());
}

IloResult apply_ilo(const SymmetricState& s, const LocalOperation& a, double cluster_tol) {
  const Constellation c = majorana_points(s, cluster_tol);
  std::vector<MajoranaPoint> moved;
  moved.reserve(c.points().size());
  for (const auto& p : c.points()) moved.push_back({mobius(a.matrix(), p.root), p.multiplicity});
  return {state_from_constellation(Constellation(std::move(moved))), a.condition_number(),
          a.condition_number() > kIllConditionedThreshold};
}

bool same_family(const SymmetricState& s1, const SymmetricState& s2, double cluster_tol) {
  require(s1.qubits() == s2.qubits(), "qubit count mismatch");
  return classify(s1, cluster_tol) == classify(s2, cluster_tol);
}

std::vector<DegeneracyConfiguration> families(int n) {
  require(n >= 1, "qubit count must be >= 1");
  std::vector<DegeneracyConfiguration> out;
  std::vector<int> parts;
  std::function<void(int, int)> expand = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      expand(remaining - part, part);
      parts.pop_back();
    }
  };
  expand(n, n);
  return out;
}

}  // namespace majorana
