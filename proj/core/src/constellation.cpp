#include "majorana/constellation.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include <Eigen/LU>

#include "majorana/polynomial.hpp"

namespace majorana {

ProjectiveRoot::ProjectiveRoot(Complex z, Complex w) {
  const double mz = std::abs(z);
  const double mw = std::abs(w);
  require(mz > 0.0 || mw > 0.0, "projective point needs a nonzero component");
  require(std::isfinite(mz) && std::isfinite(mw), "projective point must be finite");
  if (mz >= mw) {
    z_ = 1.0;
    w_ = w / z;
  } else {
    z_ = z / w;
    w_ = 1.0;
  }
}

ProjectiveRoot ProjectiveRoot::from_angles(double alpha, double beta) {
  return from_spinor(Spinor::from_angles(alpha, beta));
}

double chordal_distance(const ProjectiveRoot& p, const ProjectiveRoot& q) {
  const double np = std::sqrt(std::norm(p.z()) + std::norm(p.w()));
  const double nq = std::sqrt(std::norm(q.z()) + std::norm(q.w()));
  return std::abs(p.z() * q.w() - q.z() * p.w()) / (np * nq);
}

ProjectiveRoot mobius(const Matrix2& m, const ProjectiveRoot& p) {
  // Spinor (a, b) = (w, z) maps to m (a, b); the new root is b'/a'.
  const Complex a = m(0, 0) * p.w() + m(0, 1) * p.z();
  const Complex b = m(1, 0) * p.w() + m(1, 1) * p.z();
  return ProjectiveRoot(b, a);
}

Constellation::Constellation(std::vector<MajoranaPoint> points) : points_(std::move(points)) {
  require(!points_.empty(), "constellation needs at least one point");
  for (const auto& p : points_) {
    require(p.multiplicity >= 1, "multiplicities must be positive");
    total_ += p.multiplicity;
  }
}

std::vector<Spinor> Constellation::spinors() const {
  std::vector<Spinor> out;
  out.reserve(total_);
  for (const auto& p : points_) {
    for (int i = 0; i < p.multiplicity; ++i) out.push_back(p.root.spinor());
  }
  return out;
}

std::vector<int> Constellation::multiplicities() const {
  std::vector<int> out;
  for (const auto& p : points_) out.push_back(p.multiplicity);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Complex> majorana_polynomial(const SymmetricState& s) {
  const int n = s.qubits();
  std::vector<Complex> p(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    p[j] = sign * std::sqrt(binomial(n, j)) * s[n - j];
  }
  return p;
}

namespace {

// The polynomial seen from both charts of the sphere: P(z) for points with
// |z| <= 1 and w^N P(1/w) for the rest, so every point sits in a chart where
// its coordinate has modulus at most one.
struct Charts {
  std::vector<Complex> z_chart;
  std::vector<Complex> w_chart;
  int n;

  const std::vector<Complex>& poly(bool use_z) const { return use_z ? z_chart : w_chart; }
};

Complex chart_coordinate(const ProjectiveRoot& p, bool use_z) { return use_z ? p.z() / p.w() : p.w() / p.z(); }

ProjectiveRoot from_chart(Complex x, bool use_z) { return use_z ? ProjectiveRoot(x, 1.0) : ProjectiveRoot(1.0, x); }

// Floating-point evaluation noise relative to the coefficient scale.
double noise_factor(int n) { return 64.0 * DBL_EPSILON * (n + 1); }

struct Cluster {
  ProjectiveRoot center;
  int multiplicity;
};

bool choose_z_chart(const std::vector<ProjectiveRoot>& members) {
  const auto inside =
      std::count_if(members.begin(), members.end(), [](const ProjectiveRoot& p) { return p.in_unit_disk(); });
  return 2 * inside >= static_cast<long>(members.size());
}

Complex centroid(const std::vector<ProjectiveRoot>& members, bool use_z) {
  Complex sum = 0.0;
  for (const auto& p : members) sum += chart_coordinate(p, use_z);
  return sum / static_cast<double>(members.size());
}

// Polishes an m-fold root as the simple root of the (m-1)-th derivative.
Complex polish(const std::vector<Complex>& poly, Complex x, int multiplicity) {
  std::vector<Complex> deriv(poly.begin(), poly.end());
  for (int k = 1; k < multiplicity; ++k) {
    if (deriv.size() <= 1) return x;
    std::vector<Complex> next(deriv.size() - 1);
    for (std::size_t i = 1; i < deriv.size(); ++i) next[i - 1] = deriv[i] * static_cast<double>(i);
    deriv = std::move(next);
  }
  double best = std::abs(evaluate_polynomial(deriv, x));
  for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
    const auto t = taylor_coefficients(deriv, x, 2);
    if (t[1] == Complex(0.0)) break;
    const Complex candidate = x - t[0] / t[1];
    const double value = std::abs(evaluate_polynomial(deriv, candidate));
    if (!(value < best)) break;
    best = value;
    x = candidate;
  }
  return x;
}

// Whether a group of candidate roots is numerically indistinguishable from a
// single root of multiplicity m: every low Taylor coefficient at the centroid
// must be explained by rounding or by a spread of at most tol.
bool single_multiple_root(const Charts& charts, const std::vector<ProjectiveRoot>& members, double tol,
                          Cluster* out) {
  const int m = static_cast<int>(members.size());
  const bool use_z = choose_z_chart(members);
  const auto& poly = charts.poly(use_z);
  Complex center = centroid(members, use_z);
  double spread = 0.0;
  for (const auto& p : members) spread = std::max(spread, std::abs(chart_coordinate(p, use_z) - center));
  const double radius = 2.0 * tol;
  if (m > 1) {
    // The centroid of a perturbed multiple root is far closer to it than the
    // members are; a step comparable to the spread means distinct roots.
    const Complex polished = polish(poly, center, m);
    if (std::abs(polished - center) <= std::max(radius, 0.1 * spread)) center = polished;
  }
  const auto a = taylor_coefficients(poly, center, m + 1);
  const double lead = std::abs(a[m]);
  const double eps = noise_factor(charts.n);
  // Near a root of higher multiplicity the m-th coefficient is itself noise.
  if (lead <= 1e3 * eps * taylor_error_scale(poly, center, m)) return false;
  for (int t = 0; t < m; ++t) {
    const double allowed = eps * taylor_error_scale(poly, center, t) + binomial(m, t) * std::pow(radius, m - t) * lead;
    if (std::abs(a[t]) > allowed) return false;
  }
  *out = Cluster{from_chart(center, use_z), m};
  return true;
}

std::vector<std::vector<int>> linkage_components(const std::vector<ProjectiveRoot>& pts,
                                                 const std::vector<int>& indices, double radius) {
  const int k = static_cast<int>(indices.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (chordal_distance(pts[indices[i]], pts[indices[j]]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(k, -1);
  for (int i = 0; i < k; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(indices[i]);
  }
  return groups;
}

void resolve(const Charts& charts, const std::vector<ProjectiveRoot>& pts, const std::vector<int>& group,
             double radius, double tol, std::vector<Cluster>& out) {
  std::vector<ProjectiveRoot> members;
  for (int i : group) members.push_back(pts[i]);
  Cluster cluster{members.front(), 1};
  if (group.size() == 1) {
    const bool use_z = members.front().in_unit_disk();
    const Complex x = polish(charts.poly(use_z), chart_coordinate(members.front(), use_z), 1);
    out.push_back({from_chart(x, use_z), 1});
    return;
  }
  if (single_multiple_root(charts, members, tol, &cluster)) {
    out.push_back(cluster);
    return;
  }
  // A multiple root may sit close to other roots, so that its perturbed
  // copies interleave with them. Try the k nearest candidates around each
  // member, largest k first, and peel off the first sub-cluster that passes.
  const int m = static_cast<int>(group.size());
  for (int k = m - 1; k >= 2; --k) {
    for (int i = 0; i < m; ++i) {
      std::vector<int> order(group.begin(), group.end());
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return chordal_distance(pts[group[i]], pts[x]) < chordal_distance(pts[group[i]], pts[y]);
      });
      order.resize(k);
      std::vector<ProjectiveRoot> subset;
      for (int j : order) subset.push_back(pts[j]);
      if (!single_multiple_root(charts, subset, tol, &cluster)) continue;
      out.push_back(cluster);
      std::vector<int> rest;
      for (int j : group) {
        if (std::find(order.begin(), order.end(), j) == order.end()) rest.push_back(j);
      }
      for (const auto& sub : linkage_components(pts, rest, radius)) resolve(charts, pts, sub, radius, tol, out);
      return;
    }
  }
  if (radius <= tol) {
    const bool use_z = choose_z_chart(members);
    out.push_back({from_chart(centroid(members, use_z), use_z), static_cast<int>(members.size())});
    return;
  }
  const double next = std::max(radius / 4.0, tol);
  for (const auto& sub : linkage_components(pts, group, next)) resolve(charts, pts, sub, next, tol, out);
}

}  // namespace

Constellation majorana_points(const SymmetricState& s, double cluster_tol) {
  require(cluster_tol > 0.0, "cluster tolerance must be positive");
  const int n = s.qubits();
  const auto p = majorana_polynomial(s);

  double largest = 0.0;
  for (const auto& c : p) largest = std::max(largest, std::abs(c));
  const double cutoff = kDegreeThreshold * largest;
  int degree = n;
  while (degree > 0 && std::abs(p[degree]) <= cutoff) --degree;
  int low = 0;
  while (low < degree && std::abs(p[low]) <= cutoff) ++low;

  Charts charts{p, std::vector<Complex>(p.rbegin(), p.rend()), n};
  for (int j = 0; j <= n; ++j) {
    if (j > degree || j < low) {
      charts.z_chart[j] = 0.0;
      charts.w_chart[n - j] = 0.0;
    }
  }

  std::vector<ProjectiveRoot> candidates;
  candidates.reserve(n);
  for (int i = 0; i < low; ++i) candidates.emplace_back(0.0, 1.0);
  if (degree > low) {
    std::vector<Complex> reduced(p.begin() + low, p.begin() + degree + 1);
    for (const Complex& z : companion_roots(reduced)) candidates.emplace_back(z, 1.0);
  }
  for (int i = degree; i < n; ++i) candidates.push_back(ProjectiveRoot::infinity());

  std::vector<int> all(candidates.size());
  std::iota(all.begin(), all.end(), 0);
  constexpr double kInitialRadius = 0.25;
  std::vector<Cluster> clusters;
  for (const auto& group : linkage_components(candidates, all, kInitialRadius)) {
    resolve(charts, candidates, group, kInitialRadius, cluster_tol, clusters);
  }

  // Final guarantee that distinct points are separated by more than cluster_tol.
  std::vector<MajoranaPoint> points;
  for (const auto& c : clusters) {
    auto near = std::find_if(points.begin(), points.end(), [&](const MajoranaPoint& q) {
      return chordal_distance(q.root, c.center) <= cluster_tol;
    });
    if (near == points.end()) {
      points.push_back({c.center, c.multiplicity});
    } else {
      near->multiplicity += c.multiplicity;
    }
  }
  std::sort(points.begin(), points.end(), [](const MajoranaPoint& x, const MajoranaPoint& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
    if (std::abs(x.root.beta() - y.root.beta()) > 1e-12) return x.root.beta() < y.root.beta();
    return x.root.alpha() < y.root.alpha();
  });
  return Constellation(std::move(points));
}

SymmetricState state_from_constellation(const Constellation& c) {
  const auto spinors = c.spinors();
  return symmetrize(spinors);
}

Matrix2 euler_rotation(double alpha, double beta, double gamma) {
  auto rz = [](double angle) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::polar(1.0, -angle / 2);
    m(1, 1) = std::polar(1.0, angle / 2);
    return m;
  };
  Matrix2 ry;
  ry << std::cos(beta / 2), -std::sin(beta / 2), std::sin(beta / 2), std::cos(beta / 2);
  return rz(alpha) * ry * rz(gamma);
}

SymmetricState su2_rotate(const SymmetricState& s, const Matrix2& u, double tol) {
  const double unitarity = (u.adjoint() * u - Matrix2::Identity()).norm();
  require(unitarity <= tol && std::abs(u.determinant() - 1.0) <= tol, "rotation must be special unitary");
  const Constellation c = majorana_points(s);
  std::vector<MajoranaPoint> moved;
  for (const auto& p : c.points()) moved.push_back({mobius(u, p.root), p.multiplicity});
  return state_from_constellation(Constellation(std::move(moved)));
}

Complex wigner_d_column(int n, int l, double alpha, double beta) {
  require(n >= 1 && l >= 0 && l <= n, "Wigner column index out of range");
  const double magnitude =
      std::sqrt(binomial(n, l)) * std::pow(std::cos(beta / 2), n - l) * std::pow(-std::sin(beta / 2), l);
  return magnitude * std::polar(1.0, (l - 0.5 * n) * alpha);
}

}  // namespace majorana
