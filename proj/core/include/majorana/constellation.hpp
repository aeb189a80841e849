#pragma once

#include <vector>

#include "majorana/state.hpp"

namespace majorana {

/// A point of the extended complex plane held as a homogeneous pair (z : w).
///
/// The root z/w of the Majorana polynomial is tan(beta/2) e^{i alpha}, so the
/// point maps to the spinor proportional to w|0> + z|1>. The pair is scaled
/// so that its larger-magnitude component equals one; w == 0 is infinity,
/// i.e. the spinor |1>.
class ProjectiveRoot {
 public:
  ProjectiveRoot(Complex z, Complex w);
  explicit ProjectiveRoot(Complex finite) : ProjectiveRoot(finite, 1.0) {}

  static ProjectiveRoot infinity() { return ProjectiveRoot(1.0, 0.0); }
  static ProjectiveRoot from_spinor(const Spinor& s) { return ProjectiveRoot(s.b(), s.a()); }
  static ProjectiveRoot from_angles(double alpha, double beta);

  Complex z() const { return z_; }
  Complex w() const { return w_; }
  bool is_infinite() const { return w_ == Complex(0.0); }
  /// True when |z| <= |w|, i.e. the point is best described by z/w.
  bool in_unit_disk() const { return std::abs(z_) <= std::abs(w_); }

  Spinor spinor() const { return Spinor(w_, z_); }
  double alpha() const { return spinor().alpha(); }
  double beta() const { return spinor().beta(); }

 private:
  Complex z_;
  Complex w_;
};

/// |z_p w_q - z_q w_p| / (|p| |q|); 0 for equal points, 1 for antipodes.
double chordal_distance(const ProjectiveRoot& p, const ProjectiveRoot& q);

/// Image of p under the spinor map m acting as |eps> -> m |eps>.
ProjectiveRoot mobius(const Matrix2& m, const ProjectiveRoot& p);

struct MajoranaPoint {
  ProjectiveRoot root;
  int multiplicity;
};

/// Unordered multiset of Majorana points with multiplicities summing to N.
class Constellation {
 public:
  explicit Constellation(std::vector<MajoranaPoint> points);

  const std::vector<MajoranaPoint>& points() const { return points_; }
  int total() const { return total_; }
  /// One spinor per unit of multiplicity.
  std::vector<Spinor> spinors() const;
  /// Multiplicities sorted in non-increasing order.
  std::vector<int> multiplicities() const;

 private:
  std::vector<MajoranaPoint> points_;
  int total_ = 0;
};

/// Ascending coefficients p_j of the Majorana polynomial, whose roots z = b/a
/// are the constituent spinors: p_j = (-1)^j sqrt(C(N,j)) c_{N-j}.
std::vector<Complex> majorana_polynomial(const SymmetricState& s);

/// Magnitudes at or below this fraction of the largest coefficient are treated
/// as exact zeros when reading off the polynomial's degree.
inline constexpr double kDegreeThreshold = 1e-12;

/// Roots of the Majorana polynomial, completed with points at infinity and
/// merged into multiplicities. Near-coincident candidates are merged when
/// they lie within cluster_tol (chordal) or when the polynomial cannot
/// distinguish them from a single multiple root at working precision.
Constellation majorana_points(const SymmetricState& s, double cluster_tol = kClusterTol);

/// Inverse of majorana_points: the normalized symmetrization of the spinors.
SymmetricState state_from_constellation(const Constellation& c);

/// R(alpha, beta, gamma) = e^{-i alpha sz/2} e^{-i beta sy/2} e^{-i gamma sz/2}.
Matrix2 euler_rotation(double alpha, double beta, double gamma);

/// Collective rotation U^{(x)N}; throws when U is not special unitary within tol.
SymmetricState su2_rotate(const SymmetricState& s, const Matrix2& u, double tol = kDefaultTol);

/// sqrt(C(N,l)) cos^{N-l}(beta/2) (-sin(beta/2))^l e^{i (l - N/2) alpha}.
///
/// Here l indexes the magnetic number m = l - N/2, so it pairs with the Dicke
/// coefficient c_{N-l} of a SymmetricState.
Complex wigner_d_column(int n, int l, double alpha, double beta);

}  // namespace majorana
