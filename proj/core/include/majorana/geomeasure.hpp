#pragma once

#include <optional>
#include <vector>

#include "majorana/constellation.hpp"

namespace majorana {

/// Direction (alpha, beta) of a spin coherent state, alpha in [0, 2pi) and
/// beta in [0, pi]; alpha is zero at the poles.
class CoherentPoint {
 public:
  /// Reduces arbitrary angles to the principal ranges.
  CoherentPoint(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Coherent-state direction whose overlap with a state vanishes on the
  /// given Majorana point (its antipode on the sphere, in these coordinates).
  static CoherentPoint antipode_of(const ProjectiveRoot& root);
  /// Coherent-state direction of the product state built from root's spinor.
  static CoherentPoint aligned_with(const ProjectiveRoot& root);

 private:
  double alpha_;
  double beta_;
};

/// Angle between two directions on the unit sphere.
double sphere_angle(const CoherentPoint& p, const CoherentPoint& q);

/// <alpha, beta | s> = sum_r sqrt(C(N,r)) cos^r(beta/2) sin^{N-r}(beta/2) e^{i(N-r) alpha} c_r.
Complex coherent_overlap(const SymmetricState& s, const CoherentPoint& p);

struct LandscapeSample {
  double alpha;
  double beta;
  double value;
};

/// F = |<alpha, beta|s>|^2 on a grid of `grid` azimuths in [0, 2pi) and
/// `grid` polar angles spanning [0, pi].
std::vector<LandscapeSample> landscape(const SymmetricState& s, int grid);

struct GeometricMeasureOptions {
  int grid = 64;
  /// Number of best grid cells refined by local ascent.
  int restarts = 16;
  bool parallel = false;
  /// Optima within this distance of the maximum overlap are reported.
  double optimum_tol = 1e-9;
  /// Attach the coarse grid to the report.
  bool keep_landscape = false;
};

struct EntanglementReport {
  double eg;
  double log_eg;
  /// Closest product points, best first, pairwise separated on the sphere.
  std::vector<CoherentPoint> cpps;
  /// True when the optimum is a continuous ring in alpha at fixed beta.
  bool ring;
  std::optional<std::vector<LandscapeSample>> landscape;
};

/// E_G = 1 - max F over spin coherent states, with a grid search refined by
/// simplex ascent from the best cells and from every Majorana point and its
/// antipode.
EntanglementReport geometric_measure(const SymmetricState& s, const GeometricMeasureOptions& options = {});

struct DickeMeasure {
  double eg;
  CoherentPoint cpp;
};

/// Closed form for the Dicke state with l excitations:
/// E_G = 1 - C(N,l) (l/N)^l ((N-l)/N)^{N-l} at tan(beta/2) = sqrt((N-l)/l).
DickeMeasure dicke_closed_form(int n, int l);

}  // namespace majorana
