#include "majorana/geomeasure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "majorana/optimize.hpp"
#include "multistart.hpp"

namespace majorana {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;
constexpr double kPoleSnap = 1e-6;

double wrap_angle(double x) {
  x = std::fmod(x, 2.0 * kPi);
  return x < 0.0 ? x + 2.0 * kPi : x;
}

double overlap_probability(const SymmetricState& s, double alpha, double beta) {
  return std::norm(coherent_overlap(s, CoherentPoint(alpha, beta)));
}

struct Optimum {
  CoherentPoint point;
  double value;
};

}  // namespace

CoherentPoint::CoherentPoint(double alpha, double beta) {
  // F(alpha, 2pi - beta) = F(alpha + pi, beta), so the reflection below keeps
  // the coherent state fixed up to a global phase.
  beta = wrap_angle(beta);
  if (beta > kPi) {
    beta = 2.0 * kPi - beta;
    alpha += kPi;
  }
  beta_ = beta;
  alpha_ = std::sin(beta) < kPoleTol ? 0.0 : wrap_angle(alpha);
}

CoherentPoint CoherentPoint::aligned_with(const ProjectiveRoot& root) {
  return CoherentPoint(root.alpha(), kPi - root.beta());
}

CoherentPoint CoherentPoint::antipode_of(const ProjectiveRoot& root) {
  return CoherentPoint(root.alpha() + kPi, root.beta());
}

double sphere_angle(const CoherentPoint& p, const CoherentPoint& q) {
  const auto unit = [](const CoherentPoint& c) {
    return Eigen::Vector3d(std::sin(c.beta()) * std::cos(c.alpha()), std::sin(c.beta()) * std::sin(c.alpha()),
                           std::cos(c.beta()));
  };
  const Eigen::Vector3d u = unit(p);
  const Eigen::Vector3d v = unit(q);
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

Complex coherent_overlap(const SymmetricState& s, const CoherentPoint& p) {
  const int n = s.qubits();
  const double c = std::cos(p.beta() / 2.0);
  const double sn = std::sin(p.beta() / 2.0);
  Complex total = 0.0;
  for (int r = 0; r <= n; ++r) {
    const double weight = std::sqrt(binomial(n, r)) * std::pow(c, r) * std::pow(sn, n - r);
    total += weight * std::polar(1.0, (n - r) * p.alpha()) * s[r];
  }
  return total;
}

std::vector<LandscapeSample> landscape(const SymmetricState& s, int grid) {
  require(grid >= 2, "landscape grid needs at least two points per axis");
  std::vector<LandscapeSample> out;
  out.reserve(static_cast<std::size_t>(grid) * grid);
  for (int j = 0; j < grid; ++j) {
    const double beta = kPi * j / (grid - 1);
    for (int i = 0; i < grid; ++i) {
      const double alpha = 2.0 * kPi * i / grid;
      out.push_back({alpha, beta, overlap_probability(s, alpha, beta)});
    }
  }
  return out;
}

EntanglementReport geometric_measure(const SymmetricState& s, const GeometricMeasureOptions& options) {
  require(options.grid >= 2, "grid must have at least two points per axis");
  require(options.restarts >= 0, "restarts must be non-negative");

  auto samples = landscape(s, options.grid);
  std::vector<LandscapeSample> ranked = samples;
  const auto top = std::min<std::size_t>(options.restarts, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(top), ranked.end(),
                    [](const auto& a, const auto& b) { return a.value > b.value; });

  std::vector<CoherentPoint> seeds;
  for (std::size_t i = 0; i < top; ++i) seeds.emplace_back(ranked[i].alpha, ranked[i].beta);
  const Constellation constellation = majorana_points(s);
  for (const auto& p : constellation.points()) {
    seeds.push_back(CoherentPoint::aligned_with(p.root));
    seeds.push_back(CoherentPoint::antipode_of(p.root));
  }

  NelderMeadOptions nm;
  nm.initial_step = 2.0 * kPi / options.grid;
  nm.value_tol = 1e-15;
  nm.size_tol = 1e-9;
  nm.max_iterations = 3000;
  const auto negative_f = [&s](const Eigen::VectorXd& x) { return -overlap_probability(s, x(0), x(1)); };

  const auto runs = detail::run_indexed(static_cast<int>(seeds.size()), options.parallel, [&](int i) {
    Eigen::VectorXd start(2);
    start << seeds[i].alpha(), seeds[i].beta();
    const MinimizeResult r = nelder_mead(negative_f, start, nm);
    const CoherentPoint p(r.x(0), r.x(1));
    const double value = overlap_probability(s, p.alpha(), p.beta());
    // Near a pole the azimuth is numerically meaningless; prefer the exact pole
    // when it is at least as good.
    if (std::sin(p.beta()) < kPoleSnap) {
      const CoherentPoint pole(0.0, p.beta() < kPi / 2 ? 0.0 : kPi);
      const double at_pole = overlap_probability(s, pole.alpha(), pole.beta());
      if (at_pole >= value - 1e-12) return Optimum{pole, at_pole};
    }
    return Optimum{p, value};
  });

  std::vector<Optimum> optima(runs.begin(), runs.end());
  std::sort(optima.begin(), optima.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  const double best = optima.front().value;

  const CoherentPoint& lead = optima.front().point;
  bool ring = false;
  if (std::sin(lead.beta()) > 1e-6) {
    constexpr int kRingSamples = 64;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kRingSamples; ++i) {
      const double f = overlap_probability(s, 2.0 * kPi * i / kRingSamples, lead.beta());
      sum += f;
      sum_sq += f * f;
    }
    const double mean = sum / kRingSamples;
    ring = sum_sq / kRingSamples - mean * mean < 1e-10;
  }

  std::vector<CoherentPoint> cpps;
  for (const auto& o : optima) {
    if (o.value < best - options.optimum_tol) break;
    const bool duplicate = std::any_of(cpps.begin(), cpps.end(), [&](const CoherentPoint& c) {
      // On a ring every azimuth is optimal; one representative per ring suffices.
      if (ring && std::sin(o.point.beta()) > 1e-6) return std::abs(c.beta() - o.point.beta()) < 1e-4;
      return sphere_angle(c, o.point) < 1e-4;
    });
    if (!duplicate) cpps.push_back(o.point);
  }

  const double eg = std::clamp(1.0 - best, 0.0, 1.0 - 1e-300);
  EntanglementReport report{eg, -std::log2(1.0 - eg), std::move(cpps), ring, std::nullopt};
  if (options.keep_landscape) report.landscape = std::move(samples);
  return report;
}

DickeMeasure dicke_closed_form(int n, int l) {
  require(n >= 1 && l >= 0 && l <= n, "Dicke index out of range");
  const double nn = n;
  const double eg = 1.0 - binomial(n, l) * std::pow(l / nn, l) * std::pow((n - l) / nn, n - l);
  double beta = 0.0;
  if (l == 0) {
    beta = kPi;
  } else if (l < n) {
    beta = 2.0 * std::atan(std::sqrt((nn - l) / l));
  }
  return {std::max(0.0, eg), CoherentPoint(0.0, beta)};
}

}  // namespace majorana
