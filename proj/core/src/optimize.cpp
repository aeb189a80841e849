#include "majorana/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <vector>

namespace majorana {

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& start,
                           const NelderMeadOptions& options) {
  const Eigen::Index dim = start.size();
  std::vector<Eigen::VectorXd> simplex(dim + 1, start);
  std::vector<double> values(dim + 1);
  for (Eigen::Index i = 0; i < dim; ++i) simplex[i + 1](i) += options.initial_step;
  for (Eigen::Index i = 0; i <= dim; ++i) values[i] = f(simplex[i]);

  std::vector<Eigen::Index> order(dim + 1);
  MinimizeResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const auto best = order.front();
    const auto worst = order.back();
    const auto second = order[dim - 1];

    double diameter = 0.0;
    for (Eigen::Index i = 0; i <= dim; ++i) diameter = std::max(diameter, (simplex[i] - simplex[best]).norm());
    if (values[worst] - values[best] <= options.value_tol && diameter <= options.size_tol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i <= dim; ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(dim);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double fr = f(reflected);
    if (fr < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = f(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (Eigen::Index i = 0; i <= dim; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }
  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  result.x = simplex[best];
  result.value = values[best];
  result.iterations = iter;
  return result;
}

MinimizeResult minimize_lbfgs(const ValueAndGradient& f, const Eigen::VectorXd& start,
                              const QuasiNewtonOptions& options) {
  constexpr double kArmijo = 1e-4;
  const Eigen::Index dim = start.size();
  Eigen::VectorXd x = start;
  Eigen::VectorXd g(dim);
  double value = f(x, g);

  std::deque<Eigen::VectorXd> s_hist;
  std::deque<Eigen::VectorXd> y_hist;
  std::deque<double> rho_hist;

  MinimizeResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() <= options.gradient_tol || value <= options.value_floor) {
      result.converged = true;
      break;
    }

    // Two-loop recursion for the search direction.
    Eigen::VectorXd q = g;
    std::vector<double> alphas(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alphas[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alphas[i] * y_hist[i];
    }
    if (!s_hist.empty()) {
      q *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    } else {
      q /= std::max(1.0, g.norm());
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(q);
      q += s_hist[i] * (alphas[i] - beta);
    }
    Eigen::VectorXd direction = -q;
    double slope = g.dot(direction);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      direction = -g / std::max(1.0, g.norm());
      slope = g.dot(direction);
    }

    double step = 1.0;
    Eigen::VectorXd x_new(dim);
    Eigen::VectorXd g_new(dim);
    double value_new = value;
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      x_new = x + step * direction;
      value_new = f(x_new, g_new);
      if (std::isfinite(value_new) && value_new <= value + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.converged = g.lpNorm<Eigen::Infinity>() <= std::sqrt(options.gradient_tol);
      break;
    }

    Eigen::VectorXd s = x_new - x;
    Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > options.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    const bool stalled = value - value_new <= 1e-18 * std::max(1.0, std::abs(value)) && step < 1e-10;
    x = x_new;
    g = g_new;
    value = value_new;
    if (stalled) break;
  }
  result.x = x;
  result.value = value;
  result.iterations = iter;
  return result;
}

}  // namespace majorana
