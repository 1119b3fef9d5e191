#include "spinbell/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinbell {

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& pts, std::size_t best) {
  double d = 0.0;
  for (const auto& p : pts) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      d = std::max(d, std::abs(p[k] - pts[best][k]));
    }
  }
  return d;
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double initial_step, double tolerance,
                          int max_iterations) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto blend = [&](double t, std::vector<double>& out) {
    // out = centroid + t * (centroid - worst)
    const auto& worst = pts[order[n]];
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (centroid[k] - worst[k]);
  };

  SimplexResult res;
  int it = 0;
  for (;; ++it) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    res.diameter = simplex_diameter(pts, order[0]);
    if (res.diameter < tolerance) {
      res.converged = true;
      break;
    }
    if (it >= max_iterations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[order[i]][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const std::size_t worst = order[n];
    const double f_best = vals[order[0]];
    const double f_second = vals[order[n - 1]];

    blend(1.0, trial);
    const double f_reflect = f(trial);
    if (f_reflect < f_best) {
      blend(2.0, trial2);
      const double f_expand = f(trial2);
      if (f_expand < f_reflect) {
        pts[worst] = trial2;
        vals[worst] = f_expand;
      } else {
        pts[worst] = trial;
        vals[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < f_second) {
      pts[worst] = trial;
      vals[worst] = f_reflect;
      continue;
    }
    const bool outside = f_reflect < vals[worst];
    blend(outside ? 0.5 : -0.5, trial2);
    const double f_contract = f(trial2);
    if (f_contract < (outside ? f_reflect : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = f_contract;
      continue;
    }
    const auto best_pt = pts[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      auto& p = pts[order[i]];
      for (std::size_t k = 0; k < n; ++k) p[k] = best_pt[k] + 0.5 * (p[k] - best_pt[k]);
      vals[order[i]] = f(p);
    }
  }

  res.x = pts[order[0]];
  res.value = vals[order[0]];
  res.iterations = it;
  return res;
}

}  // namespace spinbell
