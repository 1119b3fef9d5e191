#pragma once

#include <functional>
#include <vector>

namespace spinbell {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  double diameter = 0.0;  // max infinity-norm distance of any vertex from the best
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free Nelder-Mead minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Stops when the simplex diameter drops below
/// `tolerance` or after `max_iterations` iterations.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double initial_step, double tolerance,
                          int max_iterations);

}  // namespace spinbell
