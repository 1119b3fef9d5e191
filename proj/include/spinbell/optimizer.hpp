#pragma once

// Multi-start simplex search for the largest Wigner correlator W and the
// largest CHSH combination over measurement directions and, optionally,
// over the state parameters (xi, eta) of both polarizations.

#include <cstdint>
#include <vector>

#include "spinbell/correlations.hpp"
#include "spinbell/execution.hpp"
#include "spinbell/spin_core.hpp"

namespace spinbell {

struct SearchConfig {
  int restarts = 32;
  double tolerance = 1e-9;
  int max_iterations = 2000;  // per restart
  std::uint64_t seed = 0;
  bool fix_state = true;
  /// Which part of the correlator is maximized. Local-only searches probe the
  /// classical bounds (W_lc <= 0, |CHSH_lc| <= 2).
  DensityPart objective_part = DensityPart::Total;
};

/// Throws ConfigError for restarts < 1, tolerance <= 0 or max_iterations < 1.
void validate(const SearchConfig& config);

struct OptimizationResult {
  double best_value = 0.0;
  /// a, b, c for W; a, b, c, d for CHSH
  std::vector<Direction> best_angles;
  EntangledState best_state = EntangledState::singlet();
  int restarts_used = 0;
  int best_restart = 0;
  bool converged = false;
  /// best value reached by each restart, in restart order
  std::vector<double> restart_values;
};

OptimizationResult maximize_w(const EntangledState& state, const SearchConfig& config,
                              Execution exec = Execution::Parallel);

OptimizationResult maximize_chsh(const EntangledState& state, const SearchConfig& config,
                                 Execution exec = Execution::Parallel);

/// Objective re-evaluation at a reported optimum.
double evaluate_w(const EntangledState& state, const std::vector<Direction>& dirs,
                  DensityPart part = DensityPart::Total);
double evaluate_chsh(const EntangledState& state, const std::vector<Direction>& dirs,
                     DensityPart part = DensityPart::Total);

/// Start point `index` in [0,1)^dims: a Halton point shifted by a
/// seed-derived Cranley-Patterson rotation. dims <= 10.
std::vector<double> start_point(std::uint64_t seed, int index, int dims);

}  // namespace spinbell
