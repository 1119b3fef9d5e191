#pragma once

// Grid evaluation of the Wigner correlator over the six measurement angles.
// Each angle is fixed, swept on a grid, or tied to another angle. Polar
// grids cover [0, pi] including both ends; azimuthal grids cover [0, 2pi)
// with spacing 2pi / points.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "spinbell/correlations.hpp"
#include "spinbell/execution.hpp"
#include "spinbell/spin_core.hpp"

namespace spinbell {

enum class ScanAxis { ThetaA = 0, PhiA, ThetaB, PhiB, ThetaC, PhiC };

inline constexpr std::array<std::string_view, 6> kScanAxisNames{
    "theta_a", "phi_a", "theta_b", "phi_b", "theta_c", "phi_c"};

/// Throws std::invalid_argument on an unknown name.
ScanAxis parse_scan_axis(std::string_view name);

struct AxisBinding {
  enum class Kind { Fixed, Grid, Tied };

  Kind kind = Kind::Fixed;
  double value = 0.0;
  int points = 0;
  ScanAxis target = ScanAxis::ThetaA;

  static AxisBinding fixed(double v) { return {Kind::Fixed, v, 0, ScanAxis::ThetaA}; }
  static AxisBinding grid(int n) { return {Kind::Grid, 0.0, n, ScanAxis::ThetaA}; }
  static AxisBinding tied(ScanAxis t) { return {Kind::Tied, 0.0, 0, t}; }
};

inline constexpr std::size_t kDefaultScanCap = 10'000'000;

struct ScanSpec {
  std::array<AxisBinding, 6> axes{};
  std::size_t max_rows = kDefaultScanCap;

  AxisBinding& operator[](ScanAxis a) { return axes[static_cast<int>(a)]; }
  const AxisBinding& operator[](ScanAxis a) const { return axes[static_cast<int>(a)]; }
};

struct ScanRow {
  std::array<double, 6> angles{};  // theta_a, phi_a, theta_b, phi_b, theta_c, phi_c
  CorrelationBreakdown w;
};

/// Validates the spec and returns the number of rows. Throws ConfigError for
/// grids with fewer than 2 points, tie cycles, ties to unknown axes, or more
/// rows than `max_rows`.
std::size_t scan_row_count(const ScanSpec& spec);

/// Rows in lexicographic grid order: the earliest gridded axis varies slowest.
std::vector<ScanRow> scan_w(const EntangledState& state, SignPair signs, const ScanSpec& spec,
                            Execution exec = Execution::Parallel);

}  // namespace spinbell
