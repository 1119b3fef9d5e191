#include "spinbell/scan.hpp"

#include <stdexcept>
#include <string>

#include "spinbell/errors.hpp"

namespace spinbell {

ScanAxis parse_scan_axis(std::string_view name) {
  for (std::size_t i = 0; i < kScanAxisNames.size(); ++i) {
    if (kScanAxisNames[i] == name) return static_cast<ScanAxis>(i);
  }
  throw std::invalid_argument("unknown scan axis '" + std::string(name) + "'");
}

namespace {

bool is_theta(int axis) { return axis % 2 == 0; }

// Resolves ties to the axis that finally owns the value.
std::array<int, 6> resolve_ties(const ScanSpec& spec) {
  std::array<int, 6> owner{};
  for (int i = 0; i < 6; ++i) {
    int cur = i;
    for (int hops = 0; spec.axes[cur].kind == AxisBinding::Kind::Tied; ++hops) {
      if (hops >= 6) {
        throw ConfigError("scan: tie cycle involving " + std::string(kScanAxisNames[i]));
      }
      cur = static_cast<int>(spec.axes[cur].target);
    }
    owner[i] = cur;
  }
  return owner;
}

double grid_value(int axis, int k, int points) {
  if (is_theta(axis)) return kPi * k / (points - 1);
  return kTwoPi * k / points;
}

struct Layout {
  std::array<int, 6> owner{};
  std::vector<int> grid_axes;  // axes with Kind::Grid, slowest first
  std::size_t rows = 1;
};

Layout make_layout(const ScanSpec& spec) {
  Layout lay;
  lay.owner = resolve_ties(spec);
  for (int i = 0; i < 6; ++i) {
    const auto& b = spec.axes[i];
    if (b.kind != AxisBinding::Kind::Grid) continue;
    if (b.points < 2) {
      throw ConfigError("scan: grid on " + std::string(kScanAxisNames[i]) +
                        " needs at least 2 points");
    }
    lay.grid_axes.push_back(i);
    const auto pts = static_cast<std::size_t>(b.points);
    if (lay.rows > spec.max_rows / pts) {
      throw ConfigError("scan: grid exceeds the row cap of " + std::to_string(spec.max_rows));
    }
    lay.rows *= pts;
  }
  if (lay.rows > spec.max_rows) {
    throw ConfigError("scan: grid exceeds the row cap of " + std::to_string(spec.max_rows));
  }
  return lay;
}

ScanRow evaluate_row(const EntangledState& state, SignPair signs, const ScanSpec& spec,
                     const Layout& lay, std::size_t row) {
  std::array<double, 6> own{};
  for (int i = 0; i < 6; ++i) {
    if (spec.axes[i].kind == AxisBinding::Kind::Fixed) own[i] = spec.axes[i].value;
  }
  for (auto it = lay.grid_axes.rbegin(); it != lay.grid_axes.rend(); ++it) {
    const int pts = spec.axes[*it].points;
    own[*it] = grid_value(*it, static_cast<int>(row % pts), pts);
    row /= pts;
  }

  ScanRow out;
  for (int i = 0; i < 6; ++i) out.angles[i] = own[lay.owner[i]];
  const Direction a(out.angles[0], out.angles[1]);
  const Direction b(out.angles[2], out.angles[3]);
  const Direction c(out.angles[4], out.angles[5]);
  out.w = wigner_w(state, signs, a, b, c).value;
  return out;
}

}  // namespace

std::size_t scan_row_count(const ScanSpec& spec) { return make_layout(spec).rows; }

std::vector<ScanRow> scan_w(const EntangledState& state, SignPair signs, const ScanSpec& spec,
                            Execution exec) {
  const Layout lay = make_layout(spec);
  std::vector<ScanRow> rows(lay.rows);
  if (exec == Execution::Serial) {
    for (std::size_t r = 0; r < lay.rows; ++r) rows[r] = evaluate_row(state, signs, spec, lay, r);
  } else {
    const auto n = static_cast<std::int64_t>(lay.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
      rows[r] = evaluate_row(state, signs, spec, lay, static_cast<std::size_t>(r));
    }
  }
  return rows;
}

}  // namespace spinbell
