#include "spinbell/optimizer.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "spinbell/errors.hpp"
#include "spinbell/nelder_mead.hpp"

namespace spinbell {

void validate(const SearchConfig& config) {
  if (config.restarts < 1) throw ConfigError("search: restarts must be >= 1");
  if (!(config.tolerance > 0.0)) throw ConfigError("search: tolerance must be > 0");
  if (config.max_iterations < 1) throw ConfigError("search: max_iterations must be >= 1");
}

namespace {

double pick(const CorrelationBreakdown& c, DensityPart part) {
  switch (part) {
    case DensityPart::Local: return c.local;
    case DensityPart::NonLocal: return c.nonlocal;
    default: return c.total;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

double reflect_theta(double t) {
  t = wrap_two_pi(t);
  return t > kPi ? kTwoPi - t : t;
}

enum class Target { Wigner, Chsh };

// Variable layout: (theta_k, phi_k) for each direction, then xi, eta when the
// state is free.
struct Problem {
  Target target;
  int n_dirs;
  bool free_state;
  EntangledState fixed;
  DensityPart part;

  int dims() const { return 2 * n_dirs + (free_state ? 2 : 0); }

  std::vector<Direction> directions(const std::vector<double>& x) const {
    std::vector<Direction> d;
    d.reserve(n_dirs);
    for (int k = 0; k < n_dirs; ++k) d.emplace_back(reflect_theta(x[2 * k]), x[2 * k + 1]);
    return d;
  }

  EntangledState state(const std::vector<double>& x, Polarization pol) const {
    if (!free_state) return fixed;
    return {x[2 * n_dirs], x[2 * n_dirs + 1], pol};
  }

  double value(const EntangledState& s, const std::vector<Direction>& d) const {
    return target == Target::Wigner ? evaluate_w(s, d, part) : evaluate_chsh(s, d, part);
  }
};

struct RestartOutcome {
  double value = -1e300;
  std::vector<Direction> dirs;
  std::optional<EntangledState> state;
  bool converged = false;
};

RestartOutcome run_restart(const Problem& prob, const SearchConfig& cfg, int index) {
  const int dims = prob.dims();
  std::vector<double> x0 = start_point(cfg.seed, index, dims);
  for (int k = 0; k < dims; ++k) {
    // theta coordinates span [0, pi]; azimuths and state angles span [0, 2pi)
    const bool is_theta = k < 2 * prob.n_dirs && k % 2 == 0;
    x0[k] *= is_theta ? kPi : kTwoPi;
  }

  std::vector<Polarization> pols{prob.fixed.polarization()};
  if (prob.free_state) pols = {Polarization::Antiparallel, Polarization::Parallel};

  RestartOutcome best;
  for (Polarization pol : pols) {
    auto neg = [&](const std::vector<double>& x) {
      return -prob.value(prob.state(x, pol), prob.directions(x));
    };
    const SimplexResult r = nelder_mead(neg, x0, 0.5, cfg.tolerance, cfg.max_iterations);
    const auto dirs = prob.directions(r.x);
    const auto st = prob.state(r.x, pol);
    const double v = prob.value(st, dirs);
    if (v > best.value) {
      best = {v, dirs, st, r.converged};
    }
  }
  return best;
}

OptimizationResult maximize(const Problem& prob, const SearchConfig& cfg, Execution exec) {
  validate(cfg);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  if (exec == Execution::Serial) {
    for (int i = 0; i < cfg.restarts; ++i) outcomes[i] = run_restart(prob, cfg, i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cfg.restarts; ++i) outcomes[i] = run_restart(prob, cfg, i);
  }

  OptimizationResult res;
  res.restarts_used = cfg.restarts;
  for (int i = 0; i < cfg.restarts; ++i) {
    res.restart_values.push_back(outcomes[i].value);
    // strict comparison keeps the lowest index among ties
    if (i == 0 || outcomes[i].value > outcomes[res.best_restart].value) res.best_restart = i;
  }
  const RestartOutcome& best = outcomes[res.best_restart];
  res.best_value = best.value;
  res.best_angles = best.dirs;
  res.best_state = *best.state;
  res.converged = best.converged;
  return res;
}

}  // namespace

double evaluate_w(const EntangledState& state, const std::vector<Direction>& dirs,
                  DensityPart part) {
  if (dirs.size() != 3) throw std::invalid_argument("evaluate_w: need 3 directions");
  const auto w = wigner_w(state, canonical_signs(state.polarization()), dirs[0], dirs[1], dirs[2]);
  return pick(w.value, part);
}

double evaluate_chsh(const EntangledState& state, const std::vector<Direction>& dirs,
                     DensityPart part) {
  if (dirs.size() != 4) throw std::invalid_argument("evaluate_chsh: need 4 directions");
  const auto r = chsh(state, dirs[0], dirs[1], dirs[2], dirs[3]);
  return std::abs(pick(r.combination, part));
}

std::vector<double> start_point(std::uint64_t seed, int index, int dims) {
  static constexpr std::array<std::uint64_t, 10> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (dims < 0 || dims > static_cast<int>(kPrimes.size())) {
    throw std::invalid_argument("start_point: at most 10 dimensions");
  }
  std::vector<double> x(dims);
  for (int k = 0; k < dims; ++k) {
    const double shift =
        static_cast<double>(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(k)) >> 11) *
        0x1.0p-53;
    double v = radical_inverse(static_cast<std::uint64_t>(index) + 1, kPrimes[k]) + shift;
    x[k] = v - std::floor(v);
  }
  return x;
}

OptimizationResult maximize_w(const EntangledState& state, const SearchConfig& config,
                              Execution exec) {
  return maximize({Target::Wigner, 3, !config.fix_state, state, config.objective_part}, config,
                  exec);
}

OptimizationResult maximize_chsh(const EntangledState& state, const SearchConfig& config,
                                 Execution exec) {
  return maximize({Target::Chsh, 4, !config.fix_state, state, config.objective_part}, config,
                  exec);
}

}  // namespace spinbell
