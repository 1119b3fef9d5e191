#pragma once

// Finite-shot measurement experiments drawn from the quantum outcome
// distribution. Stream `experiment` of generator key `seed` drives one
// experiment; draw i of that stream decides shot i.

#include <array>
#include <cstdint>

#include "spinbell/correlations.hpp"
#include "spinbell/execution.hpp"
#include "spinbell/spin_core.hpp"

namespace spinbell {

struct ShotCounts {
  std::array<std::uint64_t, 4> counts{};  // outcomes |1>..|4>
  std::uint64_t shots = 0;

  friend bool operator==(const ShotCounts&, const ShotCounts&) = default;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
};

/// Maps a uniform draw to an outcome by inverse CDF over clamped,
/// renormalized probabilities; ties go to the lower index and zero-probability
/// outcomes are never returned.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(const OutcomeDistribution& dist);
  int operator()(double u) const;
  const std::array<double, 4>& probabilities() const { return prob_; }

 private:
  std::array<double, 4> prob_{};
  std::array<double, 4> cdf_{};
  int last_nonzero_ = 0;
};

/// Multinomial draw of `shots` outcomes for directions (a, b). Throws
/// std::invalid_argument when shots == 0.
ShotCounts sample_outcomes(const EntangledState& state, const Direction& a, const Direction& b,
                           std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t experiment = 0,
                           Execution exec = Execution::Parallel);

/// Frequency of the `signs` outcome with plug-in binomial standard error.
Estimate estimate_number_correlation(const EntangledState& state, SignPair signs,
                                     const Direction& a, const Direction& b,
                                     std::uint64_t shots, std::uint64_t seed,
                                     std::uint64_t experiment = 0,
                                     Execution exec = Execution::Parallel);

struct WignerEstimate {
  Estimate estimate;
  /// experiments on (a, b), (a, c), (c, b); streams 0, 1, 2
  std::array<ShotCounts, 3> experiments{};
};

/// W from three independent experiments; std_error is the root-sum-square of
/// the three binomial standard errors.
WignerEstimate estimate_wigner(const EntangledState& state, SignPair signs, const Direction& a,
                               const Direction& b, const Direction& c,
                               std::uint64_t shots_per_pair, std::uint64_t seed,
                               Execution exec = Execution::Parallel);

}  // namespace spinbell
