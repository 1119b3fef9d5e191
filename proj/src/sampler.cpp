#include "spinbell/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinbell/philox.hpp"

namespace spinbell {

OutcomeSampler::OutcomeSampler(const OutcomeDistribution& dist) {
  prob_ = dist.clamped();
  const double sum = prob_[0] + prob_[1] + prob_[2] + prob_[3];
  if (!(sum > 0.0)) {
    throw std::invalid_argument("OutcomeSampler: distribution has no mass");
  }
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    prob_[k] /= sum;
    acc += prob_[k];
    cdf_[k] = acc;
    if (prob_[k] > 0.0) last_nonzero_ = k;
  }
}

int OutcomeSampler::operator()(double u) const {
  for (int k = 0; k < 4; ++k) {
    if (u < cdf_[k]) return k;
  }
  // u landed above a cdf that rounded short of 1
  return last_nonzero_;
}

ShotCounts sample_outcomes(const EntangledState& state, const Direction& a, const Direction& b,
                           std::uint64_t shots, std::uint64_t seed, std::uint64_t experiment,
                           Execution exec) {
  if (shots == 0) {
    throw std::invalid_argument("sample_outcomes: shots must be >= 1");
  }
  const OutcomeSampler draw(outcome_distribution(density(state, DensityPart::Total), a, b));

  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  auto tally = [&](std::uint64_t i, std::uint64_t& n0, std::uint64_t& n1, std::uint64_t& n2,
                   std::uint64_t& n3) {
    switch (draw(Philox4x32::uniform(seed, experiment, i))) {
      case 0: ++n0; break;
      case 1: ++n1; break;
      case 2: ++n2; break;
      default: ++n3; break;
    }
  };

  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < shots; ++i) tally(i, c0, c1, c2, c3);
  } else {
    const auto n = static_cast<std::int64_t>(shots);
#pragma omp parallel for schedule(static) reduction(+ : c0, c1, c2, c3)
    for (std::int64_t i = 0; i < n; ++i) tally(static_cast<std::uint64_t>(i), c0, c1, c2, c3);
  }

  ShotCounts out;
  out.counts = {c0, c1, c2, c3};
  out.shots = shots;
  return out;
}

namespace {

double frequency(const ShotCounts& counts, int outcome) {
  return static_cast<double>(counts.counts[outcome]) / static_cast<double>(counts.shots);
}

double binomial_variance(double p_hat, std::uint64_t n) {
  return p_hat * (1.0 - p_hat) / static_cast<double>(n);
}

}  // namespace

Estimate estimate_number_correlation(const EntangledState& state, SignPair signs,
                                     const Direction& a, const Direction& b,
                                     std::uint64_t shots, std::uint64_t seed,
                                     std::uint64_t experiment, Execution exec) {
  const ShotCounts counts = sample_outcomes(state, a, b, shots, seed, experiment, exec);
  const double p = frequency(counts, signs.outcome_index());
  return {p, std::sqrt(binomial_variance(p, shots)), shots};
}

WignerEstimate estimate_wigner(const EntangledState& state, SignPair signs, const Direction& a,
                               const Direction& b, const Direction& c,
                               std::uint64_t shots_per_pair, std::uint64_t seed,
                               Execution exec) {
  const int k = signs.outcome_index();
  WignerEstimate out;
  out.experiments[0] = sample_outcomes(state, a, b, shots_per_pair, seed, 0, exec);
  out.experiments[1] = sample_outcomes(state, a, c, shots_per_pair, seed, 1, exec);
  out.experiments[2] = sample_outcomes(state, c, b, shots_per_pair, seed, 2, exec);

  const double f_ab = frequency(out.experiments[0], k);
  const double f_ac = frequency(out.experiments[1], k);
  const double f_cb = frequency(out.experiments[2], k);
  const double var = binomial_variance(f_ab, shots_per_pair) +
                     binomial_variance(f_ac, shots_per_pair) +
                     binomial_variance(f_cb, shots_per_pair);
  out.estimate = {f_ab - f_ac - f_cb, std::sqrt(var), 3 * shots_per_pair};
  return out;
}

}  // namespace spinbell
