#include "spinbell/lhv_oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinbell {

Population8::Population8(const std::array<double, 8>& weights) : n_(weights) {
  for (double w : n_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("Population8: weights must be finite and non-negative");
    }
  }
  if (!(total() > 0.0)) {
    throw std::invalid_argument("Population8: total weight must be positive");
  }
}

double Population8::total() const { return std::accumulate(n_.begin(), n_.end(), 0.0); }

Sign Population8::row_sign(int row, Axis axis) {
  const int bit = 2 - static_cast<int>(axis);
  return (row >> bit) & 1 ? Sign::Minus : Sign::Plus;
}

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

double matching_weight(const Population8& pop, Sign sign1, Axis dir1, Sign sign2, Axis dir2,
                       Polarization polarization) {
  if (dir1 == dir2) {
    throw std::invalid_argument("population_correlation: directions must differ");
  }
  // condition on the triple carried by particle 1
  const Sign needed2 = polarization == Polarization::Parallel ? sign2 : flip(sign2);
  double sum = 0.0;
  for (int r = 0; r < 8; ++r) {
    if (Population8::row_sign(r, dir1) == sign1 && Population8::row_sign(r, dir2) == needed2) {
      sum += pop[r];
    }
  }
  return sum;
}

}  // namespace

double population_correlation(const Population8& pop, Sign sign1, Axis dir1, Sign sign2,
                              Axis dir2, Polarization polarization) {
  return matching_weight(pop, sign1, dir1, sign2, dir2, polarization) / pop.total();
}

WignerCheck verify_wigner(const Population8& pop) {
  constexpr auto P = Sign::Plus;
  constexpr auto M = Sign::Minus;
  constexpr auto pl = Polarization::Parallel;
  const double total = pop.total();

  // Unnormalized sums: floating-point addition is monotone, so the set
  // inclusion behind each inequality survives rounding exactly.
  const double ab_pm = matching_weight(pop, P, Axis::A, M, Axis::B, pl);  // n3 + n4
  const double ac_pm = matching_weight(pop, P, Axis::A, M, Axis::C, pl);  // n2 + n4
  const double cb_pm = matching_weight(pop, P, Axis::C, M, Axis::B, pl);  // n3 + n7
  const double ab_mp = matching_weight(pop, M, Axis::A, P, Axis::B, pl);  // n5 + n6
  const double ac_mp = matching_weight(pop, M, Axis::A, P, Axis::C, pl);  // n5 + n7
  const double cb_mp = matching_weight(pop, M, Axis::C, P, Axis::B, pl);  // n2 + n6

  WignerCheck report;
  report.holds_plus_minus = ab_pm <= ac_pm + cb_pm;
  report.holds_minus_plus = ab_mp <= ac_mp + cb_mp;
  report.slack_plus_minus = (ac_pm + cb_pm - ab_pm) / total;
  report.slack_minus_plus = (ac_mp + cb_mp - ab_mp) / total;
  return report;
}

Population8 population_from_local_state(const EntangledState& state, const Direction& a,
                                        const Direction& b, const Direction& c) {
  const std::array<double, 3> theta{a.theta(), b.theta(), c.theta()};
  const double s = std::sin(state.xi());
  const double co = std::cos(state.xi());
  // branch weights of rho_lc; particle 1 is |+> in the first branch, |-> in the second
  const double w_plus = s * s;
  const double w_minus = co * co;

  std::array<double, 8> n{};
  for (int r = 0; r < 8; ++r) {
    double p_plus = 1.0;
    double p_minus = 1.0;
    for (int k = 0; k < 3; ++k) {
      const double ch = std::cos(theta[k] / 2.0);
      const double sh = std::sin(theta[k] / 2.0);
      const bool plus = Population8::row_sign(r, static_cast<Axis>(k)) == Sign::Plus;
      p_plus *= plus ? ch * ch : sh * sh;
      p_minus *= plus ? sh * sh : ch * ch;
    }
    n[r] = w_plus * p_plus + w_minus * p_minus;
  }
  return Population8(n);
}

}  // namespace spinbell
