#pragma once

// Classical eight-population model for three measurement directions a, b, c.
//
// Row r (0-based) carries the sign triple over (a, b, c):
//   r=0 (+,+,+)  r=1 (+,+,-)  r=2 (+,-,+)  r=3 (+,-,-)
//   r=4 (-,+,+)  r=5 (-,+,-)  r=6 (-,-,+)  r=7 (-,-,-)
// i.e. bit 2 of r is the a-sign, bit 1 the b-sign, bit 0 the c-sign (set = minus).
// Particle 1 always carries the row's triple. For parallel polarization
// particle 2 carries the same triple; for antiparallel it carries the negated one.

#include <array>

#include "spinbell/correlations.hpp"
#include "spinbell/spin_core.hpp"

namespace spinbell {

enum class Axis { A = 0, B = 1, C = 2 };

class Population8 {
 public:
  /// Throws std::invalid_argument unless every weight is finite and >= 0 and
  /// the total is positive.
  explicit Population8(const std::array<double, 8>& weights);

  const std::array<double, 8>& weights() const { return n_; }
  double operator[](int row) const { return n_[row]; }
  double total() const;

  /// Sign of row `row` along `axis`.
  static Sign row_sign(int row, Axis axis);

 private:
  std::array<double, 8> n_;
};

/// Normalized weight of rows where particle 1 shows `sign1` along `dir1` and
/// particle 2 shows `sign2` along `dir2`. Throws std::invalid_argument if
/// dir1 == dir2.
double population_correlation(const Population8& pop, Sign sign1, Axis dir1, Sign sign2,
                              Axis dir2, Polarization polarization = Polarization::Parallel);

struct WignerCheck {
  /// N(+a,-b) <= N(+a,-c) + N(+c,-b)
  bool holds_plus_minus = false;
  /// N(-a,+b) <= N(-a,+c) + N(-c,+b)
  bool holds_minus_plus = false;
  /// right-hand side minus left-hand side, normalized
  double slack_plus_minus = 0.0;
  double slack_minus_plus = 0.0;
};

WignerCheck verify_wigner(const Population8& pop);

/// Hidden-variable population reproducing the local part of `state`: each
/// branch of rho_lc contributes its weight times the product of independent
/// per-direction sign probabilities of particle 1 (cos^2(t/2) for agreeing
/// with its z-sign, sin^2(t/2) otherwise).
Population8 population_from_local_state(const EntangledState& state, const Direction& a,
                                        const Direction& b, const Direction& c);

}  // namespace spinbell
