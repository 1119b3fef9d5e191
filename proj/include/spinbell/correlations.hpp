#pragma once

// Measuring-outcome correlations evaluated as traces over the local and
// non-local parts of the density operator.

#include <string>
#include <string_view>

#include "spinbell/spin_core.hpp"

namespace spinbell {

struct CorrelationBreakdown {
  double local = 0.0;
  double nonlocal = 0.0;
  double total = 0.0;
};

enum class Sign : int { Plus = 1, Minus = -1 };

/// Which spin sign is detected on particle 1 and on particle 2.
struct SignPair {
  Sign first = Sign::Plus;
  Sign second = Sign::Plus;

  /// Parses "++", "+-", "-+", "--"; throws std::invalid_argument otherwise.
  static SignPair parse(std::string_view text);
  std::string str() const;
  /// Index of the matching outcome in the |1>..|4> ordering.
  int outcome_index() const;

  friend bool operator==(const SignPair&, const SignPair&) = default;
};

/// Equal signs for antiparallel states, opposite signs for parallel ones.
bool is_canonical(Polarization polarization, SignPair signs);
SignPair canonical_signs(Polarization polarization);

/// P(a,b) = Tr[(sigma.a)(sigma.b) rho] = p1 - p2 - p3 + p4.
CorrelationBreakdown spin_correlation(const EntangledState& state, const Direction& a,
                                      const Direction& b);

struct ChshResult {
  /// P(a,b) + P(a,c) + P(d,b) - P(d,c), signed, split into parts.
  CorrelationBreakdown combination;

  double value() const;        // |combination.total|
  double local_value() const;  // |combination.local|
};

ChshResult chsh(const EntangledState& state, const Direction& a, const Direction& b,
                const Direction& c, const Direction& d);

struct NumberCorrelation {
  CorrelationBreakdown value;
  bool canonical = true;
};

/// N(s1 a, s2 b) = <s1 a, s2 b| rho |s1 a, s2 b>. Non-canonical sign pairs are
/// evaluated as well and flagged.
NumberCorrelation number_correlation(const EntangledState& state, SignPair signs,
                                     const Direction& a, const Direction& b);

/// W = N(s1 a, s2 b) - N(s1 a, s2 c) - N(s1 c, s2 b). The first-listed
/// direction of each pair carries the first sign.
NumberCorrelation wigner_w(const EntangledState& state, SignPair signs, const Direction& a,
                           const Direction& b, const Direction& c);

/// Upper envelope of W over azimuths and states:
/// F = [-1 - cos(ta + tb) + cos(tc - tb) + cos(ta - tc)] / 4, never above 1/2.
double wigner_bound_F(double theta_a, double theta_b, double theta_c);

}  // namespace spinbell
