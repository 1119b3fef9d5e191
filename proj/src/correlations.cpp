#include "spinbell/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbell {

SignPair SignPair::parse(std::string_view text) {
  auto sign = [](char c) {
    if (c == '+') return Sign::Plus;
    if (c == '-') return Sign::Minus;
    throw std::invalid_argument("SignPair: expected '+' or '-'");
  };
  if (text.size() != 2) {
    throw std::invalid_argument("SignPair: expected two characters such as \"+-\"");
  }
  return {sign(text[0]), sign(text[1])};
}

std::string SignPair::str() const {
  std::string s;
  s += first == Sign::Plus ? '+' : '-';
  s += second == Sign::Plus ? '+' : '-';
  return s;
}

int SignPair::outcome_index() const {
  return (first == Sign::Plus ? 0 : 2) + (second == Sign::Plus ? 0 : 1);
}

bool is_canonical(Polarization polarization, SignPair signs) {
  const bool equal = signs.first == signs.second;
  return polarization == Polarization::Antiparallel ? equal : !equal;
}

SignPair canonical_signs(Polarization polarization) {
  return polarization == Polarization::Antiparallel ? SignPair{Sign::Plus, Sign::Plus}
                                                    : SignPair{Sign::Plus, Sign::Minus};
}

namespace {

struct Parts {
  DensityMatrix total;
  DensityMatrix local;
  DensityMatrix nonlocal;

  explicit Parts(const EntangledState& s)
      : total(density(s, DensityPart::Total)),
        local(density(s, DensityPart::Local)),
        nonlocal(density(s, DensityPart::NonLocal)) {}
};

double parity_sum(const OutcomeDistribution& d) { return d.p[0] - d.p[1] - d.p[2] + d.p[3]; }

CorrelationBreakdown number_entry(const Parts& rho, int outcome, const Direction& a,
                                  const Direction& b) {
  return {outcome_probability(rho.local, a, b, outcome),
          outcome_probability(rho.nonlocal, a, b, outcome),
          outcome_probability(rho.total, a, b, outcome)};
}

}  // namespace

CorrelationBreakdown spin_correlation(const EntangledState& state, const Direction& a,
                                      const Direction& b) {
  const Parts rho(state);
  return {parity_sum(outcome_distribution(rho.local, a, b)),
          parity_sum(outcome_distribution(rho.nonlocal, a, b)),
          parity_sum(outcome_distribution(rho.total, a, b))};
}

double ChshResult::value() const { return std::abs(combination.total); }

double ChshResult::local_value() const { return std::abs(combination.local); }

ChshResult chsh(const EntangledState& state, const Direction& a, const Direction& b,
                const Direction& c, const Direction& d) {
  const auto ab = spin_correlation(state, a, b);
  const auto ac = spin_correlation(state, a, c);
  const auto db = spin_correlation(state, d, b);
  const auto dc = spin_correlation(state, d, c);
  ChshResult r;
  r.combination.local = ab.local + ac.local + db.local - dc.local;
  r.combination.nonlocal = ab.nonlocal + ac.nonlocal + db.nonlocal - dc.nonlocal;
  r.combination.total = ab.total + ac.total + db.total - dc.total;
  return r;
}

NumberCorrelation number_correlation(const EntangledState& state, SignPair signs,
                                     const Direction& a, const Direction& b) {
  const Parts rho(state);
  return {number_entry(rho, signs.outcome_index(), a, b),
          is_canonical(state.polarization(), signs)};
}

NumberCorrelation wigner_w(const EntangledState& state, SignPair signs, const Direction& a,
                           const Direction& b, const Direction& c) {
  const Parts rho(state);
  const int k = signs.outcome_index();
  const auto ab = number_entry(rho, k, a, b);
  const auto ac = number_entry(rho, k, a, c);
  const auto cb = number_entry(rho, k, c, b);
  NumberCorrelation w;
  w.value.local = ab.local - ac.local - cb.local;
  w.value.nonlocal = ab.nonlocal - ac.nonlocal - cb.nonlocal;
  w.value.total = ab.total - ac.total - cb.total;
  w.canonical = is_canonical(state.polarization(), signs);
  return w;
}

double wigner_bound_F(double theta_a, double theta_b, double theta_c) {
  return 0.25 * (-1.0 - std::cos(theta_a + theta_b) + std::cos(theta_c - theta_b) +
                 std::cos(theta_a - theta_c));
}

}  // namespace spinbell
