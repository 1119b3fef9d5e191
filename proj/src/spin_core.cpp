#include "spinbell/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinbell {

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi itself
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("Direction: angles must be finite");
  }
  double t = wrap_two_pi(theta);
  if (t > kPi) {
    // (2pi - t, phi + pi) names the same point on the sphere
    t = kTwoPi - t;
    phi += kPi;
  }
  theta_ = t;
  phi_ = wrap_two_pi(phi);
}

Direction Direction::from_degrees(double theta_deg, double phi_deg) {
  return {theta_deg * kPi / 180.0, phi_deg * kPi / 180.0};
}

std::array<double, 3> Direction::unit_vector() const {
  const double s = std::sin(theta_);
  return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

double dot(const Direction& a, const Direction& b) {
  const auto u = a.unit_vector();
  const auto v = b.unit_vector();
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

const char* to_string(Polarization p) {
  return p == Polarization::Antiparallel ? "antiparallel" : "parallel";
}

EntangledState::EntangledState(double xi, double eta, Polarization polarization)
    : polarization_(polarization) {
  if (!std::isfinite(xi) || !std::isfinite(eta)) {
    throw std::invalid_argument("EntangledState: parameters must be finite");
  }
  xi_ = wrap_two_pi(xi);
  eta_ = wrap_two_pi(eta);
}

EntangledState EntangledState::singlet() {
  return {3.0 * kPi / 4.0, 0.0, Polarization::Antiparallel};
}

EntangledState EntangledState::triplet() { return {kPi / 4.0, 0.0, Polarization::Antiparallel}; }

EntangledState EntangledState::bell_parallel() {
  return {kPi / 4.0, 0.0, Polarization::Parallel};
}

Complex EntangledState::c1() const { return std::polar(1.0, eta_) * std::sin(xi_); }

Complex EntangledState::c2() const { return std::polar(1.0, -eta_) * std::cos(xi_); }

TwoSpinVector EntangledState::ket() const {
  TwoSpinVector v = TwoSpinVector::Zero();
  if (polarization_ == Polarization::Antiparallel) {
    v(1) = c1();
    v(2) = c2();
  } else {
    v(0) = c1();
    v(3) = c2();
  }
  return v;
}

CoherentPair coherent_pair(const Direction& dir) {
  const double c = std::cos(dir.theta() / 2.0);
  const double s = std::sin(dir.theta() / 2.0);
  const Complex phase = std::polar(1.0, dir.phi());
  CoherentPair pair;
  pair.plus << c, s * phase;
  pair.minus << s, -c * phase;
  return pair;
}

namespace {

TwoSpinVector kron(const Spinor& x, const Spinor& y) {
  TwoSpinVector v;
  v << x(0) * y(0), x(0) * y(1), x(1) * y(0), x(1) * y(1);
  return v;
}

}  // namespace

std::array<TwoSpinVector, 4> measurement_basis(const Direction& a, const Direction& b) {
  const CoherentPair pa = coherent_pair(a);
  const CoherentPair pb = coherent_pair(b);
  return {kron(pa.plus, pb.plus), kron(pa.plus, pb.minus), kron(pa.minus, pb.plus),
          kron(pa.minus, pb.minus)};
}

DensityMatrix density(const EntangledState& state, DensityPart part) {
  if (part == DensityPart::Total) {
    const TwoSpinVector psi = state.ket();
    return psi * psi.adjoint();
  }

  // the two populated product states
  const int first = state.polarization() == Polarization::Antiparallel ? 1 : 0;
  const int second = state.polarization() == Polarization::Antiparallel ? 2 : 3;
  const Complex c1 = state.c1();
  const Complex c2 = state.c2();

  DensityMatrix rho = DensityMatrix::Zero();
  if (part == DensityPart::Local) {
    rho(first, first) = std::norm(c1);
    rho(second, second) = std::norm(c2);
  } else {
    rho(first, second) = c1 * std::conj(c2);
    rho(second, first) = c2 * std::conj(c1);
  }
  return rho;
}

std::array<double, 4> OutcomeDistribution::clamped() const {
  std::array<double, 4> q{};
  std::transform(p.begin(), p.end(), q.begin(),
                 [](double x) { return std::clamp(x, 0.0, 1.0); });
  return q;
}

OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const Direction& a,
                                         const Direction& b) {
  const auto basis = measurement_basis(a, b);
  OutcomeDistribution d;
  for (int i = 0; i < 4; ++i) {
    d.p[i] = basis[i].dot(rho * basis[i]).real();
  }
  return d;
}

double outcome_probability(const DensityMatrix& rho, const Direction& a, const Direction& b,
                           int outcome) {
  if (outcome < 0 || outcome > 3) {
    throw std::out_of_range("outcome_probability: outcome index must be 0..3");
  }
  const CoherentPair pa = coherent_pair(a);
  const CoherentPair pb = coherent_pair(b);
  const Spinor& x = outcome < 2 ? pa.plus : pa.minus;
  const Spinor& y = outcome % 2 == 0 ? pb.plus : pb.minus;
  const TwoSpinVector v = kron(x, y);
  return v.dot(rho * v).real();
}

}  // namespace spinbell
