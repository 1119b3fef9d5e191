#pragma once

// Two-spin entangled states, spin coherent-state measurement bases and
// outcome probabilities.
//
// Every 4-component object uses the product basis order
//   index 0: |+,+>   index 1: |+,->   index 2: |-,+>   index 3: |-,->
// where |+>, |-> are the sigma_z eigenstates and z is the initial
// spin-polarization axis.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace spinbell {

using Complex = std::complex<double>;
using Spinor = Eigen::Vector2cd;
using TwoSpinVector = Eigen::Vector4cd;
using DensityMatrix = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduces an angle into [0, 2pi).
double wrap_two_pi(double angle);

/// Measurement axis on the unit sphere. Construction normalizes any finite
/// (theta, phi) into theta in [0, pi], phi in [0, 2pi) without changing the
/// unit vector it describes; non-finite input throws std::invalid_argument.
class Direction {
 public:
  Direction() = default;
  Direction(double theta, double phi);

  static Direction from_degrees(double theta_deg, double phi_deg);
  static Direction z_plus() { return {}; }
  static Direction z_minus() { return {kPi, 0.0}; }

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  std::array<double, 3> unit_vector() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

double dot(const Direction& a, const Direction& b);

enum class Polarization { Antiparallel, Parallel };

const char* to_string(Polarization p);

/// c1 |+,-> + c2 |-,+>  (antiparallel) or  c1 |+,+> + c2 |-,->  (parallel),
/// with c1 = e^{i eta} sin xi and c2 = e^{-i eta} cos xi. xi and eta are
/// reduced mod 2pi.
class EntangledState {
 public:
  EntangledState(double xi, double eta, Polarization polarization);

  static EntangledState singlet();
  static EntangledState triplet();
  static EntangledState bell_parallel();

  double xi() const { return xi_; }
  double eta() const { return eta_; }
  Polarization polarization() const { return polarization_; }

  Complex c1() const;
  Complex c2() const;
  TwoSpinVector ket() const;

  friend bool operator==(const EntangledState&, const EntangledState&) = default;

 private:
  double xi_;
  double eta_;
  Polarization polarization_;
};

struct CoherentPair {
  Spinor plus;   // |+r>
  Spinor minus;  // |-r>
};

/// Eigenvectors of sigma.r:
///   |+r> = cos(t/2) |+> + sin(t/2) e^{i phi} |->
///   |-r> = sin(t/2) |+> - cos(t/2) e^{i phi} |->
CoherentPair coherent_pair(const Direction& dir);

/// Product measurement basis |1>..|4> = |+a,+b>, |+a,-b>, |-a,+b>, |-a,-b>.
std::array<TwoSpinVector, 4> measurement_basis(const Direction& a, const Direction& b);

enum class DensityPart { Total, Local, NonLocal };

/// rho = |psi><psi| split into its diagonal (local) and off-diagonal
/// coherence (non-local) parts in the z product basis.
DensityMatrix density(const EntangledState& state, DensityPart part);

/// p1..p4 = <i|rho|i> for the four outcomes (+a,+b), (+a,-b), (-a,+b), (-a,-b).
/// Entries are stored as computed; `clamped()` removes rounding noise for
/// distributions of a full density operator.
struct OutcomeDistribution {
  std::array<double, 4> p{};

  double sum() const { return p[0] + p[1] + p[2] + p[3]; }
  std::array<double, 4> clamped() const;
};

OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const Direction& a,
                                         const Direction& b);

/// Single diagonal element <i|rho|i>, i in 0..3 (outcome order above).
double outcome_probability(const DensityMatrix& rho, const Direction& a, const Direction& b,
                           int outcome);

}  // namespace spinbell
