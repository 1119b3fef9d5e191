#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "spinbell/closed_form.hpp"
#include "spinbell/spin_core.hpp"

using namespace spinbell;

namespace {

constexpr double kTol = 1e-12;

EntangledState random_state(std::mt19937_64& rng, Polarization pol) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  return {u(rng), u(rng), pol};
}

Direction random_direction(std::mt19937_64& rng) {
  const auto a = oracle::random_angles(rng);
  return {a.theta, a.phi};
}

}  // namespace

TEST(Direction, NormalizesIntoPrincipalRanges) {
  const Direction d(-0.3, 0.2);
  EXPECT_NEAR(d.theta(), 0.3, kTol);
  EXPECT_NEAR(d.phi(), 0.2 + kPi, kTol);

  const Direction e(kTwoPi + 0.1, -kPi / 2);
  EXPECT_NEAR(e.theta(), 0.1, kTol);
  EXPECT_NEAR(e.phi(), 1.5 * kPi, kTol);

  const Direction south(kPi, kTwoPi);
  EXPECT_DOUBLE_EQ(south.theta(), kPi);
  EXPECT_DOUBLE_EQ(south.phi(), 0.0);
}

TEST(Direction, NormalizationKeepsUnitVector) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = u(rng), p = u(rng);
    const Direction d(t, p);
    ASSERT_GE(d.theta(), 0.0);
    ASSERT_LE(d.theta(), kPi);
    ASSERT_GE(d.phi(), 0.0);
    ASSERT_LT(d.phi(), kTwoPi);
    const auto v = d.unit_vector();
    ASSERT_NEAR(v[0], std::sin(t) * std::cos(p), 1e-12);
    ASSERT_NEAR(v[1], std::sin(t) * std::sin(p), 1e-12);
    ASSERT_NEAR(v[2], std::cos(t), 1e-12);
    ASSERT_NEAR(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 1.0, 1e-12);
  }
}

TEST(Direction, RejectsNonFinite) {
  EXPECT_THROW(Direction(std::nan(""), 0.0), std::invalid_argument);
  EXPECT_THROW(Direction(0.0, INFINITY), std::invalid_argument);
}

TEST(EntangledState, ReducesParametersAndIsNormalized) {
  const EntangledState s(3 * kPi / 4 + 2 * kTwoPi, -kTwoPi, Polarization::Antiparallel);
  EXPECT_NEAR(s.xi(), 3 * kPi / 4, 1e-12);
  EXPECT_NEAR(s.eta(), 0.0, 1e-12);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto st = random_state(rng, Polarization::Parallel);
    EXPECT_NEAR(std::norm(st.c1()) + std::norm(st.c2()), 1.0, 1e-15);
  }
  EXPECT_THROW(EntangledState(NAN, 0.0, Polarization::Parallel), std::invalid_argument);
}

TEST(CoherentPair, PolesAndEquator) {
  const auto north = coherent_pair(Direction(0.0, 0.0));
  EXPECT_NEAR(std::abs(north.plus(0) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(north.plus(1)), 0.0, kTol);
  EXPECT_NEAR(std::abs(north.minus(0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(north.minus(1) - Complex(-1, 0)), 0.0, kTol);

  const auto south = coherent_pair(Direction(kPi, 0.0));
  EXPECT_NEAR(std::abs(south.plus(0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(south.plus(1) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(south.minus(0) - Complex(1, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(south.minus(1)), 0.0, kTol);

  const auto y = coherent_pair(Direction(kPi / 2, kPi / 2));
  EXPECT_NEAR(std::abs(y.plus(0) - Complex(1 / std::sqrt(2.0), 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(y.plus(1) - Complex(0, 1 / std::sqrt(2.0))), 0.0, kTol);
}

TEST(CoherentPair, OrthonormalEigenvectors) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Direction d = random_direction(rng);
    const auto p = coherent_pair(d);
    ASSERT_NEAR(p.plus.squaredNorm(), 1.0, kTol);
    ASSERT_NEAR(p.minus.squaredNorm(), 1.0, kTol);
    ASSERT_NEAR(std::abs(p.plus.dot(p.minus)), 0.0, kTol);

    // sigma.r |+-r> = +-|+-r>
    const auto v = d.unit_vector();
    Eigen::Matrix2cd sr;
    sr << v[2], Complex(v[0], -v[1]), Complex(v[0], v[1]), -v[2];
    ASSERT_LT((sr * p.plus - p.plus).norm(), kTol);
    ASSERT_LT((sr * p.minus + p.minus).norm(), kTol);
  }
}

TEST(MeasurementBasis, AlignedWithZIsProductBasis) {
  const auto basis = measurement_basis(Direction::z_plus(), Direction::z_plus());
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(basis[i](k)), i == k ? 1.0 : 0.0, kTol);
    }
  }
}

TEST(MeasurementBasis, OppositeZSwapsSecondLabel) {
  // |+z,+(-z)> = |+,->, |+z,-(-z)> = |+,+>, ... up to phases
  const auto basis = measurement_basis(Direction::z_plus(), Direction::z_minus());
  const int expected[4] = {1, 0, 3, 2};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(basis[i](k)), k == expected[i] ? 1.0 : 0.0, kTol);
    }
  }
}

TEST(MeasurementBasis, GramMatrixIsIdentity) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 1000; ++n) {
    const auto basis = measurement_basis(random_direction(rng), random_direction(rng));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Complex g = basis[i].dot(basis[j]);
        ASSERT_NEAR(std::abs(g - Complex(i == j ? 1.0 : 0.0, 0.0)), 0.0, kTol);
      }
    }
  }
}

TEST(Density, SingletParts) {
  const auto s = EntangledState::singlet();
  const auto local = density(s, DensityPart::Local);
  const double diag[4] = {0.0, 0.5, 0.5, 0.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(local(i, i).real(), diag[i], kTol);
  const auto total = density(s, DensityPart::Total);
  EXPECT_NEAR(std::abs(total(1, 2) - Complex(-0.5, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(total(2, 1) - Complex(-0.5, 0)), 0.0, kTol);
}

TEST(Density, ProductStateHasNoCoherence) {
  const EntangledState s(0.0, 1.234, Polarization::Antiparallel);
  EXPECT_LT(density(s, DensityPart::NonLocal).norm(), kTol);
  const auto total = density(s, DensityPart::Total);
  DensityMatrix expected = DensityMatrix::Zero();
  expected(2, 2) = 1.0;
  EXPECT_LT((total - expected).norm(), kTol);
}

TEST(Density, ParallelBellState) {
  const auto rho = density(EntangledState::bell_parallel(), DensityPart::Total);
  EXPECT_NEAR(rho(0, 0).real(), 0.5, kTol);
  EXPECT_NEAR(rho(3, 3).real(), 0.5, kTol);
  EXPECT_NEAR(std::abs(rho(0, 3) - Complex(0.5, 0)), 0.0, kTol);
  EXPECT_NEAR(std::abs(rho(1, 1)) + std::abs(rho(2, 2)), 0.0, kTol);
}

TEST(Density, InvariantsOverRandomStates) {
  std::mt19937_64 rng(2024);
  for (auto pol : {Polarization::Antiparallel, Polarization::Parallel}) {
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_state(rng, pol);
      const auto total = density(s, DensityPart::Total);
      const auto local = density(s, DensityPart::Local);
      const auto nonlocal = density(s, DensityPart::NonLocal);

      ASSERT_LT((total - local - nonlocal).cwiseAbs().maxCoeff(), kTol);
      ASSERT_LT((total - total.adjoint()).cwiseAbs().maxCoeff(), kTol);
      ASSERT_NEAR(total.trace().real(), 1.0, kTol);
      ASSERT_NEAR(local.trace().real(), 1.0, kTol);
      ASSERT_NEAR(std::abs(nonlocal.trace()), 0.0, kTol);
      ASSERT_NEAR((total * total).trace().real(), 1.0, 1e-10);

      Eigen::SelfAdjointEigenSolver<DensityMatrix> es(total);
      ASSERT_GE(es.eigenvalues().minCoeff(), -1e-10);

      for (int r = 0; r < 4; ++r) {
        ASSERT_GE(local(r, r).real(), 0.0);
        for (int c = 0; c < 4; ++c) {
          if (r != c) ASSERT_EQ(local(r, c), Complex(0, 0));
        }
      }
      // populated block
      const bool anti = pol == Polarization::Antiparallel;
      ASSERT_EQ(total(anti ? 0 : 1, anti ? 0 : 1), Complex(0, 0));
      ASSERT_EQ(total(anti ? 3 : 2, anti ? 3 : 2), Complex(0, 0));
    }
  }
}

TEST(OutcomeDistribution, SingletEqualAxesAnticorrelated) {
  const auto rho = density(EntangledState::singlet(), DensityPart::Total);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Direction a = random_direction(rng);
    const auto d = outcome_distribution(rho, a, a);
    EXPECT_NEAR(d.p[0], 0.0, kTol);
    EXPECT_NEAR(d.p[1], 0.5, kTol);
    EXPECT_NEAR(d.p[2], 0.5, kTol);
    EXPECT_NEAR(d.p[3], 0.0, kTol);
  }
}

TEST(OutcomeDistribution, SingletMatchesClosedFormAndStateVector) {
  const auto s = EntangledState::singlet();
  const auto rho = density(s, DensityPart::Total);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const auto ga = oracle::random_angles(rng), gb = oracle::random_angles(rng);
    const Direction a(ga.theta, ga.phi), b(gb.theta, gb.phi);
    const double p1 = outcome_distribution(rho, a, b).p[0];
    const double closed = closed_form::number_local_pp(3 * kPi / 4, a, b) +
                          closed_form::number_nonlocal_antiparallel(3 * kPi / 4, 0.0, a, b);
    ASSERT_NEAR(p1, closed, kTol);
    ASSERT_NEAR(p1, oracle::number(3 * M_PI / 4, 0, false, 1, ga.theta, ga.phi, 1, gb.theta, gb.phi),
                kTol);
  }
}

TEST(OutcomeDistribution, LocalPartDiagonalReadout) {
  const EntangledState s(kPi / 3, 0.0, Polarization::Antiparallel);
  const auto d = outcome_distribution(density(s, DensityPart::Local), Direction::z_plus(),
                                      Direction::z_plus());
  EXPECT_NEAR(d.p[0], 0.0, kTol);
  EXPECT_NEAR(d.p[1], 0.75, kTol);
  EXPECT_NEAR(d.p[2], 0.25, kTol);
  EXPECT_NEAR(d.p[3], 0.0, kTol);
}

TEST(OutcomeDistribution, PartSumsAndCoherenceSymmetry) {
  std::mt19937_64 rng(77);
  for (auto pol : {Polarization::Antiparallel, Polarization::Parallel}) {
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_state(rng, pol);
      const Direction a = random_direction(rng), b = random_direction(rng);
      const auto t = outcome_distribution(density(s, DensityPart::Total), a, b);
      const auto l = outcome_distribution(density(s, DensityPart::Local), a, b);
      const auto n = outcome_distribution(density(s, DensityPart::NonLocal), a, b);
      ASSERT_NEAR(t.sum(), 1.0, 1e-10);
      ASSERT_NEAR(l.sum(), 1.0, 1e-10);
      ASSERT_NEAR(n.sum(), 0.0, 1e-10);
      for (int k = 0; k < 4; ++k) {
        ASSERT_GE(t.p[k], -1e-12);
        ASSERT_LE(t.p[k], 1 + 1e-12);
        ASSERT_GE(l.p[k], -1e-12);
        ASSERT_NEAR(outcome_probability(density(s, DensityPart::Total), a, b, k), t.p[k], 1e-15);
      }
      if (pol == Polarization::Antiparallel) {
        ASSERT_NEAR(n.p[0], n.p[3], kTol);
      } else {
        ASSERT_NEAR(n.p[1], n.p[2], kTol);
      }
    }
  }
}

TEST(OutcomeDistribution, ClampedRemovesRoundingNoise) {
  OutcomeDistribution d;
  d.p = {-1e-13, 0.5, 0.5 + 1e-13, 0.0};
  const auto q = d.clamped();
  EXPECT_EQ(q[0], 0.0);
  EXPECT_EQ(q[1], 0.5);
  EXPECT_EQ(q[2], 0.5 + 1e-13);
  EXPECT_THROW(outcome_probability(DensityMatrix::Zero(), {}, {}, 4), std::out_of_range);
}
