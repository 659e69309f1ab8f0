#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "support/oracles.hpp"

using namespace nctorus;

TEST(Expm, ZeroGivesIdentity) {
  const ComplexMatrix z = ComplexMatrix::Zero(3, 3);
  EXPECT_EQ(max_entry_distance(expm(z), ComplexMatrix::Identity(3, 3)), 0.0);
}

TEST(Expm, GeneratorOfRotationsGivesClosedForm) {
  for (double angle : {0.1, 0.7853981633974483, 3.0, 12.5, -40.0}) {
    ComplexMatrix j(2, 2);
    j << 0.0, -angle, angle, 0.0;
    EXPECT_LE(max_entry_distance(expm(j), nctorus::testing::rotation_radians(angle)), 1e-13) << angle;
  }
}

TEST(Expm, AgreesWithEigenMatrixFunctions) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index n = 1 + k % 6;
    const double scale = (k % 4 == 0) ? 4.0 : 0.8;
    const ComplexMatrix a = nctorus::testing::random_matrix(rng, n, scale);
    const ComplexMatrix reference = a.exp();
    const double size = reference.cwiseAbs().maxCoeff();
    EXPECT_LE(max_entry_distance(expm(a), reference), 1e-12 * std::max(1.0, size)) << k;
  }
}

TEST(Expm, AntihermitianGeneratorsGiveUnitaries) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix b = nctorus::testing::random_matrix(rng, 4, 3.0);
    const ComplexMatrix a = b - b.adjoint();
    const ComplexMatrix m = expm(a);
    EXPECT_LE(max_entry_distance(m * m.adjoint(), ComplexMatrix::Identity(4, 4)), 1e-12);
  }
}

TEST(SquareMatrix, RejectsZeroRank) {
  EXPECT_THROW(SquareMatrix<int>(0, 1), Error);
}

TEST(SquareMatrix, MapEntriesKeepsLayout) {
  SquareMatrix<int> m(2, 0);
  m(0, 1) = 3;
  m(1, 0) = 4;
  const auto doubled = map_entries(m, [](int x) { return 2.0 * x; });
  EXPECT_EQ(doubled(0, 1), 6.0);
  EXPECT_EQ(doubled(1, 0), 8.0);
  EXPECT_EQ(doubled(1, 1), 0.0);
}

TEST(Phase, QuarterTurnsAreExact) {
  EXPECT_EQ(cis_turns(0.25), complex(0.0, 1.0));
  EXPECT_EQ(cis_turns(0.5), complex(-1.0, 0.0));
  EXPECT_EQ(cis_turns(-0.25), complex(0.0, -1.0));
  EXPECT_EQ(cis_turns(3.0), complex(1.0, 0.0));
  EXPECT_EQ(cis_rational(-3, 2), complex(-1.0, 0.0));
  EXPECT_NEAR(std::abs(cis_turns(0.1) - std::polar(1.0, 0.2 * std::numbers::pi)), 0.0, 1e-15);
}
