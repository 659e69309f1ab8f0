#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace nctorus;
using nctorus::testing::block_diag;
using nctorus::testing::rotation_radians;

namespace {

complex expected_phase(double turns) { return std::polar(1.0, two_pi * turns); }

void expect_same(const CharacterMonomial& a, const CharacterMonomial& b, double tol = 1e-12) {
  EXPECT_LE(std::abs(a.c - b.c), tol);
  EXPECT_EQ(a.uleg.frequency, b.uleg.frequency);
  EXPECT_EQ(a.vleg.frequency, b.vleg.frequency);
}

}  // namespace

TEST(ShiftUp, CharactersAreEigenvectors) {
  EXPECT_EQ(shift_up({0.0}).first, complex(1.0));
  const double c_u = 0.37;
  const auto [phase, ch] = shift_up({c_u});
  EXPECT_NEAR(std::abs(phase - expected_phase(c_u)), 0.0, 1e-15);
  EXPECT_EQ(ch.frequency, c_u);
  EXPECT_EQ(shift_up({1.0}).first, complex(1.0));
  // Pointwise: e^{ia(x + 2pi)} = phase * e^{iax}
  for (double x : {-3.0, 0.0, 1.7, 10.0}) {
    EXPECT_NEAR(std::abs(Character{c_u}(x + two_pi) - phase * Character{c_u}(x)), 0.0, 1e-13);
  }
}

TEST(ShiftUp, UnitModulusAndFrequencyPreserved) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> f(-10, 10);
  for (int k = 0; k < 200; ++k) {
    const Character ch{f(rng)};
    const auto [phase, out] = shift_up(ch);
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-15);
    EXPECT_EQ(out, ch);
  }
}

TEST(DeckActInf, Examples) {
  const double c_u = 0.3, c_v = 0.45;
  const CharacterMonomial gauge{1.0, {c_u}, {c_v}};
  expect_same(deck_act_inf(1, 0, gauge), {expected_phase(c_u), {c_u}, {c_v}});
  expect_same(deck_act_inf(0, 0, gauge), gauge, 0.0);
  expect_same(deck_act_inf(0, 2, gauge), {expected_phase(2 * c_v), {c_u}, {c_v}});
}

TEST(DeckActInf, IsAZ2Action) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> f(-3, 3);
  std::uniform_int_distribution<int> n(-4, 4);
  for (int k = 0; k < 200; ++k) {
    const CharacterMonomial m{std::polar(1.0, f(rng)), {f(rng)}, {f(rng)}};
    const int p = n(rng), q = n(rng), p2 = n(rng), q2 = n(rng);
    expect_same(deck_act_inf(p2, q2, deck_act_inf(p, q, m)), deck_act_inf(p + p2, q + q2, m), 1e-12);
  }
}

TEST(BaseAct, GeneratorsRaiseLegFrequency) {
  const CharacterMonomial m{1.0, {0.2}, {0.7}};
  expect_same(base_act(Leg::u, m), {1.0, {1.2}, {0.7}}, 0.0);
  expect_same(base_act(Leg::v, m), {1.0, {0.2}, {1.7}}, 0.0);
  expect_same(base_act(Leg::v, base_act(Leg::u, m)), base_act(Leg::u, base_act(Leg::v, m)), 0.0);
}

TEST(BaseAct, CommutesWithDeckAction) {
  // g(pi(a) U) = pi(a) g(U) for the generators a = u, v: the base factor
  // e^{ix} is 2 pi periodic.
  const CharacterMonomial m{1.0, {0.31}, {-0.6}};
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      expect_same(deck_act_inf(p, q, base_act(Leg::u, m)), base_act(Leg::u, deck_act_inf(p, q, m)));
      expect_same(deck_act_inf(p, q, base_act(Leg::v, m)), base_act(Leg::v, deck_act_inf(p, q, m)));
    }
  }
}

TEST(LegWord, SameLegFactorsCancel) {
  const CharacterMonomial m{complex(0, 1), {0.4}, {0.9}};
  const auto w = LegWord::from(m) * LegWord::from(m).inverse();
  EXPECT_TRUE(w.is_scalar());
  EXPECT_NEAR(std::abs(w.scalar() - 1.0), 0.0, 1e-15);
}

TEST(LegWord, CrossLegProductsAreUnsupported) {
  const CharacterMonomial a{1.0, {0.4}, {0.9}};
  const CharacterMonomial b{1.0, {0.1}, {0.0}};
  try {
    (a * b).normal_form();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedProduct);
  }
  // a leg-disjoint product stays in normal order
  const CharacterMonomial c{1.0, {0.0}, {0.3}};
  expect_same((b * c).normal_form(), {1.0, {0.1}, {0.3}}, 0.0);
}

TEST(WilsonRelation, Examples) {
  const double c_u = 0.25, c_v = 0.1;
  EXPECT_NEAR(std::abs(wilson_relation(1, 0, c_u, c_v) - complex(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(wilson_relation(0, 1, c_u, c_v) - expected_phase(c_v)), 0.0, 1e-12);
  EXPECT_EQ(wilson_relation(0, 0, c_u, c_v), complex(1.0));
}

TEST(WilsonRelation, IsAHomomorphism) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> f(-1, 1);
  for (int k = 0; k < 20; ++k) {
    const double c_u = f(rng), c_v = f(rng);
    for (int p = -3; p <= 3; ++p) {
      for (int q = -3; q <= 3; ++q) {
        EXPECT_NEAR(std::abs(wilson_relation(p, q, c_u, c_v) - expected_phase(p * c_u + q * c_v)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(wilson_relation(p + 1, q - 2, c_u, c_v) -
                             wilson_relation(p, q, c_u, c_v) * wilson_relation(1, -2, c_u, c_v)),
                    0.0, 1e-12);
      }
    }
  }
}

TEST(WilsonRelation, MatchesFiniteCoverWilsonLine) {
  const CoveringSpec spec(TorusParams(0.3819660113), 2, 2);
  for (double c_u : {0.25, 0.1, -0.7}) {
    const auto conn = presets::scalar_flat(spec.base(), c_u, 0.2);
    EXPECT_NEAR(std::abs(wilson_relation(1, 0, c_u, 0.2) - wilson(spec, {1, 0}, conn).matrix()(0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(wilson_relation(0, 1, c_u, 0.2) - wilson(spec, {0, 1}, conn).matrix()(0, 0)), 0.0, 1e-12);
  }
}

TEST(RotationGauge, IsUnitary) {
  const auto gauge = rotation_gauge(0.125, 1.0 / 6.0);
  const auto product = gauge * adjoint(gauge);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NEAR(std::abs(product(i, j).scalar_part() - (i == j ? 1.0 : 0.0)), 0.0, 1e-15);
      EXPECT_LE(product(i, j).non_scalar_residual(), 1e-15);
    }
  }
}

TEST(RotationGauge, WilsonRelationGivesBlockRotations) {
  const double c_u = 0.125, c_v = 1.0 / 6.0;
  const auto gauge = rotation_gauge(c_u, c_v);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const auto n1 = wilson_relation(1, 0, gauge);
  EXPECT_LE(max_entry_distance(n1.value, block_diag(rotation_radians(two_pi * c_u), id)), 1e-12);
  EXPECT_LE(n1.residual, 1e-15);
  const auto n2 = wilson_relation(0, 1, gauge);
  EXPECT_LE(max_entry_distance(n2.value, block_diag(id, rotation_radians(two_pi * c_v))), 1e-12);
  EXPECT_LE(n2.residual, 1e-15);
}

TEST(RotationGauge, PointwiseOracle) {
  // R(c (x + 2 pi p)) R(c x)^T evaluated as functions of x.
  const double c = 0.37;
  const auto gauge = rotation_gauge(c, 0.0);
  for (int p = -2; p <= 2; ++p) {
    const auto result = wilson_relation(p, 0, gauge);
    for (double x : {-1.0, 0.3, 5.0}) {
      const ComplexMatrix pointwise =
          rotation_radians(c * (x + two_pi * p)) * rotation_radians(c * x).transpose();
      EXPECT_LE(max_entry_distance(result.value.topLeftCorner(2, 2), pointwise), 1e-12);
    }
  }
}

TEST(GaugeEquation, ResidualIsZero) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> f(-2, 2);
  for (int k = 0; k < 20; ++k) {
    const double c_u = f(rng), c_v = f(rng);
    for (const WeightVector w : {WeightVector{1, 0}, WeightVector{0, 1}, WeightVector{1, 1}, WeightVector{0, 0},
                                 WeightVector{-2, 3}}) {
      EXPECT_EQ(check_nc_Ag(c_u, c_v, w), 0.0);
    }
  }
}
