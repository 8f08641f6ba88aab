#include <gtest/gtest.h>

#include "hypermod/recon.hpp"

using namespace hypermod;

namespace {
BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
}  // namespace

class ReconTest : public ::testing::Test {
 protected:
  ReconTest() : guard_(256) {}
  PrecisionGuard guard_;
};

TEST_F(ReconTest, RecoversExactRationals) {
  RationalGuess g = reconstruct_rational(Real(0.0625), Real(1e-40), BigInt(100));
  ASSERT_TRUE(g.found);
  EXPECT_EQ(g.value, q(1, 16));
  Real x = Real(q(-5, 12032));
  RationalGuess h = reconstruct_rational(x, Real(1e-60), BigInt(1000000));
  ASSERT_TRUE(h.found);
  EXPECT_EQ(h.value, q(-5, 12032));
  EXPECT_GT(h.confidence, Real(1000L));
}

TEST_F(ReconTest, RejectsIrrationals) {
  Real pi14 = Real::parse("3.14159265358979");
  EXPECT_FALSE(reconstruct_rational(pi14, Real(1e-14), BigInt(100)).found);
  EXPECT_FALSE(reconstruct_rational(const_pi(), Real(1e-70), BigInt(1000000)).found);
}

TEST_F(ReconTest, FareyAndSimplest) {
  auto [lo, hi] = farey_neighbours(q(3, 7), BigInt(10));
  EXPECT_EQ(lo, q(2, 5));
  EXPECT_EQ(hi, q(4, 9));
  EXPECT_EQ(simplest_rational_between(q(31, 100), q(34, 100)), q(1, 3));
  EXPECT_EQ(simplest_rational_between(q(-1, 2), q(1, 2)), q(0));
}

TEST_F(ReconTest, QuadraticCoefficient) {
  Real y = Real(1.7);
  Real x = sqrt(Real(2L)) * y / Real(24L);
  QuadraticBounds b;
  QuadraticCoefficient c = find_quadratic_coefficient(x, y, {1, 2, 3, 5, 6}, b);
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.u, q(0));
  EXPECT_EQ(c.v, q(1, 24));
}

TEST_F(ReconTest, CmRelation) {
  // τ = i/√3 satisfies 3τ² + 1 = 0.
  Complex tau(Real(0L), Real(1L) / sqrt(Real(3L)));
  auto rel = minimal_quadratic_relation(tau, 10000, Real(1e-40));
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->a, 3);
  EXPECT_EQ(rel->b, 0);
  EXPECT_EQ(rel->c, 1);
  EXPECT_LT(rel->discriminant(), 0);
  Complex generic(Real(0.3), Real::parse("0.8123456789012345678901234567"));
  EXPECT_FALSE(minimal_quadratic_relation(generic, 10000, Real(1e-25)).has_value());
}
