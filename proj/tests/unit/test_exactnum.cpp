#include <gtest/gtest.h>

#include "hypermod/exactnum.hpp"

using namespace hypermod;

namespace {
BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
}  // namespace

TEST(BigRationalTest, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(BigRational::parse("-7"), q(-7));
  EXPECT_EQ(BigRational::parse("6/8"), q(3, 4));
  EXPECT_EQ(BigRational::parse("0.5"), q(1, 2));
  EXPECT_EQ(BigRational::parse("-.25"), q(-1, 4));
  EXPECT_EQ(BigRational::parse("-1.125"), q(-9, 8));
  EXPECT_THROW(BigRational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("1.2.3"), std::invalid_argument);
}

TEST(BigRationalTest, CanonicalFormAndDivisionByZero) {
  BigRational x(BigInt(4), BigInt(-6));
  EXPECT_EQ(x.numerator(), -2);
  EXPECT_EQ(x.denominator(), 3);
  EXPECT_EQ(x.to_string(), "-2/3");
  EXPECT_THROW(q(1) / q(0), ArithmeticError);
  EXPECT_LT(q(1, 3), q(1, 2));
}

TEST(PochhammerTest, PositiveAndReciprocalBranches) {
  EXPECT_EQ(pochhammer(q(1, 2), 0), q(1));
  EXPECT_EQ(pochhammer(q(1, 2), 3), q(15, 8));
  // (a)_{-n} = 1/((a-1)(a-2)...(a-n))
  EXPECT_EQ(pochhammer(q(1, 2), -2), q(4, 3));
  EXPECT_EQ(pochhammer(q(1), 5), q(120));
}

TEST(ValuationTest, FiniteAndInfinite) {
  EXPECT_EQ(padic_valuation(BigInt(250), 5), 3);
  EXPECT_EQ(padic_valuation(q(3, 50), 5).value(), -2);
  Valuation inf = padic_valuation(q(0), 7);
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_TRUE(inf.at_least(1000));
  EXPECT_THROW(inf.value(), ArithmeticError);
  EXPECT_TRUE((inf + Valuation::finite(2)).is_infinite());
}

TEST(PadicViewTest, UnitResidue) {
  PadicView v = padic_view(q(18, 5), 3, 2);
  EXPECT_EQ(v.valuation.value(), 2);
  // unit part 2/5 mod 9: 5^{-1} = 2, so 4
  EXPECT_EQ(v.unit_residue, 4);
}

TEST(ResidueTest, BalancedRepresentatives) {
  EXPECT_EQ(balanced_mod(BigInt(26), BigInt(27)), -1);
  EXPECT_EQ(balanced_residue(q(1, 2), 3, 3), 14 - 27);
  EXPECT_EQ(residue_mod(q(-1, 3), BigInt(7)), 2);
  EXPECT_THROW(balanced_residue(q(1, 3), 3, 2), NotPIntegral);
  EXPECT_TRUE(congruent_mod_power(q(1, 2), q(14), 3, 3));
  EXPECT_FALSE(congruent_mod_power(q(1, 2), q(15), 3, 3));
}

TEST(PrimesTest, SieveFactorKronecker) {
  EXPECT_EQ(primes_up_to(20), (std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(primes_in(90, 110), (std::vector<long>{97, 101, 103, 107, 109}));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(864691));
  EXPECT_EQ(factorize(864), (std::vector<std::pair<long, int>>{{2, 5}, {3, 3}}));
  EXPECT_EQ(prime_divisors(BigInt(-90)), (std::vector<long>{2, 3, 5}));
  EXPECT_EQ(kronecker(-4, 5), 1);
  EXPECT_EQ(kronecker(-4, 7), -1);
  EXPECT_EQ(kronecker(-3, 7), 1);
  EXPECT_EQ(kronecker(-8, 5), -1);
  EXPECT_EQ(kronecker(6, 3), 0);
}

TEST(PowerTest, IntegerPowers) {
  EXPECT_EQ(ipow(3L, 4), 81);
  EXPECT_EQ(ipow(BigInt(-2), 5), -32);
}
