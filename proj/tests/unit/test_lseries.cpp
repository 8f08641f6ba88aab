#include <gtest/gtest.h>

#include "hypermod/lseries.hpp"

using namespace hypermod;

namespace {
Real dec(const char* s) { return Real::parse(s); }
Real tol(long digits) { return pow(Real(10L), -digits); }
}  // namespace

class LSeriesTest : public ::testing::Test {
 protected:
  LSeriesTest() : guard_(256) {}
  PrecisionGuard guard_;
};

// Oracle: tests/oracles/analytic_oracle.py (mpmath incomplete-gamma expansion, 60 digits).
TEST_F(LSeriesTest, PrototypeCriticalValues) {
  ModularFormNumeric f = numeric_form("8.4-prototype", 256);
  const char* want[] = {"0.354500683730964718765559891494932364415430280030415253002683",
                        "0.690031163123397525119105420218318704045621927185734115869374",
                        "0.874695377085079044944594728356637000712219285544170363542032"};
  for (long m = 1; m <= 3; ++m) {
    LValueResult l = critical_l_value(f, m);
    EXPECT_LT(abs(l.value - dec(want[m - 1])), tol(55)) << m;
    EXPECT_TRUE(l.meaningful());
    EXPECT_LT(l.error_bound, tol(60));
  }
}

TEST_F(LSeriesTest, CmFormCriticalValues) {
  ModularFormNumeric f = numeric_form("9.4-cm", 256);
  EXPECT_LT(abs(critical_l_value(f, 2).value -
                dec("0.759965749993307635913622747426208019606123730027690093917531")),
            tol(55));
  EXPECT_LT(abs(critical_l_value(f, 3).value -
                dec("0.918950262785094625843347770475732382141775941134557018987767")),
            tol(55));
}

TEST_F(LSeriesTest, FoldPointIndependence) {
  ModularFormNumeric f = numeric_form("g", 256);
  for (long m = 1; m <= 5; ++m) {
    Real a = critical_l_value(f, m, 1.0).value;
    Real b = critical_l_value(f, m, 1.3).value;
    EXPECT_LT(abs(a - b), tol(60)) << m;
  }
  EXPECT_LT(validate_functional_equation(f), tol(60));
}

TEST_F(LSeriesTest, FrickeConstantAndInstability) {
  ModularFormNumeric f = numeric_form("8.4-prototype", 256);
  EXPECT_LT(abs(fricke_constant(f) - Real(1L)), tol(60));
  // Declaring the wrong level breaks the Fricke symmetry.
  ModularFormNumeric wrong = numeric_form(cached_expansion("8.4-prototype", 2000), 12, 4, 64);
  EXPECT_FALSE(measure_fricke(wrong).stable);
  EXPECT_THROW(fricke_constant(wrong), FrickeUnstable);
}

TEST_F(LSeriesTest, IncompleteGammaClosedForm) {
  // Γ(2, x) = (1 + x)e^{−x}
  Real x(1.5);
  EXPECT_LT(abs(upper_incomplete_gamma(2, x) - (Real(1L) + x) * exp(-x)), tol(70));
}

TEST_F(LSeriesTest, ShortExpansionsAreRejected) {
  EXPECT_THROW(numeric_form(cached_expansion("8.4-prototype", 10), 8, 4, 256), InsufficientLength);
  EXPECT_GT(required_length(864, 4, 256), required_length(8, 4, 256));
}
