#include <gtest/gtest.h>

#include "hypermod/bilateral.hpp"
#include "hypermod/clausen.hpp"

using namespace hypermod;

namespace {
BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }
Real dec(const char* s) { return Real::parse(s); }
Real tol(long digits) { return pow(Real(10L), -digits); }
std::vector<BigRational> halves(size_t m) { return std::vector<BigRational>(m, q(1, 2)); }
}  // namespace

class BilateralTest : public ::testing::Test {
 protected:
  BilateralTest() : guard_(256) {}
  PrecisionGuard guard_;
};

// Oracle: F_j(1) as Taylor coefficients of an mpmath gamma-quotient sum (30 digits).
TEST_F(BilateralTest, FrobeniusBasisAtOne) {
  FrobeniusBasis fb = frobenius_basis(halves(4), Complex(1L), 4, 256);
  const char* want[] = {"1.11863638716418706834961925752565", "-5.67201093969543550024895826391877",
                        "22.0809972199487208038113734469852", "-74.6406721779267451686054168197689"};
  for (size_t j = 0; j < 4; ++j) {
    EXPECT_LT(abs(fb.values[j].value.re - dec(want[j])), tol(28)) << j;
    EXPECT_TRUE(fb.converged[j]);
  }
}

TEST_F(BilateralTest, ThreeF2Values) {
  EXPECT_LT(abs(frobenius_basis(halves(3), Complex(1L), 1, 256).values[0].value.re -
                dec("1.39320392968567685918424626032536824265748121751561787897428")),
            tol(55));
  Complex m1 = hyp3f2_half_clausen(Complex(-1L));
  EXPECT_LT(abs(m1.re - dec("0.909172794546929700739778854282651225720527299592205228386414")),
            tol(55));
  Complex four = hyp3f2_half_clausen(Complex(4L));
  EXPECT_LT(abs(four.re - dec("0.896440788776762864232770900034970499138784403416241460983483")),
            tol(55));
  EXPECT_LT(abs(abs(four.im) - dec("0.517560330712824490522978775725431424987474366224929785345809")),
            tol(55));
}

TEST_F(BilateralTest, Hyp2f1RealOffTheDisk) {
  const std::vector<std::pair<double, const char*>> want{
      {2, "0.870296565378652360543960334060534754054467952777961795477223"},
      {-3, "0.718152818273586680549555516012152627654182498787246527339608"},
      {0.75, "1.32877820015705636387807335504790528113731787598247360489126"},
      {5, "0.54734475279435551053103752918191479395939306277319873677701"},
      {-24, "0.435948948421307368926996329517446073272438784675186605294582"}};
  for (const auto& [x, v] : want) {
    EXPECT_LT(abs(hyp2f1_real(q(1, 3), Real(x)) - dec(v)), tol(50)) << x;
  }
}

TEST_F(BilateralTest, EpsilonZeroReducesToHypergeometric) {
  HyperParams hp = HyperParams::with_unit_lower(halves(2), q(0));
  Complex z(Real(0.3));
  ComplexEstimate h = bilateral_H(hp, z, Real(0L));
  EXPECT_LT(abs(h.value - hyp2f1_half(z)), tol(60));
}

TEST_F(BilateralTest, ContinuationPeriodicityAndModes) {
  HyperParams hp = HyperParams::with_unit_lower({q(1, 3), q(1, 4)}, q(0));
  Complex z = expi_pi(Real(1L) / Real(3L));
  for (double e : {0.0, 0.3}) {
    ComplexEstimate d = bilateral_direct(hp, z, Real(e));
    ComplexEstimate l = bilateral_continuation(hp, z, Real(e));
    EXPECT_LT(abs(d.value - l.value), tol(50)) << e;
  }
  ComplexEstimate a = bilateral_direct(hp, z, Real(0.3));
  ComplexEstimate b = bilateral_direct(hp, z, Real(0.3) + Real(1L));
  EXPECT_LT(abs(a.value - b.value), tol(50));
  FourierProfile prof = fourier_profile(hp, z, 12);
  EXPECT_LT(prof.residual, tol(30));
  for (const auto& [k, _] : prof.modes) EXPECT_EQ((k % 2 + 2) % 2, 0);
}

TEST_F(BilateralTest, OdeResidualInsideDisk) {
  HyperParams hp = HyperParams::with_unit_lower(halves(4), q(0));
  EXPECT_LT(ode_residual(hp, Complex(Real(0.3), Real(0.2)), Real(0.37)), tol(40));
}

TEST_F(BilateralTest, ClausenAndTau) {
  EXPECT_LT(clausen_residual(q(1, 3), Complex(Real(0.2)), Real(0.15)), tol(40));
  Complex t = tau_of_z(q(1, 3), Complex(Real(0.2)), 256);
  EXPECT_LT(abs(t.im - dec("0.76136004729863508109")), tol(19));
  Complex t2 = tau_of_z_reflected(q(1, 3), Complex(Real(0.2)), 256);
  EXPECT_LT(abs(t - t2), tol(50));
  DzDtauCheck d = dz_dtau_check(q(1, 2), Real(0.3));
  EXPECT_EQ(d.best_nu, 2);
}

TEST_F(BilateralTest, UnitCircleSumAtOne) {
  // Σ_{n≥0} Γ(½+n)⁴/Γ(1+n)⁴ = Γ(½)⁴·₄F₃(½;1|1)
  std::vector<Real> a(4, Real(0.5)), b(4, Real(1L));
  ComplexEstimate s = unit_circle_gamma_sum(a, b, Complex(1L), 0);
  Real norm = pow(gamma(Real(0.5)), 4L);
  EXPECT_LT(abs(s.value.re / norm - dec("1.11863638716418706834961925752565")), tol(28));
}
