#include "hypermod/clausen.hpp"

#include <stdexcept>

namespace hypermod {

namespace {

HyperParams pair_params(const BigRational& r) {
  return HyperParams::with_unit_lower({r, BigRational(1) - r}, BigRational(0));
}

void require_open_unit(const BigRational& r) {
  if (!(r > BigRational(0)) || !(r < BigRational(1))) {
    throw std::domain_error("r must lie in (0, 1)");
  }
}

// ₂F₁(a, b; 1; x) for |x| < 1 by direct summation.
Real hyp2f1_unit_lower(const Real& a, const Real& b, const Real& x) {
  mpfr_prec_t bits = default_precision();
  Real total(0L);
  Real term(1L);
  Real tol = epsilon(bits + 16);
  for (long n = 0; n < 20000000; ++n) {
    total += term;
    term *= x * (a + Real(n)) * (b + Real(n)) / pow(Real(n + 1), 2L);
    if (n > 4 && abs(term) < tol * abs(total)) return total;
  }
  throw std::domain_error("hypergeometric series converges too slowly");
}

}  // namespace

Real clausen_residual(const BigRational& r, const Complex& z, const Real& eps) {
  require_open_unit(r);
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  HyperParams pair = pair_params(r);
  HyperParams triple = HyperParams::with_unit_lower(
      {BigRational(BigInt(1), BigInt(2)), r, BigRational(1) - r}, BigRational(0));
  Complex x = Complex(4L) * z * (Complex(1L) - z);
  Complex f = bilateral_H(pair, z, eps).value;
  Complex f0 = bilateral_H(pair, z, Real(0L)).value;
  Complex ft = bilateral_H(triple, x, eps).value;
  Real sr = sin_pi(Real(r));
  Real se = sin_pi(eps);
  Real factor = Real(1L) - se * se / (sr * sr);
  Complex res = ft * (cos_pi(eps) * 2L) - f * f * expi_pi(-eps) * factor - f0 * f0 * expi_pi(eps);
  return rounded(abs(res), bits);
}

Complex tau_of_z(const BigRational& r, const Complex& z, mpfr_prec_t bits) {
  require_open_unit(r);
  FrobeniusBasis fb = frobenius_basis({r, BigRational(1) - r}, z, 2, bits + 16);
  PrecisionGuard guard(bits + 16);
  const Complex& f0 = fb.values[0].value;
  if (abs(f0).is_zero()) throw ArithmeticError("F₀ vanishes at this point");
  Complex ratio = fb.values[1].value / (f0 * (const_pi() * 2L));
  Complex tau(ratio.im, -ratio.re);  // −i · ratio
  return Complex(rounded(tau.re, bits), rounded(tau.im, bits));
}

Complex tau_of_z_reflected(const BigRational& r, const Complex& z, mpfr_prec_t bits) {
  require_open_unit(r);
  PrecisionGuard guard(bits + 16);
  std::vector<BigRational> up{r, BigRational(1) - r};
  Complex f0 = frobenius_basis(up, z, 1, bits + 16).values[0].value;
  Complex g0 = frobenius_basis(up, Complex(1L) - z, 1, bits + 16).values[0].value;
  if (abs(f0).is_zero()) throw ArithmeticError("F₀ vanishes at this point");
  Complex ratio = g0 / (f0 * (sin_pi(Real(r)) * 2L));
  Complex tau(-ratio.im, ratio.re);  // i · ratio
  return Complex(rounded(tau.re, bits), rounded(tau.im, bits));
}

DzDtauCheck dz_dtau_check(const BigRational& r, const Real& z) {
  require_open_unit(r);
  if (!(z > Real(0L)) || !(z < Real(1L))) throw std::domain_error("dz_dtau_check needs z in (0, 1)");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  std::vector<Real> up{Real(r), Real(BigRational(1) - r)};
  auto th = frobenius_theta_series(up, Complex(z), 2, 1);
  const Complex& f0 = th[0][0];
  const Complex& f1 = th[0][1];
  // θ-Wronskian F₀·θF₁ − θF₀·F₁ = z·W, and (1/2πi) dz/dτ = F₀²/W.
  Complex w = (f0 * th[1][1] - th[1][0] * f1) / Complex(z);
  Complex lhs = f0 * f0 / w;
  Complex base = Complex(z * (Real(1L) - z));
  Real scale = abs(lhs);
  DzDtauCheck out;
  out.residual_nu1 = rounded(abs(lhs - base * f0) / scale, bits);
  out.residual_nu2 = rounded(abs(lhs - base * f0 * f0) / scale, bits);
  out.best_nu = out.residual_nu1 < out.residual_nu2 ? 1 : 2;
  return out;
}

Complex hyp2f1_half(const Complex& z) {
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 16);
  Complex v = Complex(1L) / agm(Complex(1L), sqrt(Complex(1L) - z));
  return Complex(rounded(v.re, bits), rounded(v.im, bits));
}

Complex hyp3f2_half_clausen(const Complex& x) {
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 16);
  Complex z = (Complex(1L) - sqrt(Complex(1L) - x)) / Real(2L);
  Complex f = hyp2f1_half(z);
  Complex v = f * f;
  return Complex(rounded(v.re, bits), rounded(v.im, bits));
}

Real hyp2f1_real(const BigRational& r_in, const Real& x) {
  require_open_unit(r_in);
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  Real r(r_in);
  Real one(1L);
  Real s = one - r;
  if (x == one) throw std::domain_error("₂F₁(r, 1−r; 1; x) is singular at x = 1");
  if (x < one) {
    Real out;
    if (x < Real(-0.5)) {
      // Pfaff: (1−x)^{−r} ₂F₁(r, r; 1; x/(x−1)).
      out = pow(one - x, -r) * hyp2f1_unit_lower(r, r, x / (x - one));
    } else {
      out = hyp2f1_unit_lower(r, s, x);
    }
    return rounded(out, bits);
  }
  // (sin πr/π) ∫₀¹ t^{−r}(1−t)^{r−1}(1−xt)^{−r} dt; beyond t = 1/x the factor (1−xt)^{−r}
  // acquires the phase e^{±πir}, whose real part is cos πr.
  Real t0 = one / x;
  Real u0 = one - t0;
  auto left = [&](const Real& u, const Real& omu) {
    Real t = t0 * u;
    // 1 − x t = 1 − u
    return pow(t, -r) * pow(one - t, r - one) * pow(omu, -r) * t0;
  };
  auto right = [&](const Real& u, const Real& omu) {
    Real t = t0 + u0 * u;
    // |1 − x t| = x u₀ u, 1 − t = u₀(1 − u)
    return pow(t, -r) * pow(u0 * omu, r - one) * pow(x * u0 * u, -r) * u0;
  };
  Estimate i1 = tanh_sinh(left, bits + 16);
  Estimate i2 = tanh_sinh(right, bits + 16);
  Real out = sin_pi(r) / const_pi() * (i1.value + cos_pi(r) * i2.value);
  return rounded(out, bits);
}

}  // namespace hypermod
