#pragma once

#include <map>
#include <vector>

#include "hypermod/real.hpp"
#include "hypermod/special.hpp"
#include "hypermod/trunchyper.hpp"

namespace hypermod {

std::vector<Real> to_reals(const std::vector<BigRational>& xs);

/// Σ_{n≥n0} ∏Γ(α_i+n)/∏Γ(β_i+n) · w^n for |w| = 1. The tail beyond the explicit head
/// uses the asymptotic expansion of the gamma quotient: Hurwitz zeta values at w = 1
/// (needs Σβ − Σα > 1) and Σ_{n≥N} w^n g(n) = w^N Σ_j c_j g^{(j)}(N), c_j = [t^j] 1/(1 − w e^t),
/// otherwise.
ComplexEstimate unit_circle_gamma_sum(const std::vector<Real>& alphas,
                                      const std::vector<Real>& betas, const Complex& w, long n0);

/// Two-sided sum of the bilateral series on |z| = 1.
ComplexEstimate bilateral_direct(const HyperParams& params, const Complex& z, const Real& eps);
/// The two-series continuation formula evaluated on |z| = 1.
ComplexEstimate bilateral_continuation(const HyperParams& params, const Complex& z, const Real& eps);

/// ₘHₘ(z; ε): direct summation on the unit circle, finite-Fourier reconstruction from the
/// Frobenius ε-series inside the disk (lower parameters all 1; real z on the upper bank).
ComplexEstimate bilateral_H(const HyperParams& params, const Complex& z, const Real& eps);

struct FrobeniusBasis {
  std::vector<BigRational> upper;
  Complex z;
  int order = 0;
  std::vector<ComplexEstimate> values;  ///< F₀..F_{order−1}
  std::vector<bool> converged;          ///< false where the z = 1 series diverges
};

/// F_j(z) as ε-coefficients of the n ≥ 0 half of the bilateral series with lower parameters 1.
/// Inside the disk the series is summed directly; at z = 1 an asymptotic tail is added.
FrobeniusBasis frobenius_basis(const std::vector<BigRational>& upper, const Complex& z, int order,
                               mpfr_prec_t bits);

/// [ε^j] θ^r of the n ≥ 0 half-series for |z| < 1 (θ = z d/dz); result[r][j].
std::vector<ComplexSeries> frobenius_theta_series(const std::vector<Real>& upper, const Complex& z,
                                                  int order, int theta_max);

/// Fourier modes A_k of ∏sin π(a_j+ε) · ₘHₘ(z; ε) from the Frobenius data inside the disk.
std::map<int, Complex> interior_modes(const std::vector<Real>& upper, const Complex& z);

struct FourierProfile {
  std::map<int, Complex> modes;  ///< k → A_k, |k| ≤ m, k ≡ m (mod 2)
  Real residual;                 ///< max deviation on held-out ε samples
};

/// Least-squares fit of ∏sin π(a_j+ε)·ₘHₘ(z; ε) onto e^{πikε} over one period.
FourierProfile fourier_profile(const HyperParams& params, const Complex& z, int samples);

/// Relative residual of the hypergeometric equation for ₘHₘ(z; ε) at interior z.
Real ode_residual(const HyperParams& params, const Complex& z, const Real& eps);

}  // namespace hypermod
