#pragma once

#include "hypermod/bilateral.hpp"

namespace hypermod {

/// |2F̃(z;ε)cos πε − F(z;ε)²e^{−πiε}(1 − sin²πε/sin²πr) − F(z;0)²e^{πiε}| with
/// F = ₂H₂(r, 1−r; 1, 1) at z and F̃ = ₃H₃(½, r, 1−r; 1, 1, 1) at 4z(1−z).
Real clausen_residual(const BigRational& r, const Complex& z, const Real& eps);

/// τ = −iF₁(z)/(2πF₀(z)) for the pair (r, 1−r).
Complex tau_of_z(const BigRational& r, const Complex& z, mpfr_prec_t bits);
/// The same point as iF₀(1−z)/(2 sin πr · F₀(z)).
Complex tau_of_z_reflected(const BigRational& r, const Complex& z, mpfr_prec_t bits);

struct DzDtauCheck {
  Real residual_nu1;
  Real residual_nu2;
  int best_nu = 0;
};

/// Compares (1/2πi) dz/dτ, with dτ/dz from the Wronskian of (F₀, F₁), to z(1−z)F₀(z)^ν.
DzDtauCheck dz_dtau_check(const BigRational& r, const Real& z);

/// ₂F₁(½, ½; 1; z) = 1/AGM(1, √(1−z)).
Complex hyp2f1_half(const Complex& z);
/// ₃F₂(½, ½, ½; 1, 1; x) = ₂F₁(½, ½; 1; z)² with x = 4z(1−z), z = (1 − √(1−x))/2.
Complex hyp3f2_half_clausen(const Complex& x);

/// Re ₂F₁(r, 1−r; 1; x) on the upper bank for real x ≠ 1. Series inside the disk, the
/// Pfaff transform for x < −½, and the Euler integral split at t = 1/x for x > 1.
Real hyp2f1_real(const BigRational& r, const Real& x);

}  // namespace hypermod
