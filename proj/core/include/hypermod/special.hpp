#pragma once

#include <functional>
#include <vector>

#include "hypermod/exactnum.hpp"
#include "hypermod/real.hpp"

namespace hypermod {

/// Exact Bernoulli numbers B_0..B_n (B_1 = −1/2).
std::vector<BigRational> bernoulli_numbers(int n);
BigRational bernoulli_number(int n);
/// Bernoulli polynomial B_n(x).
Real bernoulli_polynomial(int n, const Real& x);

/// Hurwitz zeta ζ(s, a) for real s > 1 and a > 0, by Euler–Maclaurin summation.
Real hurwitz_zeta(const Real& s, const Real& a);
/// Polygamma ψ^{(n)}(x) for x > 0; n = 0 is the digamma function.
Real polygamma(int n, const Real& x);

/// Rising factorial (x)_n for real x.
Real rising(const Real& x, long n);
/// Generalized binomial coefficient C(x, j).
Real binomial(const Real& x, long j);
Real factorial(long n);

/// Truncated power series helpers; index i holds the coefficient of t^i.
using RealSeries = std::vector<Real>;
using ComplexSeries = std::vector<Complex>;

RealSeries series_mul(const RealSeries& a, const RealSeries& b, size_t order);
ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b, size_t order);
/// exp of a series with zero constant term.
RealSeries series_exp(const RealSeries& c, size_t order);
ComplexSeries series_exp(const ComplexSeries& c, size_t order);
/// Reciprocal of a series with nonzero constant term.
ComplexSeries series_inverse(const ComplexSeries& a, size_t order);

/// Asymptotic expansion of ∏Γ(x+α_i)/∏Γ(x+β_j) = x^σ Σ_k e_k x^{−k} as x→∞,
/// σ = Σα − Σβ, returning e_0..e_{terms−1}.
RealSeries gamma_ratio_asymptotic(const std::vector<Real>& alphas, const std::vector<Real>& betas,
                                  size_t terms);

/// Arithmetic–geometric mean with the right choice of square roots.
Complex agm(const Complex& a, const Complex& b);

/// Solves the dense complex system A x = b by Gaussian elimination with pivoting.
std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b);
/// Least-squares solution of A x ≈ b through the normal equations.
std::vector<Complex> least_squares(const std::vector<std::vector<Complex>>& a,
                                   const std::vector<Complex>& b);

/// Double-exponential (tanh-sinh) quadrature of f over (0, 1), tolerant of
/// integrable endpoint singularities. The integrand receives t and 1−t
/// computed without cancellation.
Estimate tanh_sinh(const std::function<Real(const Real& t, const Real& one_minus_t)>& f,
                   mpfr_prec_t bits);

}  // namespace hypermod
