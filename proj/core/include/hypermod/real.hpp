#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <vector>

#include "hypermod/exactnum.hpp"

namespace hypermod {

/// Working precision in bits for newly created Real values on this thread.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);

/// Scoped override of the thread's default precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Owning wrapper of an MPFR number. New values, including results of
/// arithmetic, carry the thread's default precision.
class Real {
 public:
  Real();
  Real(long v);    // NOLINT(google-explicit-constructor)
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)
  explicit Real(const BigInt& v);
  explicit Real(const BigRational& v);
  static Real parse(const std::string& decimal);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;
  /// Nearest integer.
  BigInt round() const;
  BigInt floor() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) ≤ |x| < 2^e; very negative for zero.
  long exponent2() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator*(long b, Real a) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sin_pi(const Real& x);  ///< sin(πx), exact at integers
Real cos_pi(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real gamma(const Real& x);
Real digamma(const Real& x);
Real zeta(const Real& s);  ///< Riemann zeta
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real const_pi();
Real const_log2();
/// Copy of x rounded to the given precision.
Real rounded(const Real& x, mpfr_prec_t bits);
/// 2^(-bits): the unit roundoff scale at a given precision.
Real epsilon(mpfr_prec_t bits);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0L) {}  // NOLINT(google-explicit-constructor)
  Complex(long r) : re(r), im(0L) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }

  std::string to_string(int digits) const;
};

Real abs(const Complex& z);
Real norm(const Complex& z);  ///< |z|²
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  ///< principal branch
Complex sqrt(const Complex& z);  ///< principal branch
Complex pow(const Complex& z, const Real& s);  ///< exp(s·log z)
Complex pow(const Complex& z, long n);
Complex expi(const Real& theta);  ///< e^{iθ}
Complex expi_pi(const Real& x);   ///< e^{iπx}

/// Value with a heuristic absolute error bound.
struct Estimate {
  Real value;
  Real error;
};

struct ComplexEstimate {
  Complex value;
  Real error;
};

/// Compensated (Neumaier) accumulator; fixed summation order gives bit-stable totals.
class KahanSum {
 public:
  void add(const Real& x);
  Real total() const { return sum_ + comp_; }

 private:
  Real sum_;
  Real comp_;
};

}  // namespace hypermod
