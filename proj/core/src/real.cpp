#include "hypermod/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hypermod {

namespace {
thread_local mpfr_prec_t g_precision = 256;
}

mpfr_prec_t default_precision() { return g_precision; }

void set_default_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("precision out of range");
  }
  g_precision = bits;
}

PrecisionGuard::PrecisionGuard(mpfr_prec_t bits) : saved_(g_precision) {
  set_default_precision(bits);
}

PrecisionGuard::~PrecisionGuard() { g_precision = saved_; }

Real::Real() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRational& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& decimal) {
  Real r;
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + decimal + "'");
  }
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::string out(static_cast<size_t>(n) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Re", digits - 1, v_);
  out.resize(static_cast<size_t>(n));
  return out;
}

BigInt Real::round() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

BigInt Real::floor() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

namespace {
// Result precision follows the thread default so that a computation started
// under a PrecisionGuard stays at that precision throughout.
void widen(mpfr_t v) {
  if (mpfr_get_prec(v) != g_precision) mpfr_prec_round(v, g_precision, MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  widen(v_);
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  widen(v_);
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define HYPERMOD_UNARY(name, fn)         \
  Real name(const Real& x) {             \
    Real r;                              \
    fn(r.get(), x.get(), MPFR_RNDN);     \
    return r;                            \
  }

HYPERMOD_UNARY(abs, mpfr_abs)
HYPERMOD_UNARY(sqrt, mpfr_sqrt)
HYPERMOD_UNARY(exp, mpfr_exp)
HYPERMOD_UNARY(log, mpfr_log)
HYPERMOD_UNARY(sin, mpfr_sin)
HYPERMOD_UNARY(cos, mpfr_cos)
HYPERMOD_UNARY(gamma, mpfr_gamma)
HYPERMOD_UNARY(digamma, mpfr_digamma)
HYPERMOD_UNARY(zeta, mpfr_zeta)
#undef HYPERMOD_UNARY

Real sin_pi(const Real& x) {
  // Reduce to [-1, 1] first so integer and half-integer arguments are exact.
  Real r;
  mpfr_remainder(r.get(), x.get(), Real(2L).get(), MPFR_RNDN);
  if (r.is_zero() || mpfr_cmpabs_ui(r.get(), 1) == 0) return Real(0L);
  return sin(r * const_pi());
}

Real cos_pi(const Real& x) {
  Real shifted = x + Real(0.5);
  return sin_pi(shifted);
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real rounded(const Real& x, mpfr_prec_t bits) {
  Real r = x;
  mpfr_prec_round(r.get(), bits, MPFR_RNDN);
  return r;
}

Real epsilon(mpfr_prec_t bits) { return ldexp(Real(1L), -static_cast<long>(bits)); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string s = re.to_string(digits);
  s += im.sign() < 0 ? " - " : " + ";
  s += abs(im).to_string(digits) + "i";
  return s;
}

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return {sqrt(z.re), Real(0L)};
  Real m = abs(z);
  Real a = sqrt((m + z.re) / 2L);
  Real b = sqrt((m - z.re) / 2L);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex pow(const Complex& z, const Real& s) {
  if (z.re.is_zero() && z.im.is_zero()) return Complex(0L);
  return exp(log(z) * s);
}

Complex pow(const Complex& z, long n) {
  Complex result(1L);
  Complex base = n < 0 ? Complex(1L) / z : z;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Complex expi(const Real& theta) { return {cos(theta), sin(theta)}; }

Complex expi_pi(const Real& x) { return {cos_pi(x), sin_pi(x)}; }

void KahanSum::add(const Real& x) {
  Real t = sum_ + x;
  if (abs(sum_) >= abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = std::move(t);
}

}  // namespace hypermod
