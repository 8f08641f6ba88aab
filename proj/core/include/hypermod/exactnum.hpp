#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypermod {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "a", "-a" or "a/b".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& x);

/// p-adic valuation; the infinite value (valuation of zero) is a distinct state.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  /// Compares against an integer threshold: infinity dominates everything.
  bool at_least(long threshold) const { return infinite_ || value_ >= threshold; }
  std::string to_string() const;

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

struct PadicView {
  long prime = 2;
  Valuation valuation = Valuation::infinite();
  long precision = 0;   ///< ℓ: the unit residue is taken modulo p^ℓ
  BigInt unit_residue;  ///< unit part reduced into [0, p^ℓ)
};

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a balanced residue is requested for a non-p-integral rational.
class NotPIntegral : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Rising/falling Pochhammer symbol (a)_n with the reciprocal branch for n < 0.
BigRational pochhammer(const BigRational& a, long n);

long padic_valuation(const BigInt& n, long p);  ///< n ≠ 0 required
Valuation padic_valuation(const BigRational& x, long p);
PadicView padic_view(const BigRational& x, long p, long ell);

BigInt ipow(const BigInt& base, unsigned long e);
BigInt ipow(long base, unsigned long e);

/// x mod M for a rational whose denominator is a unit modulo M; result in [0, M).
BigInt residue_mod(const BigRational& x, const BigInt& modulus);

/// The representative r ≡ x (mod p^ℓ) with −p^ℓ/2 < r ≤ p^ℓ/2.
BigInt balanced_residue(const BigRational& x, long p, long ell);
/// Balanced representative of an integer class modulo M.
BigInt balanced_mod(const BigInt& x, const BigInt& modulus);

bool congruent_mod_power(const BigRational& c1, const BigRational& c2, long p, long ell);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
std::vector<long> primes_in(long lo, long hi);
/// Prime factorization as (p, e) pairs in increasing order of p.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> prime_divisors(const BigInt& n);

/// Kronecker symbol (d/n) for n > 0.
int kronecker(long d, long n);

}  // namespace hypermod
