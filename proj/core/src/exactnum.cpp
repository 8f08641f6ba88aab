#include "hypermod/exactnum.hpp"

#include <cstdlib>
#include <ostream>

namespace hypermod {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (auto dot = s.find('.'); slash == std::string::npos && dot != std::string::npos) {
      std::string frac = s.substr(dot + 1);
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(s);
      }
      std::string whole = s.substr(0, dot);
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      BigInt scale = ipow(10L, static_cast<unsigned long>(frac.size()));
      BigRational f(BigInt(frac), scale);
      BigRational w{BigInt(whole)};
      return neg ? w - f : w + f;
    }
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

std::string BigRational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ArithmeticError("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

long Valuation::value() const {
  if (infinite_) throw ArithmeticError("valuation of zero is infinite");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinite();
  return Valuation::finite(a.value_ + b.value_);
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

BigRational pochhammer(const BigRational& a, long n) {
  BigRational r(1);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) r *= a + BigRational(k);
    return r;
  }
  for (long k = 1; k <= -n; ++k) {
    BigRational f = a - BigRational(k);
    if (f.is_zero()) {
      throw ArithmeticError("pochhammer: (" + a.to_string() + ")_" + std::to_string(n) +
                            " hits a pole");
    }
    r *= f;
  }
  return BigRational(1) / r;
}

long padic_valuation(const BigInt& n, long p) {
  if (n == 0) throw ArithmeticError("padic_valuation of zero integer");
  BigInt m = abs(n);
  BigInt pp = p;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

Valuation padic_valuation(const BigRational& x, long p) {
  if (x.is_zero()) return Valuation::infinite();
  return Valuation::finite(padic_valuation(x.numerator(), p) -
                           padic_valuation(x.denominator(), p));
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

PadicView padic_view(const BigRational& x, long p, long ell) {
  PadicView view;
  view.prime = p;
  view.precision = ell;
  view.valuation = padic_valuation(x, p);
  if (view.valuation.is_infinite()) {
    view.unit_residue = 0;
    return view;
  }
  long v = view.valuation.value();
  BigRational unit = x;
  BigRational pv(ipow(p, static_cast<unsigned long>(std::labs(v))));
  unit = v >= 0 ? unit / pv : unit * pv;
  view.unit_residue = residue_mod(unit, ipow(p, static_cast<unsigned long>(ell)));
  return view;
}

BigInt residue_mod(const BigRational& x, const BigInt& modulus) {
  BigInt den = x.denominator();
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw NotPIntegral("denominator of " + x.to_string() + " is not invertible modulo " +
                       modulus.get_str());
  }
  BigInt r = x.numerator() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt balanced_mod(const BigInt& x, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  if (2 * r > modulus) r -= modulus;
  return r;
}

BigInt balanced_residue(const BigRational& x, long p, long ell) {
  if (!padic_valuation(x, p).at_least(0)) {
    throw NotPIntegral(x.to_string() + " is not " + std::to_string(p) + "-integral");
  }
  BigInt m = ipow(p, static_cast<unsigned long>(ell));
  return balanced_mod(residue_mod(x, m), m);
}

bool congruent_mod_power(const BigRational& c1, const BigRational& c2, long p, long ell) {
  return padic_valuation(c1 - c2, p).at_least(ell);
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_up_to(long n) { return primes_in(2, n); }

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(hi) + 1, true);
  sieve[0] = sieve[1] = false;
  for (long i = 2; i * i <= hi; ++i) {
    if (!sieve[i]) continue;
    for (long j = i * i; j <= hi; j += i) sieve[j] = false;
  }
  for (long i = std::max(2L, lo); i <= hi; ++i) {
    if (sieve[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  n = std::labs(n);
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<long> prime_divisors(const BigInt& n) {
  std::vector<long> out;
  BigInt m = abs(n);
  if (m == 0) return out;
  for (long d = 2; BigInt(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
      out.push_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) m /= d;
    }
  }
  if (m > 1) {
    if (!m.fits_slong_p()) throw ArithmeticError("prime_divisors: cofactor too large");
    out.push_back(m.get_si());
  }
  return out;
}

int kronecker(long d, long n) {
  if (n <= 0) throw ArithmeticError("kronecker: modulus must be positive");
  return mpz_kronecker(BigInt(d).get_mpz_t(), BigInt(n).get_mpz_t());
}

}  // namespace hypermod
