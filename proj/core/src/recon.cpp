#include "hypermod/recon.hpp"

#include <cmath>
#include <stdexcept>

namespace hypermod {

namespace {

BigRational exact(const Real& x) {
  if (!x.is_finite()) throw std::domain_error("cannot reconstruct a non-finite value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return BigRational(q);
}

BigInt floor_of(const BigRational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return f;
}

// Smallest positive d ≡ r (mod q), taken in [1, q].
BigInt positive_class(const BigInt& r, const BigInt& q) {
  BigInt d;
  mpz_fdiv_r(d.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
  if (d == 0) d = q;
  return d;
}

}  // namespace

BigRational simplest_rational_between(const BigRational& lo_in, const BigRational& hi_in) {
  BigRational lo = lo_in;
  BigRational hi = hi_in;
  if (hi < lo) std::swap(lo, hi);
  // Continued-fraction descent; the common integer part is peeled off iteratively.
  std::vector<BigInt> terms;
  while (true) {
    BigInt fl = floor_of(lo);
    if (BigRational(fl) == lo) {
      terms.push_back(fl);
      break;
    }
    if (floor_of(hi) > fl) {
      terms.push_back(fl + 1);
      break;
    }
    terms.push_back(fl);
    BigRational nlo = BigRational(1) / (hi - BigRational(fl));
    BigRational nhi = BigRational(1) / (lo - BigRational(fl));
    lo = nlo;
    hi = nhi;
  }
  BigRational value(terms.back());
  for (size_t i = terms.size() - 1; i-- > 0;) value = BigRational(terms[i]) + BigRational(1) / value;
  return value;
}

std::pair<BigRational, BigRational> farey_neighbours(const BigRational& x, const BigInt& max_den) {
  BigInt p = x.numerator();
  BigInt q = x.denominator();
  if (q > max_den) throw std::invalid_argument("denominator already exceeds the Farey order");
  // Right neighbour c/d: cq − dp = 1; left neighbour a/b: aq − bp = −1.
  BigInt pinv;
  if (q == 1) {
    pinv = 0;
  } else if (mpz_invert(pinv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw std::invalid_argument("fraction not in lowest terms");
  }
  BigInt d = positive_class(BigInt(-pinv), q);
  d += q * ((max_den - d) / q);
  BigInt c = (1 + d * p) / q;
  BigInt b = positive_class(pinv, q);
  b += q * ((max_den - b) / q);
  BigInt a = (b * p - 1) / q;
  return {BigRational(a, b), BigRational(c, d)};
}

RationalGuess reconstruct_rational(const Real& x, const Real& err, const BigInt& max_den) {
  if (!(err > Real(0L))) throw std::invalid_argument("reconstruct_rational needs err > 0");
  mpfr_prec_t bits = std::max(default_precision(), x.precision()) + 64;
  PrecisionGuard guard(bits);
  RationalGuess g;
  g.confidence = Real(0L);
  Real lo = x - err;
  Real hi = x + err;
  BigRational cand = simplest_rational_between(exact(lo), exact(hi));
  g.value = cand;
  if (cand.denominator() > max_den) return g;
  auto [left, right] = farey_neighbours(cand, max_den);
  Real dl = abs(x - Real(left));
  Real dr = abs(Real(right) - x);
  g.confidence = min(dl, dr) / err;
  g.found = !(g.confidence < Real(1000L));
  return g;
}

QuadraticCoefficient reconstruct_quadratic_coefficient(const Real& x, const Real& y, long d,
                                                       const QuadraticBounds& bounds) {
  if (y.is_zero()) throw std::invalid_argument("reconstruct_quadratic_coefficient needs y ≠ 0");
  if (d < 1) throw std::invalid_argument("d must be a positive squarefree integer");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  QuadraticCoefficient out;
  out.d = d;
  Real t = x / y;
  Real sd = sqrt(Real(d));
  Real tol = bounds.tolerance / abs(y);
  BigInt dmax(bounds.max_denominator);
  auto accept = [&](const BigRational& u, const BigRational& v) {
    Real res = abs(x - (Real(u) + Real(v) * sd) * y);
    if (res > bounds.tolerance) return false;
    if (abs(u.numerator()) > bounds.max_numerator || abs(v.numerator()) > bounds.max_numerator) {
      return false;
    }
    out.u = u;
    out.v = v;
    out.residual = rounded(res, bits);
    out.found = true;
    return true;
  };
  RationalGuess only_u = reconstruct_rational(t, tol, dmax);
  if (only_u.found && accept(only_u.value, BigRational(0))) return out;
  if (d == 1) return out;
  RationalGuess only_v = reconstruct_rational(t / sd, tol / sd, dmax);
  if (only_v.found && accept(BigRational(0), only_v.value)) return out;
  // Common denominator q, numerators a, b: q t ≈ a + b√d. Candidates are screened in double
  // precision and confirmed at full precision.
  double td = t.to_double();
  double sdd = std::sqrt(static_cast<double>(d));
  for (long q = 1; q <= bounds.max_denominator; ++q) {
    for (long bb = 1; bb <= bounds.max_numerator; ++bb) {
      for (long b : {bb, -bb}) {
        double a = static_cast<double>(q) * td - static_cast<double>(b) * sdd;
        double ar = std::nearbyint(a);
        if (std::fabs(a - ar) > 1e-7 * (1.0 + std::fabs(a))) continue;
        if (std::fabs(ar) > static_cast<double>(bounds.max_numerator)) continue;
        BigRational u{BigInt(static_cast<long>(ar)), BigInt(q)};
        BigRational v{BigInt(b), BigInt(q)};
        if (u.is_zero()) continue;
        if (accept(u, v)) return out;
      }
    }
  }
  return out;
}

QuadraticCoefficient find_quadratic_coefficient(const Real& x, const Real& y,
                                                const std::vector<long>& ds,
                                                const QuadraticBounds& bounds) {
  QuadraticCoefficient last;
  for (long d : ds) {
    last = reconstruct_quadratic_coefficient(x, y, d, bounds);
    if (last.found) return last;
  }
  return last;
}

std::optional<QuadraticRelation> minimal_quadratic_relation(const Complex& tau, long height,
                                                            const Real& tolerance) {
  if (!(tau.im > Real(0L))) throw std::invalid_argument("τ must lie in the upper half-plane");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  // For Im τ ≠ 0, Aτ² + Bτ + C = 0 forces B = −2A·Re τ and C = A|τ|²; each A admits a single
  // candidate pair, so scanning A upward is exhaustive and returns the primitive relation.
  Real two_x = tau.re * 2L;
  Real n2 = norm(tau);
  for (long a = 1; a <= height; ++a) {
    BigInt b = (-(two_x * a)).round();
    BigInt c = (n2 * a).round();
    if (abs(b) > height || abs(c) > height) continue;
    Complex val = tau * tau * Real(a) + tau * Real(b) + Complex(Real(c));
    if (abs(val) > tolerance) continue;
    QuadraticRelation rel{BigInt(a), b, c};
    if (rel.discriminant() >= 0) continue;
    return rel;
  }
  return std::nullopt;
}

}  // namespace hypermod
