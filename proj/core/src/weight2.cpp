#include <limits>
#include <set>

#include "hypermod/clausen.hpp"
#include "hypermod/ellcurve.hpp"
#include "hypermod/lseries.hpp"

namespace hypermod {

namespace {

bool weierstrass(CurveKind k) { return k != CurveKind::LEGENDRE_TWIST; }

QExpansion weight2_coefficients(const CurveFamily& family, size_t n_max) {
  return coefficients_from_euler(weight2_euler_data(family, static_cast<long>(n_max)), 2, n_max);
}

std::vector<long> candidate_conductors(const std::vector<long>& bad) {
  std::vector<long> out{1};
  for (long p : bad) {
    int lo = (p == 2 || p == 3) ? 0 : 1;
    int hi = p == 2 ? 8 : (p == 3 ? 5 : 2);
    std::vector<long> next;
    for (long n : out) {
      long pe = 1;
      for (int e = 0; e < lo; ++e) pe *= p;
      for (int e = lo; e <= hi; ++e, pe *= p) next.push_back(n * pe);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<long> bad_primes(const CurveFamily& family) {
  std::set<long> bad{2};
  if (weierstrass(family.kind)) bad.insert(3);
  BigRational disc = family.model().discriminant();
  for (const BigInt& n : {family.z.numerator(), family.z.denominator(),
                          (family.z - BigRational(1)).numerator(), disc.numerator(),
                          disc.denominator()}) {
    if (n == 0) continue;
    for (long p : prime_divisors(n)) bad.insert(p);
  }
  return {bad.begin(), bad.end()};
}

EulerData weight2_euler_data(const CurveFamily& family, long n_max) {
  family.validate();
  std::vector<long> bad = bad_primes(family);
  std::set<long> bad_set(bad.begin(), bad.end());
  Cubic model = family.model();
  EulerData data;
  for (long p : primes_up_to(n_max)) {
    if (!bad_set.count(p)) {
      data.good[p] = BigInt(p + 1 - count_points(model, p));
      continue;
    }
    bool zero = p == 2 || family.z.denominator() % p == 0 || (weierstrass(family.kind) && p == 3);
    data.bad[p] = zero ? BigInt(0) : BigInt(p + 1 - count_points_any(model, p));
  }
  return data;
}

ConductorSearch search_conductor(const CurveFamily& family, mpfr_prec_t bits, size_t max_terms) {
  std::vector<long> cands;
  size_t longest = 0;
  for (long n : candidate_conductors(bad_primes(family))) {
    size_t need = required_length(static_cast<int>(n), 2, bits);
    if (need > max_terms) continue;
    cands.push_back(n);
    longest = std::max(longest, need);
  }
  ConductorSearch out;
  out.candidates = static_cast<long>(cands.size());
  if (cands.empty()) throw std::runtime_error("no conductor candidate within the term budget");
  PrecisionGuard guard(bits);
  QExpansion qexp = weight2_coefficients(family, longest);
  bool have = false;
  for (long n : cands) {
    ModularFormNumeric form = numeric_form(qexp, static_cast<int>(n), 2, bits);
    Real res;
    try {
      res = validate_functional_equation(form);
    } catch (const FrickeUnstable&) {
      continue;
    }
    if (!have || res < out.residual) {
      out.conductor = n;
      out.residual = res;
      have = true;
    }
  }
  if (!have) throw std::runtime_error("every conductor candidate is Fricke-unstable");
  return out;
}

Weight2LRatio weight2_l_ratio(const CurveFamily& family, const BigRational& r, mpfr_prec_t bits,
                              std::optional<long> conductor, long max_denominator) {
  family.validate();
  Weight2LRatio out;
  out.family = family;
  out.r = r;
  out.conductor = conductor ? *conductor : search_conductor(family).conductor;
  PrecisionGuard guard(bits + 32);
  size_t need = required_length(static_cast<int>(out.conductor), 2, bits);
  ModularFormNumeric form =
      numeric_form(weight2_coefficients(family, need), static_cast<int>(out.conductor), 2, bits);
  out.conductor_residual = rounded(validate_functional_equation(form), bits);
  LValueResult l = critical_l_value(form, 1);
  out.l_value = rounded(l.value, bits);
  out.l_error = rounded(max(l.error_bound, out.conductor_residual), bits);
  Real rr(r);
  out.period = rounded(gamma(rr) * gamma(Real(1L) - rr) *
                           hyp2f1_real(r, Real(BigRational(1) - family.z)),
                       bits);
  out.ratio = rounded(-out.l_value / out.period, bits);
  Real floor_err = epsilon(bits / 3);
  if (abs(out.l_value) < max(out.l_error * 1000L, floor_err)) {
    out.positive_rank_suspected = true;
    out.notes = "positive analytic rank suspected; no relation expected";
    return out;
  }
  Real err = max(out.l_error / abs(out.period), epsilon(bits - 16) * abs(out.ratio));
  out.guess = reconstruct_rational(out.ratio, err, BigInt(max_denominator));
  out.notes = out.guess.found ? "conjectural-match" : "no relation";
  return out;
}

}  // namespace hypermod
