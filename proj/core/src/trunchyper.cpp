#include "hypermod/trunchyper.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hypermod {

HyperParams HyperParams::with_unit_lower(std::vector<BigRational> upper, BigRational z) {
  HyperParams h;
  h.lower.assign(upper.size(), BigRational(1));
  h.upper = std::move(upper);
  h.argument = std::move(z);
  return h;
}

void HyperParams::validate() const {
  if (upper.size() != lower.size()) {
    throw std::invalid_argument("upper and lower parameter lists differ in length");
  }
  for (const auto& b : lower) {
    if (b.is_integer() && b.sign() <= 0) {
      throw std::invalid_argument("lower parameter " + b.to_string() + " is a nonpositive integer");
    }
  }
}

std::vector<long> HyperParams::denominator_primes() const {
  std::set<long> out;
  auto add = [&](const BigRational& x) {
    for (long p : prime_divisors(x.denominator())) out.insert(p);
  };
  for (const auto& a : upper) add(a);
  for (const auto& b : lower) add(b);
  add(argument);
  return {out.begin(), out.end()};
}

namespace {

// Ratio term_{k+1}/term_k = z ∏(a_j+k)/∏(b_j+k).
BigRational step_ratio(const HyperParams& params, long k) {
  BigRational num = params.argument;
  BigRational den(1);
  for (const auto& a : params.upper) num *= a + BigRational(k);
  for (const auto& b : params.lower) den *= b + BigRational(k);
  if (den.is_zero()) throw ArithmeticError("lower parameter reaches a pole");
  return num / den;
}

}  // namespace

BigRational truncated_sum(const HyperParams& params, long terms) {
  return truncated_linear_sum(params, terms, BigRational(1), BigRational(0));
}

BigRational truncated_linear_sum(const HyperParams& params, long terms, const BigRational& c0,
                                 const BigRational& c1) {
  params.validate();
  if (terms < 1) throw std::invalid_argument("truncated_sum needs at least one term");
  // Accumulate over a common denominator to avoid a gcd per term.
  mpq_class term(1);
  mpq_class total(0);
  for (long k = 0; k < terms; ++k) {
    mpq_class weight = c0.raw() + c1.raw() * k;
    total += term * weight;
    if (k + 1 < terms) {
      term *= step_ratio(params, k).raw();
    }
  }
  return BigRational(total);
}

BigInt truncated_sum_mod(const HyperParams& params, long terms, long p, long ell) {
  params.validate();
  BigInt m = ipow(p, static_cast<unsigned long>(ell));
  BigInt term = 1;
  BigInt total = 0;
  BigInt zr = residue_mod(params.argument, m);
  for (long k = 0; k < terms; ++k) {
    total += term;
    if (k + 1 >= terms) break;
    BigRational num(1);
    BigRational den(1);
    for (const auto& a : params.upper) num *= a + BigRational(k);
    for (const auto& b : params.lower) den *= b + BigRational(k);
    if (padic_valuation(den, p).at_least(1)) {
      // A lower Pochhammer factor picks up p; the modular shortcut does not apply.
      return residue_mod(truncated_sum(params, terms), m);
    }
    term = term * residue_mod(num / den, m) * zr;
    term %= m;
  }
  total %= m;
  if (total < 0) total += m;
  return total;
}

bool WeilBoundSpec::within(const BigInt& value, long p) const {
  return value * value <= 4 * ipow(p, static_cast<unsigned long>(weight - 1));
}

bool WeilBoundSpec::ambiguous(long p, long ell) const {
  // 2p^{(m−1)/2} ≥ p^ℓ/2  ⇔  16 p^{m−1} ≥ p^{2ℓ}.
  return 16 * ipow(p, static_cast<unsigned long>(weight - 1)) >=
         ipow(p, static_cast<unsigned long>(2 * ell));
}

Eigenvalue eigenvalue_from_truncation(const HyperParams& params, long p, long ell,
                                      const WeilBoundSpec& weil) {
  if (p == 2) throw NotPIntegral("p = 2 lies outside the Euler product of the family");
  auto bad = params.denominator_primes();
  if (std::find(bad.begin(), bad.end(), p) != bad.end()) {
    throw NotPIntegral("p = " + std::to_string(p) + " divides a parameter denominator");
  }
  BigInt m = ipow(p, static_cast<unsigned long>(ell));
  BigInt r = balanced_mod(truncated_sum_mod(params, p, p, ell), m);
  return {r, weil.ambiguous(p, ell)};
}

BigInt apery_number(long n) {
  if (n < 0) throw std::invalid_argument("apery_number needs n ≥ 0");
  BigInt total = 0;
  BigInt bnk = 1;   // C(n, k)
  BigInt bnkk = 1;  // C(n+k, k)
  for (long k = 0; k <= n; ++k) {
    total += bnk * bnk * bnkk * bnkk;
    bnk = bnk * (n - k) / (k + 1);
    bnkk = bnkk * (n + k + 1) / (k + 1);
  }
  return total;
}

HyperParams CyFamily::params(const BigRational& z) const {
  return HyperParams::with_unit_lower({r, BigRational(1) - r, t, BigRational(1) - t}, z);
}

std::string CyFamily::id() const { return r.to_string() + "," + t.to_string(); }

bool CyFamily::has_eta() const {
  if (form_id.empty()) return false;
  auto f = lookup_form(form_id);
  return f && f->eta.has_value();
}

bool CyFamily::admissible(long p) const {
  if (p % 2 == 0) return false;
  return r.denominator() % p != 0 && t.denominator() % p != 0;
}

const std::vector<CyFamily>& cy_families() {
  static const std::vector<CyFamily> families = [] {
    auto q = [](long a, long b) { return BigRational(BigInt(a), BigInt(b)); };
    return std::vector<CyFamily>{
        {q(1, 2), q(1, 2), 8, "8.4-prototype", "8.4.1.a"},
        {q(1, 2), q(1, 3), 36, "36.4", "36.4.1.a"},
        {q(1, 2), q(1, 4), 16, "16.4", "16.4.1.a"},
        {q(1, 2), q(1, 6), 72, "72.4", "72.4.1.b"},
        {q(1, 3), q(1, 3), 27, "27.4", "27.4.1.a"},
        {q(1, 3), q(1, 4), 9, "9.4-cm", "9.4.1.a"},
        {q(1, 3), q(1, 6), 108, "108.4", "108.4.1.a"},
        {q(1, 4), q(1, 4), 32, "32.4", "32.4.1.a"},
        {q(1, 4), q(1, 6), 144, "144.4", ""},
        {q(1, 6), q(1, 6), 216, "216.4", ""},
        {q(1, 5), q(2, 5), 25, "25.4", "25.4.1.b"},
        {q(1, 8), q(3, 8), 128, "128.4", ""},
        {q(1, 10), q(3, 10), 200, "200.4", ""},
        {q(1, 12), q(5, 12), 864, "864.4", ""},
    };
  }();
  return families;
}

const CyFamily& find_family(const std::string& rt) {
  auto comma = rt.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("family id must be 'r,t'");
  BigRational r = BigRational::parse(rt.substr(0, comma));
  BigRational t = BigRational::parse(rt.substr(comma + 1));
  for (const auto& f : cy_families()) {
    if ((f.r == r && f.t == t) || (f.r == t && f.t == r)) return f;
  }
  throw std::invalid_argument("'" + rt + "' is not one of the fourteen families");
}

Eigenvalue eigenvalue_from_truncation(const CyFamily& family, long p, long ell) {
  if (!family.admissible(p)) {
    throw NotPIntegral("p = " + std::to_string(p) + " is a bad prime for family " + family.id());
  }
  return eigenvalue_from_truncation(family.params(), p, ell, WeilBoundSpec{4});
}

QExpansion euler_reconstruction(const CyFamily& family, size_t n_max) {
  EulerData data;
  for (long p : primes_up_to(static_cast<long>(n_max))) {
    if (family.admissible(p)) {
      data.good[p] = eigenvalue_from_truncation(family, p).value;
    } else if (family.level % (p * p) == 0) {
      data.bad[p] = 0;
    } else {
      throw std::domain_error("family " + family.id() + ": a(" + std::to_string(p) +
                              ") is not determined by truncations at level " +
                              std::to_string(family.level));
    }
  }
  return coefficients_from_euler(data, 4, n_max);
}

QExpansion family_expansion(const CyFamily& family, size_t n_max) {
  if (family.has_eta()) return cached_expansion(family.form_id, n_max);
  return euler_reconstruction(family, n_max);
}

int quadratic_character(long d, long p) {
  if (p % 2 == 0) throw std::invalid_argument("quadratic_character needs an odd prime");
  return kronecker(d, p);
}

long symmetry_character(const BigRational& r_in) {
  auto q = [](long a, long b) { return BigRational(BigInt(a), BigInt(b)); };
  BigRational r = r_in > q(1, 2) ? BigRational(1) - r_in : r_in;
  if (r == q(1, 2) || r == q(1, 6)) return -4;
  if (r == q(1, 3)) return -3;
  if (r == q(1, 4)) return -2;
  throw std::invalid_argument("no symmetry character for r = " + r.to_string());
}

}  // namespace hypermod
