#include "hypermod/etaforms.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypermod {

BigRational EtaQuotientTerm::q_offset() const {
  long s = 0;
  for (const auto& f : factors) s += static_cast<long>(f.scale) * f.exponent;
  return BigRational(BigInt(s), BigInt(24));
}

BigRational EtaQuotientTerm::weight() const {
  long s = 0;
  for (const auto& f : factors) s += f.exponent;
  return BigRational(BigInt(s), BigInt(2));
}

void EtaCombination::validate() const {
  for (const auto& t : terms) {
    if (t.weight() != BigRational(declared_weight)) {
      throw std::invalid_argument("eta term of weight " + t.weight().to_string() +
                                  " in a combination of declared weight " +
                                  std::to_string(declared_weight));
    }
  }
}

const BigRational& QExpansion::operator[](size_t n) const {
  if (n == 0 || n > coeffs_.size()) {
    throw InsufficientLength("q-expansion index " + std::to_string(n) + " outside 1.." +
                             std::to_string(coeffs_.size()));
  }
  return coeffs_[n - 1];
}

bool QExpansion::all_integral() const {
  if (!a0_.is_integer()) return false;
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

BigInt QExpansion::integer_at(size_t n) const {
  const BigRational& c = (*this)[n];
  if (!c.is_integer()) {
    throw ArithmeticError("coefficient a(" + std::to_string(n) + ") = " + c.to_string() +
                          " is not an integer");
  }
  return c.numerator();
}

std::vector<BigInt> QExpansion::integers() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (size_t n = 1; n <= coeffs_.size(); ++n) out.push_back(integer_at(n));
  return out;
}

bool QExpansion::is_zero() const {
  if (!a0_.is_zero()) return false;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

QExpansion QExpansion::truncated(size_t n) const {
  if (n > coeffs_.size()) throw InsufficientLength("cannot truncate to a longer expansion");
  return QExpansion({coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)}, a0_);
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b, size_t length) {
  IntSeries r(length, 0);
  // Skip zero coefficients: the sparse pentagonal factors make this a large win.
  for (size_t i = 0; i < a.size() && i < length; ++i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (size_t j = 0; j < b.size() && i + j < length; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return r;
}

IntSeries series_reciprocal(const IntSeries& a, size_t length) {
  if (a.empty() || (a[0] != 1 && a[0] != -1)) {
    throw ArithmeticError("series reciprocal needs a unit constant term");
  }
  // Newton iteration g ← g(2 − a g), doubling the precision each step.
  IntSeries g{a[0]};
  size_t have = 1;
  while (have < length) {
    size_t next = std::min(2 * have, length);
    IntSeries ag = series_mul(a, g, next);
    for (auto& c : ag) c = -c;
    ag[0] += 2;
    g = series_mul(g, ag, next);
    have = next;
  }
  g.resize(length, 0);
  return g;
}

IntSeries series_pow(const IntSeries& a, long e, size_t length) {
  IntSeries base = e < 0 ? series_reciprocal(a, length) : a;
  base.resize(length, 0);
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  IntSeries result(length, 0);
  if (length > 0) result[0] = 1;
  while (k) {
    if (k & 1UL) result = series_mul(result, base, length);
    k >>= 1;
    if (k) base = series_mul(base, base, length);
  }
  return result;
}

IntSeries euler_function(size_t length) {
  IntSeries c(length, 0);
  // Exponents k(3k∓1)/2 with sign (−1)^k.
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (static_cast<size_t>(e1) >= length) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<size_t>(e1)] += sign;
    if (k > 0 && static_cast<size_t>(e2) < length) c[static_cast<size_t>(e2)] += sign;
  }
  return c;
}

namespace {

// ∏(1 − q^{mn})^e to q-length `length`, computed in x = q^m.
IntSeries scaled_euler_power(int m, long e, size_t length) {
  size_t xlen = (length + static_cast<size_t>(m) - 1) / static_cast<size_t>(m);
  IntSeries xs = series_pow(euler_function(xlen), e, xlen);
  IntSeries out(length, 0);
  for (size_t i = 0; i < xlen; ++i) out[i * static_cast<size_t>(m)] = xs[i];
  return out;
}

}  // namespace

QExpansion eta_expand(const EtaQuotientTerm& term, size_t n_max) {
  BigRational offset = term.q_offset();
  if (!offset.is_integer() || offset.sign() < 0) {
    throw std::invalid_argument("eta quotient has q-offset " + offset.to_string() +
                                ", not a nonnegative integer");
  }
  long off = offset.numerator().get_si();
  for (const auto& f : term.factors) {
    if (f.scale <= 0) throw std::invalid_argument("eta factor scale must be positive");
  }
  std::vector<BigRational> coeffs(n_max, BigRational(0));
  BigRational a0(0);
  if (static_cast<size_t>(off) > n_max) return QExpansion(std::move(coeffs));
  // Series in q of length n_max − off + 1 covers q^off .. q^{n_max}.
  size_t length = n_max - static_cast<size_t>(off) + 1;
  std::map<int, long> merged;
  for (const auto& f : term.factors) merged[f.scale] += f.exponent;
  IntSeries prod(length, 0);
  prod[0] = 1;
  for (const auto& [m, e] : merged) {
    if (e == 0) continue;
    prod = series_mul(prod, scaled_euler_power(m, e, length), length);
  }
  for (size_t i = 0; i < length; ++i) {
    size_t n = i + static_cast<size_t>(off);
    BigRational c = term.coefficient * BigRational(prod[i]);
    if (n == 0) {
      a0 = c;
    } else {
      coeffs[n - 1] = c;
    }
  }
  return QExpansion(std::move(coeffs), a0);
}

QExpansion combo_expand(const EtaCombination& form, size_t n_max) {
  form.validate();
  std::vector<BigRational> coeffs(n_max, BigRational(0));
  BigRational a0(0);
  for (const auto& t : form.terms) {
    QExpansion e = eta_expand(t, n_max);
    for (size_t n = 1; n <= n_max; ++n) coeffs[n - 1] += e[n];
    a0 += e.constant_term();
  }
  QExpansion out(std::move(coeffs), a0);
  if (form.eigenform && !out.all_integral()) {
    throw ArithmeticError("declared eigenform has non-integral coefficients");
  }
  return out;
}

BigInt hecke_eigenvalue(const QExpansion& expansion, long p) {
  if (p <= 0 || static_cast<size_t>(p) > expansion.length()) {
    throw InsufficientLength("expansion of length " + std::to_string(expansion.length()) +
                             " does not reach p = " + std::to_string(p));
  }
  return expansion.integer_at(static_cast<size_t>(p));
}

QExpansion coefficients_from_euler(const EulerData& data, int weight, size_t n_max,
                                   long character) {
  std::vector<BigInt> a(n_max + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (long p : primes_up_to(static_cast<long>(n_max))) {
    auto good = data.good.find(p);
    auto bad = data.bad.find(p);
    if (good == data.good.end() && bad == data.bad.end()) {
      throw std::invalid_argument("missing Euler data at p = " + std::to_string(p));
    }
    // Prime-power coefficients first.
    std::vector<BigInt> pp{1};
    BigInt ap = good != data.good.end() ? good->second : bad->second;
    BigInt chi_pk = BigInt(kronecker(character, p)) * ipow(p, static_cast<unsigned long>(weight - 1));
    for (unsigned long q = static_cast<unsigned long>(p); q <= n_max; q *= static_cast<unsigned long>(p)) {
      size_t r = pp.size();
      BigInt next;
      if (good != data.good.end()) {
        next = ap * pp[r - 1] - (r >= 2 ? chi_pk * pp[r - 2] : BigInt(0));
      } else {
        next = ap * pp[r - 1];
      }
      pp.push_back(next);
    }
    for (size_t r = 1; r < pp.size(); ++r) a[static_cast<size_t>(ipow(p, r).get_ui())] = pp[r];
  }
  // Extend multiplicatively: a(n) = a(p^v) a(n / p^v) with p the least prime factor.
  std::vector<long> spf(n_max + 1, 0);
  for (size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      for (size_t j = i; j <= n_max; j += i) {
        if (spf[j] == 0) spf[j] = static_cast<long>(i);
      }
    }
  }
  for (size_t n = 2; n <= n_max; ++n) {
    size_t p = static_cast<size_t>(spf[n]);
    size_t pv = 1;
    size_t rest = n;
    while (rest % p == 0) {
      rest /= p;
      pv *= p;
    }
    if (rest != 1) a[n] = a[pv] * a[rest];
  }
  std::vector<BigRational> coeffs;
  coeffs.reserve(n_max);
  for (size_t n = 1; n <= n_max; ++n) coeffs.emplace_back(a[n]);
  return QExpansion(std::move(coeffs));
}

std::vector<HeckeViolation> check_hecke_relations(const QExpansion& expansion, int level,
                                                  int weight, long character) {
  std::vector<HeckeViolation> out;
  size_t n_max = expansion.length();
  std::vector<BigInt> a(n_max + 1, 0);
  for (size_t n = 1; n <= n_max; ++n) {
    if (!expansion[n].is_integer()) {
      out.push_back({"integrality", n});
      return out;
    }
    a[n] = expansion[n].numerator();
  }
  if (n_max >= 1 && a[1] != 1) out.push_back({"normalization a(1)=1", 1});
  // a(n) = a(p^v) a(n/p^v) for every n with at least two prime factors.
  for (size_t n = 2; n <= n_max; ++n) {
    auto fac = factorize(static_cast<long>(n));
    if (fac.size() < 2) continue;
    size_t pv = static_cast<size_t>(ipow(fac[0].first, static_cast<unsigned long>(fac[0].second)).get_ui());
    if (a[n] != a[pv] * a[n / pv]) out.push_back({"multiplicativity", n});
  }
  for (long p : primes_up_to(static_cast<long>(n_max))) {
    bool good = level % p != 0;
    BigInt chi_pk = BigInt(kronecker(character, p)) * ipow(p, static_cast<unsigned long>(weight - 1));
    BigInt prev2 = 1;
    BigInt prev1 = a[static_cast<size_t>(p)];
    for (unsigned long q = static_cast<unsigned long>(p) * static_cast<unsigned long>(p); q <= n_max;
         q *= static_cast<unsigned long>(p)) {
      BigInt expected = a[static_cast<size_t>(p)] * prev1;
      if (good) expected -= chi_pk * prev2;
      if (a[q] != expected) out.push_back({good ? "good-prime recursion" : "bad-prime power", q});
      prev2 = prev1;
      prev1 = a[q];
    }
  }
  return out;
}

std::vector<long> weil_violations(const QExpansion& expansion, int weight, long limit) {
  std::vector<long> out;
  for (long p : primes_up_to(std::min<long>(limit, static_cast<long>(expansion.length())))) {
    // a(p)² ≤ 4 p^{k−1} avoids irrational square roots.
    BigInt ap = expansion.integer_at(static_cast<size_t>(p));
    if (ap * ap > 4 * ipow(p, static_cast<unsigned long>(weight - 1))) out.push_back(p);
  }
  return out;
}

void write_qexpansion_csv(const QExpansion& expansion, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "n,a_n\n";
  for (size_t n = 1; n <= expansion.length(); ++n) out << n << ',' << expansion[n] << '\n';
}

QExpansion read_qexpansion_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "n,a_n") {
    throw std::runtime_error(path.string() + ": expected header 'n,a_n'");
  }
  std::vector<BigRational> coeffs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path.string() + ": malformed row");
    size_t n = std::stoul(line.substr(0, comma));
    if (n != coeffs.size() + 1) throw std::runtime_error(path.string() + ": rows out of order");
    coeffs.push_back(BigRational::parse(line.substr(comma + 1)));
  }
  return QExpansion(std::move(coeffs));
}

}  // namespace hypermod
