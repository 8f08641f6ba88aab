#include "hypermod/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hypermod {

namespace {
std::mutex g_bernoulli_mu;
std::vector<BigRational> g_bernoulli{BigRational(1)};

void ensure_bernoulli(int n) {
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0 solved for B_m.
    long m = static_cast<long>(g_bernoulli.size());
    BigRational acc(0);
    BigInt binom = 1;
    for (long k = 0; k < m; ++k) {
      acc += BigRational(binom) * g_bernoulli[static_cast<size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    g_bernoulli.push_back(-acc / BigRational(m + 1));
  }
}
}  // namespace

std::vector<BigRational> bernoulli_numbers(int n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mu);
  ensure_bernoulli(n);
  return {g_bernoulli.begin(), g_bernoulli.begin() + n + 1};
}

BigRational bernoulli_number(int n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mu);
  ensure_bernoulli(n);
  return g_bernoulli[static_cast<size_t>(n)];
}

Real bernoulli_polynomial(int n, const Real& x) {
  auto b = bernoulli_numbers(n);
  // Horner in x over Σ C(n,k) B_k x^{n−k}.
  Real acc(0L);
  BigInt binom = 1;
  std::vector<BigInt> binoms(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    binoms[static_cast<size_t>(k)] = binom;
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) {
    acc = acc * x + Real(BigRational(binoms[static_cast<size_t>(k)]) * b[static_cast<size_t>(k)]);
  }
  return acc;
}

Real factorial(long n) {
  Real r;
  mpfr_fac_ui(r.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

Real rising(const Real& x, long n) {
  Real r(1L);
  for (long k = 0; k < n; ++k) r *= x + Real(k);
  return r;
}

Real binomial(const Real& x, long j) {
  Real r(1L);
  for (long k = 0; k < j; ++k) {
    r *= x - Real(k);
    r /= k + 1;
  }
  return r;
}

Real hurwitz_zeta(const Real& s, const Real& a) {
  if (!(s > Real(1L))) throw std::domain_error("hurwitz_zeta: s must exceed 1");
  if (!(a > Real(0L))) throw std::domain_error("hurwitz_zeta: a must be positive");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  // Shift the argument far enough that the Euler–Maclaurin remainder
  // decays geometrically at ratio ≲ ((s+2k)/(2πx))².
  double target = 0.35 * static_cast<double>(bits) + s.to_double() + 8.0;
  long shift = 0;
  if (a.to_double() < target) shift = static_cast<long>(std::ceil(target - a.to_double()));
  Real negs = -s;
  KahanSum head;
  for (long n = 0; n < shift; ++n) head.add(pow(a + Real(n), negs));
  Real x = a + Real(shift);
  Real xs = pow(x, negs);
  Real total = head.total() + x * xs / (s - Real(1L)) + xs / 2L;
  Real tol = epsilon(bits + 16) * abs(total);
  Real x2inv = Real(1L) / (x * x);
  // term_k = B_{2k}/(2k)! · (s)_{2k−1} · x^{−s−2k+1}
  Real poch = s;             // (s)_{2k−1}
  Real xpow = xs / x;        // x^{−s−2k+1}
  Real fact(2L);             // (2k)!
  for (int k = 1; k < 400; ++k) {
    Real term = Real(bernoulli_number(2 * k)) / fact * poch * xpow;
    total += term;
    if (abs(term) < tol) break;
    poch *= (s + Real(2L * k - 1)) * (s + Real(2L * k));
    xpow *= x2inv;
    fact *= (2L * k + 1) * (2L * k + 2);
  }
  return rounded(total, bits);
}

Real polygamma(int n, const Real& x) {
  if (n == 0) return digamma(x);
  Real z = hurwitz_zeta(Real(static_cast<long>(n + 1)), x) * factorial(n);
  return (n % 2 == 1) ? z : -z;
}

namespace {
template <class T>
std::vector<T> mul_impl(const std::vector<T>& a, const std::vector<T>& b, size_t order) {
  std::vector<T> r(order);
  for (size_t i = 0; i < order && i < a.size(); ++i) {
    for (size_t j = 0; i + j < order && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class T>
std::vector<T> exp_impl(const std::vector<T>& c, size_t order) {
  // e' = c' e, so n e_n = Σ_k k c_k e_{n−k}.
  std::vector<T> e(order);
  if (order == 0) return e;
  e[0] = T(1L);
  for (size_t n = 1; n < order; ++n) {
    T acc(0L);
    for (size_t k = 1; k <= n && k < c.size(); ++k) {
      acc += c[k] * e[n - k] * Real(static_cast<long>(k));
    }
    e[n] = acc / Real(static_cast<long>(n));
  }
  return e;
}
}  // namespace

RealSeries series_mul(const RealSeries& a, const RealSeries& b, size_t order) {
  return mul_impl(a, b, order);
}
ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b, size_t order) {
  return mul_impl(a, b, order);
}
RealSeries series_exp(const RealSeries& c, size_t order) { return exp_impl(c, order); }
ComplexSeries series_exp(const ComplexSeries& c, size_t order) { return exp_impl(c, order); }

ComplexSeries series_inverse(const ComplexSeries& a, size_t order) {
  ComplexSeries r(order);
  if (order == 0) return r;
  r[0] = Complex(1L) / a[0];
  for (size_t n = 1; n < order; ++n) {
    Complex acc(0L);
    for (size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * r[n - k];
    r[n] = -(acc * r[0]);
  }
  return r;
}

RealSeries gamma_ratio_asymptotic(const std::vector<Real>& alphas, const std::vector<Real>& betas,
                                  size_t terms) {
  if (alphas.size() != betas.size()) {
    throw std::invalid_argument("gamma_ratio_asymptotic: unbalanced gamma quotient");
  }
  // B_{k+1}(x) = Σ_i C(k+1, i) B_i x^{k+1−i}, with Pascal rows and Bernoulli numbers shared
  // across all parameters.
  size_t top = terms + 1;
  std::vector<Real> bern;
  for (const auto& b : bernoulli_numbers(static_cast<int>(top))) bern.emplace_back(b);
  auto powers = [&](const Real& x) {
    std::vector<Real> pw(top + 1);
    pw[0] = Real(1L);
    for (size_t i = 1; i <= top; ++i) pw[i] = pw[i - 1] * x;
    return pw;
  };
  std::vector<std::vector<Real>> apow, bpow;
  for (const auto& a : alphas) apow.push_back(powers(a));
  for (const auto& b : betas) bpow.push_back(powers(b));
  RealSeries d(terms);
  std::vector<Real> row{Real(1L)};
  for (size_t deg = 1; deg <= top; ++deg) {
    std::vector<Real> next(deg + 1);
    next[0] = Real(1L);
    next[deg] = Real(1L);
    for (size_t i = 1; i < deg; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
    size_t k = deg - 1;
    if (k < 1 || k >= terms) continue;
    Real acc(0L);
    for (size_t i = 0; i <= deg; ++i) {
      if (bern[i].is_zero()) continue;
      Real diff(0L);
      for (const auto& pw : apow) diff += pw[deg - i];
      for (const auto& pw : bpow) diff -= pw[deg - i];
      acc += row[i] * bern[i] * diff;
    }
    acc /= static_cast<long>(k * (k + 1));
    d[k] = (k % 2 == 1) ? acc : -acc;
  }
  return series_exp(d, terms);
}

Complex agm(const Complex& a0, const Complex& b0) {
  Complex a = a0;
  Complex b = b0;
  Real tol = epsilon(default_precision() - 4);
  for (int it = 0; it < 200; ++it) {
    Complex an = (a + b) / Real(2L);
    Complex bn = sqrt(a * b);
    if (abs(an - bn) > abs(an + bn)) bn = -bn;
    a = std::move(an);
    b = std::move(bn);
    if (abs(a - b) <= tol * abs(a)) break;
  }
  return (a + b) / Real(2L);
}

std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    }
    if (abs(a[piv][col]).is_zero()) throw std::domain_error("solve_linear: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = col + 1; r < n; ++r) {
      Complex f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::vector<Complex> least_squares(const std::vector<std::vector<Complex>>& a,
                                   const std::vector<Complex>& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<std::vector<Complex>> n(cols, std::vector<Complex>(cols));
  std::vector<Complex> rhs(cols);
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      Complex acc(0L);
      for (size_t r = 0; r < rows; ++r) acc += conj(a[r][i]) * a[r][j];
      n[i][j] = acc;
    }
    Complex acc(0L);
    for (size_t r = 0; r < rows; ++r) acc += conj(a[r][i]) * b[r];
    rhs[i] = acc;
  }
  return solve_linear(std::move(n), std::move(rhs));
}

Estimate tanh_sinh(const std::function<Real(const Real& t, const Real& one_minus_t)>& f,
                   mpfr_prec_t bits) {
  PrecisionGuard guard(bits + 32);
  Real pi = const_pi();
  double reach = std::asinh(2.0 * static_cast<double>(bits) * 0.6931471805599453 / M_PI) + 1.0;
  auto node = [&](const Real& u) {
    Real s = pi * (exp(u) - exp(-u)) / 2L;  // π sinh u
    Real ch = (exp(u) + exp(-u)) / 2L;
    Real t = Real(1L) / (Real(1L) + exp(-s));
    Real omt = Real(1L) / (Real(1L) + exp(s));
    Real w = t * omt * pi * ch;
    if (w.is_zero() || t.is_zero() || omt.is_zero()) return Real(0L);
    return f(t, omt) * w;
  };
  Real h(1L);
  Real sum = node(Real(0L));
  long kmax = static_cast<long>(std::ceil(reach));
  for (long k = 1; k <= kmax; ++k) sum += node(Real(k)) + node(Real(-k));
  Real prev = sum * h;
  Real err(1L);
  Real result = prev;
  for (int level = 1; level <= 14; ++level) {
    h /= 2L;
    long count = static_cast<long>(std::ceil(reach * std::ldexp(1.0, level)));
    for (long k = 1; k <= count; k += 2) {
      Real u = h * Real(k);
      sum += node(u) + node(-u);
    }
    result = sum * h;
    err = abs(result - prev);
    if (level >= 4 && err < epsilon(bits) * abs(result)) break;
    prev = result;
  }
  Real floor_err = epsilon(bits - 8) * abs(result);
  return {rounded(result, bits), rounded(max(err, floor_err), bits)};
}

}  // namespace hypermod
