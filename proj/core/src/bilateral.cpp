#include "hypermod/bilateral.hpp"

#include <cmath>
#include <stdexcept>

namespace hypermod {

namespace {

constexpr mpfr_prec_t kGuard = 32;

bool is_nonpositive_integer(const Real& x) {
  return !(x > Real(0L)) && Real(x.floor()) == x;
}

Real sum_of(const std::vector<Real>& xs) {
  Real s(0L);
  for (const auto& x : xs) s += x;
  return s;
}

// ∏Γ(α+n)/∏Γ(β+n); zero where some β+n is a pole of Γ.
Real gamma_quotient(const std::vector<Real>& alphas, const std::vector<Real>& betas, long n) {
  Real out(1L);
  for (const auto& b : betas) {
    Real x = b + Real(n);
    if (is_nonpositive_integer(x)) return Real(0L);
    out /= gamma(x);
  }
  for (const auto& a : alphas) {
    Real x = a + Real(n);
    if (is_nonpositive_integer(x)) throw ArithmeticError("upper parameter reaches a pole of Γ");
    out *= gamma(x);
  }
  return out;
}

Real step_ratio(const std::vector<Real>& alphas, const std::vector<Real>& betas, long n) {
  Real num(1L);
  Real den(1L);
  for (const auto& a : alphas) num *= a + Real(n);
  for (const auto& b : betas) den *= b + Real(n);
  return num / den;
}

bool is_one(const Complex& w) { return w.im.is_zero() && w.re == Real(1L); }

// c_j = [t^j] 1/(1 − w e^t). Profiles and error estimates ask for the same w repeatedly.
const ComplexSeries& boundary_coefficients(const Complex& w, size_t count) {
  struct Entry {
    Complex w;
    mpfr_prec_t bits;
    ComplexSeries c;
  };
  thread_local std::vector<Entry> cache;
  mpfr_prec_t bits = default_precision();
  for (auto& e : cache) {
    if (e.bits == bits && e.w.re == w.re && e.w.im == w.im && e.c.size() >= count) return e.c;
  }
  count *= 2;  // covers the longer run of the error estimate
  ComplexSeries denom(count);
  denom[0] = Complex(1L) - w;
  Real fact(1L);
  for (size_t i = 1; i < count; ++i) {
    fact *= static_cast<long>(i);
    denom[i] = -(w / fact);
  }
  if (cache.size() >= 8) cache.erase(cache.begin());
  cache.push_back({w, bits, series_inverse(denom, count)});
  return cache.back().c;
}

// Σ_{n≥N} w^n x^σ Σ_k e_k x^{−k}, x = n.
Complex tail_sum(const std::vector<Real>& alphas, const std::vector<Real>& betas, const Complex& w,
                 long start) {
  mpfr_prec_t bits = default_precision();
  Real sigma = sum_of(alphas) - sum_of(betas);
  Real x(start);
  size_t kmax = 24 + static_cast<size_t>(bits) / 4;
  RealSeries e = gamma_ratio_asymptotic(alphas, betas, kmax);
  Real tol = epsilon(bits + 8) * abs(e[0]);
  size_t kept = 1;
  Real xk(1L);
  // Individual coefficients can vanish, so keep everything up to the last significant one.
  for (size_t k = 1; k < kmax; ++k) {
    xk *= x;
    if (!(abs(e[k]) / xk < tol)) kept = k + 1;
  }
  if (is_one(w)) {
    KahanSum acc;
    for (size_t k = 0; k < kept; ++k) {
      acc.add(e[k] * hurwitz_zeta(Real(static_cast<long>(k)) - sigma, x));
    }
    return Complex(acc.total());
  }
  // Σ_{n≥N} w^n g(n) = w^N Σ_j c_j g^{(j)}(N) with c_j = [t^j] 1/(1 − w e^t), truncated at
  // the smallest term.
  double theta = std::fabs(arg(w).to_double());
  size_t jmax = static_cast<size_t>(theta * static_cast<double>(start)) + 8;
  const ComplexSeries& c = boundary_coefficients(w, jmax);
  // f_k = e_k x^{−k} (σ−k)(σ−k−1)⋯(σ−k−j+1); g^{(j)}(x) = x^{σ−j} Σ_k f_k.
  std::vector<Real> f(kept);
  Real xinv = Real(1L) / x;
  Real xp(1L);
  for (size_t k = 0; k < kept; ++k) {
    f[k] = e[k] * xp;
    xp *= xinv;
  }
  Complex total(0L);
  Real xj(1L);
  Real best;
  mpfr_set_inf(best.get(), 1);
  for (size_t j = 0; j < jmax; ++j) {
    Real d(0L);
    for (const auto& fk : f) d += fk;
    Complex term = c[j] * (d * xj);
    Real size = abs(term);
    if (j > 2 && size > best) break;
    total += term;
    best = min(best, size);
    if (size < epsilon(bits + 8) * abs(total)) break;
    for (size_t k = 0; k < kept; ++k) f[k] *= sigma - Real(static_cast<long>(k + j));
    xj *= xinv;
  }
  return total * pow(x, sigma);
}

Complex circle_sum(const std::vector<Real>& alphas, const std::vector<Real>& betas, const Complex& w,
                   long n0, long start) {
  KahanSum re;
  KahanSum im;
  Real g;
  bool have = false;
  Complex wn = pow(w, n0);
  for (long n = n0; n < start; ++n) {
    if (!have || g.is_zero()) {
      g = gamma_quotient(alphas, betas, n);
      have = true;
    } else {
      g *= step_ratio(alphas, betas, n - 1);
    }
    Complex term = wn * g;
    re.add(term.re);
    im.add(term.im);
    wn *= w;
  }
  Complex tail = tail_sum(alphas, betas, w, start) * wn;
  return Complex(re.total(), im.total()) + tail;
}

long tail_start(const std::vector<Real>& alphas, const std::vector<Real>& betas, const Complex& w,
                long n0) {
  mpfr_prec_t bits = default_precision();
  double shift = 0.0;
  for (const auto& v : alphas) shift = std::max(shift, -v.to_double());
  for (const auto& v : betas) shift = std::max(shift, -v.to_double());
  double base = std::max(256.0, static_cast<double>(bits));
  if (!is_one(w)) {
    double theta = std::fabs(arg(w).to_double());
    if (theta < 1e-3) throw std::domain_error("unit-circle point too close to z = 1");
    base = std::max(64.0 + bits / 4.0, 1.2 * (0.6931 * static_cast<double>(bits) + 30.0) / theta);
  }
  return n0 + static_cast<long>(std::ceil(base + shift));
}

void require_unit(const Complex& z) {
  if (abs(abs(z) - Real(1L)) > epsilon(default_precision() / 2)) {
    throw std::domain_error("point is not on the unit circle");
  }
}

Real sin_product(const std::vector<Real>& xs, const Real& eps) {
  Real p(1L);
  for (const auto& x : xs) p *= sin_pi(x + eps);
  return p;
}

Complex z_power(const Complex& z, const Real& eps) { return exp(log(z) * eps); }

std::vector<Real> shifted(const std::vector<Real>& xs, const Real& eps) {
  std::vector<Real> out;
  for (const auto& x : xs) out.push_back(x + eps);
  return out;
}

std::vector<Real> reflected(const std::vector<Real>& xs, long c, const Real& eps) {
  std::vector<Real> out;
  for (const auto& x : xs) out.push_back(Real(c) - x - eps);
  return out;
}

// ₚFₚ₋₁-type series Σ ∏(α)_n/∏(β)_n w^n with |w| ≤ 1.
ComplexEstimate pochhammer_series(const std::vector<Real>& alphas, const std::vector<Real>& betas,
                                  const Complex& w) {
  mpfr_prec_t bits = default_precision();
  Real aw = abs(w);
  if (aw < Real(1L) - epsilon(bits / 2)) {
    Complex total(0L);
    Complex term(1L);
    Real tol = epsilon(bits + 16);
    for (long n = 0; n < 10000000; ++n) {
      total += term;
      term *= w * step_ratio(alphas, betas, n);
      if (n > 4 && abs(term) < tol * abs(total)) break;
      if (term.re.is_zero() && term.im.is_zero()) break;
    }
    return {total, epsilon(bits) * abs(total)};
  }
  // Head by Pochhammer recurrence; the tail reuses the gamma-quotient expansion scaled by
  // ∏Γ(β)/∏Γ(α).
  long start = tail_start(alphas, betas, w, 0);
  Real scale(1L);
  for (const auto& b : betas) scale *= gamma(b);
  for (const auto& a : alphas) scale /= gamma(a);
  auto run = [&](long n_tail) {
    KahanSum re;
    KahanSum im;
    Complex term(1L);
    for (long n = 0; n < n_tail; ++n) {
      re.add(term.re);
      im.add(term.im);
      term *= w * step_ratio(alphas, betas, n);
    }
    Complex tail = tail_sum(alphas, betas, w, n_tail) * pow(w, n_tail) * scale;
    return Complex(re.total(), im.total()) + tail;
  };
  Complex v1 = run(start);
  Complex v2 = run(start + start / 2);
  return {v2, abs(v2 - v1) + epsilon(bits) * abs(v2)};
}

Complex finish(const Complex& v, mpfr_prec_t bits) {
  return Complex(rounded(v.re, bits), rounded(v.im, bits));
}

}  // namespace

ComplexEstimate unit_circle_gamma_sum(const std::vector<Real>& alphas,
                                      const std::vector<Real>& betas, const Complex& w, long n0) {
  if (alphas.size() != betas.size()) throw std::invalid_argument("unbalanced gamma quotient");
  mpfr_prec_t bits = default_precision();
  Real sigma = sum_of(alphas) - sum_of(betas);
  if (is_one(w) && !(sigma < Real(-1L))) {
    throw std::domain_error("series diverges at z = 1: parameter excess must exceed 1");
  }
  if (!(sigma < Real(0L))) throw std::domain_error("series diverges on the unit circle");
  PrecisionGuard guard(bits + kGuard);
  long start = tail_start(alphas, betas, w, n0);
  Complex v1 = circle_sum(alphas, betas, w, n0, start);
  Complex v2 = circle_sum(alphas, betas, w, n0, start + start / 2);
  Real err = abs(v2 - v1) + epsilon(bits) * abs(v2);
  return {finish(v2, bits), rounded(err, bits)};
}

ComplexEstimate bilateral_direct(const HyperParams& params, const Complex& z, const Real& eps) {
  params.validate();
  mpfr_prec_t bits = default_precision();
  require_unit(z);
  PrecisionGuard guard(bits + kGuard);
  std::vector<Real> a = to_reals(params.upper);
  std::vector<Real> b = to_reals(params.lower);
  Real den = sin_product(a, eps);
  if (den.is_zero()) throw ArithmeticError("a_j + ε is an integer; the bilateral series has a pole");
  Complex zc = Complex(1L) / z;
  ComplexEstimate pos = unit_circle_gamma_sum(shifted(a, eps), shifted(b, eps), z, 0);
  Real ratio = sin_product(b, eps) / den;
  Complex neg(0L);
  Real neg_err(0L);
  if (!ratio.is_zero()) {
    ComplexEstimate n = unit_circle_gamma_sum(reflected(b, 1, eps), reflected(a, 1, eps), zc, 1);
    neg = n.value * ratio;
    neg_err = n.error * abs(ratio);
  }
  Real c(1L);
  for (const auto& x : b) c *= gamma(x);
  for (const auto& x : a) c /= gamma(x);
  Complex pre = z_power(z, eps) * c;
  Complex value = pre * (pos.value + neg);
  Real err = abs(pre) * (pos.error + neg_err) + epsilon(bits) * abs(value);
  return {finish(value, bits), rounded(err, bits)};
}

ComplexEstimate bilateral_continuation(const HyperParams& params, const Complex& z, const Real& eps) {
  params.validate();
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + kGuard);
  std::vector<Real> a = to_reals(params.upper);
  std::vector<Real> b = to_reals(params.lower);
  // z^ε ∏Γ(a+ε)Γ(b)/(Γ(a)Γ(b+ε)) { F(1, a+ε; b+ε | z) + ∏(b+ε−1)/(a+ε−1) z^{−1} F(1, 2−b−ε; 2−a−ε | 1/z) }
  Real coef(1L);
  for (size_t j = 0; j < a.size(); ++j) {
    Real da = a[j] + eps - Real(1L);
    if (da.is_zero()) throw ArithmeticError("a_j + ε = 1 makes the continuation singular");
    coef *= (b[j] + eps - Real(1L)) / da;
  }
  bool inside = abs(z) < Real(1L) - epsilon(bits / 2);
  if (inside && !coef.is_zero()) {
    throw std::domain_error("the 1/z series diverges inside the disk unless its coefficient vanishes");
  }
  if (!inside) require_unit(z);
  Real pre(1L);
  for (size_t j = 0; j < a.size(); ++j) {
    Real x = a[j] + eps;
    if (is_nonpositive_integer(x)) throw ArithmeticError("a_j + ε is a nonpositive integer");
    pre *= gamma(x) * gamma(b[j]) / (gamma(a[j]) * gamma(b[j] + eps));
  }
  std::vector<Real> up1{Real(1L)};
  for (const auto& x : a) up1.push_back(x + eps);
  std::vector<Real> lo1 = shifted(b, eps);
  lo1.insert(lo1.begin(), Real(1L));
  ComplexEstimate first = pochhammer_series(up1, lo1, z);
  Complex second(0L);
  Real second_err(0L);
  if (!coef.is_zero()) {
    std::vector<Real> up2{Real(1L)};
    for (const auto& x : reflected(b, 2, eps)) up2.push_back(x);
    std::vector<Real> lo2 = reflected(a, 2, eps);
    lo2.insert(lo2.begin(), Real(1L));
    Complex zi = Complex(1L) / z;
    ComplexEstimate s = pochhammer_series(up2, lo2, zi);
    second = s.value * zi * coef;
    second_err = s.error * abs(coef);
  }
  Complex p = z_power(z, eps) * pre;
  Complex value = p * (first.value + second);
  Real err = abs(p) * (first.error + second_err) + epsilon(bits) * abs(value);
  return {finish(value, bits), rounded(err, bits)};
}

namespace {

// Solves Σ_k A_k (iπk)^j/j! = [ε^j](∏sin π(a+ε) · P) for j < m on the bank's mode set.
std::map<int, Complex> modes_from_series(const std::vector<Real>& upper, const Complex& z,
                                         const ComplexSeries& p) {
  int m = static_cast<int>(upper.size());
  ComplexSeries s(m, Complex(0L));
  s[0] = Complex(1L);
  Real pi = const_pi();
  for (const auto& a : upper) {
    // [ε^i] sin(πa + πε) = π^i/i! · sin(πa + iπ/2)
    ComplexSeries f(m);
    Real scale(1L);
    for (int i = 0; i < m; ++i) {
      f[i] = Complex(scale * sin_pi(a + Real(i) / Real(2L)));
      scale *= pi;
      scale /= static_cast<long>(i + 1);
    }
    s = series_mul(s, f, m);
  }
  ComplexSeries rhs = series_mul(s, p, m);
  // Upper bank (Im z ≥ 0): the mode e^{−πimε} is absent; lower bank: e^{πimε} is absent.
  bool upper_bank = z.im.sign() >= 0;
  std::vector<int> ks;
  for (int k = upper_bank ? -m + 2 : -m; k <= (upper_bank ? m : m - 2); k += 2) ks.push_back(k);
  std::vector<std::vector<Complex>> mat(m, std::vector<Complex>(ks.size()));
  for (size_t c = 0; c < ks.size(); ++c) {
    Complex base(Real(0L), pi * Real(static_cast<long>(ks[c])));
    Complex v(1L);
    for (int j = 0; j < m; ++j) {
      mat[j][c] = v;
      v = v * base / Real(static_cast<long>(j + 1));
    }
  }
  std::vector<Complex> x = solve_linear(mat, rhs);
  std::map<int, Complex> out;
  for (int k = -m; k <= m; k += 2) out[k] = Complex(0L);
  for (size_t c = 0; c < ks.size(); ++c) out[ks[c]] = x[c];
  return out;
}

}  // namespace

std::map<int, Complex> interior_modes(const std::vector<Real>& upper, const Complex& z) {
  int m = static_cast<int>(upper.size());
  mpfr_prec_t bits = default_precision();
  std::map<int, Complex> out;
  {
    PrecisionGuard guard(bits + kGuard);
    out = modes_from_series(upper, z, frobenius_theta_series(upper, z, m, 0)[0]);
  }
  for (auto& [k, v] : out) v = finish(v, bits);
  return out;
}

namespace {

Complex evaluate_modes(const std::map<int, Complex>& modes, const Real& eps) {
  Complex total(0L);
  for (const auto& [k, a] : modes) total += a * expi_pi(eps * Real(static_cast<long>(k)));
  return total;
}

bool unit_lower(const HyperParams& params) {
  for (const auto& b : params.lower) {
    if (b != BigRational(1)) return false;
  }
  return true;
}

}  // namespace

ComplexEstimate bilateral_H(const HyperParams& params, const Complex& z, const Real& eps) {
  params.validate();
  mpfr_prec_t bits = default_precision();
  Real az = abs(z);
  if (abs(az - Real(1L)) <= epsilon(bits / 2)) return bilateral_direct(params, z, eps);
  if (az > Real(1L)) throw std::domain_error("bilateral_H is evaluated on the closed unit disk");
  if (az.is_zero()) throw std::domain_error("bilateral_H needs z ≠ 0");
  if (!unit_lower(params)) {
    throw std::domain_error("interior evaluation needs all lower parameters equal to 1");
  }
  PrecisionGuard guard(bits + kGuard);
  std::vector<Real> a = to_reals(params.upper);
  Real den = sin_product(a, eps);
  if (den.is_zero()) throw ArithmeticError("a_j + ε is an integer; the bilateral series has a pole");
  Complex value = evaluate_modes(interior_modes(a, z), eps) / den;
  return {finish(value, bits), rounded(epsilon(bits - 12) * abs(value), bits)};
}

FourierProfile fourier_profile(const HyperParams& params, const Complex& z, int samples) {
  params.validate();
  int m = params.order();
  if (samples < m + 2) throw std::invalid_argument("fourier_profile needs more samples than modes");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + kGuard);
  std::vector<Real> a = to_reals(params.upper);
  auto normalized = [&](const Real& eps) {
    return bilateral_H(params, z, eps).value * sin_product(a, eps);
  };
  std::vector<int> ks;
  for (int k = -m; k <= m; k += 2) ks.push_back(k);
  auto row = [&](const Real& eps) {
    std::vector<Complex> r;
    for (int k : ks) r.push_back(expi_pi(eps * Real(static_cast<long>(k))));
    return r;
  };
  std::vector<std::vector<Complex>> mat;
  std::vector<Complex> rhs;
  for (int i = 0; i < samples; ++i) {
    Real eps = (Real(static_cast<long>(i)) + Real(0.3719)) / Real(static_cast<long>(samples));
    mat.push_back(row(eps));
    rhs.push_back(normalized(eps));
  }
  std::vector<Complex> x = least_squares(mat, rhs);
  FourierProfile out;
  for (size_t c = 0; c < ks.size(); ++c) out.modes[ks[c]] = finish(x[c], bits);
  Real worst(0L);
  for (int i = 0; i < samples; ++i) {
    Real eps = (Real(static_cast<long>(i)) + Real(0.8123)) / Real(static_cast<long>(samples));
    std::vector<Complex> r = row(eps);
    Complex fit(0L);
    for (size_t c = 0; c < ks.size(); ++c) fit += r[c] * x[c];
    worst = max(worst, abs(fit - normalized(eps)));
  }
  out.residual = rounded(worst, bits);
  return out;
}

Real ode_residual(const HyperParams& params, const Complex& z, const Real& eps) {
  params.validate();
  if (!unit_lower(params)) throw std::domain_error("ode_residual needs lower parameters equal to 1");
  int m = params.order();
  mpfr_prec_t bits = default_precision();
  if (!(abs(z) < Real(1L))) throw std::domain_error("ode_residual is evaluated inside the disk");
  PrecisionGuard guard(bits + kGuard);
  std::vector<Real> a = to_reals(params.upper);
  Real den = sin_product(a, eps);
  if (den.is_zero()) throw ArithmeticError("a_j + ε is an integer; the bilateral series has a pole");
  auto theta = frobenius_theta_series(a, z, m, m);
  std::vector<Complex> th(m + 1);
  for (int r = 0; r <= m; ++r) th[r] = evaluate_modes(modes_from_series(a, z, theta[r]), eps) / den;
  // z ∏(θ + a_j) H = θ^m H; coefficients of ∏(x + a_j).
  std::vector<Real> poly{Real(1L)};
  for (const auto& x : a) {
    std::vector<Real> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * x;
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  Complex lhs(0L);
  Real scale(0L);
  for (int r = 0; r <= m; ++r) {
    Complex t = z * th[r] * poly[r];
    lhs += t;
    scale += abs(t);
  }
  Complex residual = lhs - th[m];
  scale = max(scale, abs(th[m]));
  return rounded(abs(residual) / scale, bits);
}

}  // namespace hypermod
