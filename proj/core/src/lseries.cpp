#include "hypermod/lseries.hpp"

#include <cmath>

namespace hypermod {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

Real two_pi() { return const_pi() * 2L; }

// Coefficient bound 2d(n)n^{(k−1)/2} with d(n) ≤ 2√n.
Real coefficient_bound(size_t n, int weight) {
  return Real(4L) * pow(Real(static_cast<long>(n)), Real(weight) / Real(2L));
}

}  // namespace

size_t terms_needed(int weight, double t, mpfr_prec_t bits) {
  double target = -static_cast<double>(bits) * std::log(2.0);
  double rate = 2.0 * M_PI * t;
  auto log_term = [&](double n) { return std::log(4.0) + 0.5 * weight * std::log(n) - rate * n; };
  double n = 1.0;
  while (log_term(n) >= target || n * rate < 0.5 * weight) n = std::ceil(n * 1.1 + 1.0);
  // Step back to the smallest admissible n.
  double lo = std::floor(n / 1.1) - 1.0;
  if (lo < 1.0) lo = 1.0;
  while (lo < n && (log_term(lo) >= target || lo * rate < 0.5 * weight)) lo += 1.0;
  return static_cast<size_t>(lo);
}

double minimal_axis_point(int level) { return 0.7 / std::sqrt(static_cast<double>(level)); }

size_t required_length(int level, int weight, mpfr_prec_t bits) {
  return terms_needed(2 * weight, minimal_axis_point(level), bits + kGuardBits) + 8;
}

ModularFormNumeric numeric_form(const QExpansion& qexp, int level, int weight, mpfr_prec_t bits) {
  size_t need = required_length(level, weight, bits);
  if (qexp.length() < need) {
    throw InsufficientLength("expansion has " + std::to_string(qexp.length()) + " terms; " +
                             std::to_string(need) + " needed at " + std::to_string(bits) + " bits");
  }
  return ModularFormNumeric{qexp.truncated(need), level, weight, bits};
}

ModularFormNumeric numeric_form(const std::string& form_id, mpfr_prec_t bits) {
  const FormInfo& info = find_form(form_id);
  size_t need = required_length(info.level, info.weight, bits);
  return numeric_form(cached_expansion(info.id, need), info.level, info.weight, bits);
}

Estimate f_on_axis(const ModularFormNumeric& form, const Real& t) {
  mpfr_prec_t bits = form.working_precision;
  if (form.qexp.is_zero()) return {Real(0L), Real(0L)};
  size_t need = terms_needed(form.weight, t.to_double(), bits);
  if (form.qexp.length() < need) {
    throw InsufficientLength("f_on_axis at t = " + t.to_string(6) + " needs " +
                             std::to_string(need) + " coefficients");
  }
  PrecisionGuard guard(bits + kGuardBits);
  Real x = exp(-(two_pi() * t));
  Real xn = x;
  KahanSum sum;
  Real abs_sum(0L);
  for (size_t n = 1; n <= need; ++n) {
    Real term = Real(form.qexp[n]) * xn;
    sum.add(term);
    abs_sum += abs(term);
    xn *= x;
  }
  Real tail = coefficient_bound(need + 1, form.weight) * xn / (Real(1L) - x);
  Real err = tail + epsilon(bits) * abs_sum;
  return {rounded(sum.total(), bits), rounded(err, bits)};
}

FrickeMeasurement measure_fricke(const ModularFormNumeric& form) {
  mpfr_prec_t bits = form.working_precision;
  PrecisionGuard guard(bits + kGuardBits);
  Real sqrt_n = sqrt(Real(static_cast<long>(form.level)));
  auto ratio = [&](double c) {
    Real t = Real(c) / sqrt_n;
    Real inv = Real(1L) / (Real(static_cast<long>(form.level)) * t);
    Estimate top = f_on_axis(form, inv);
    Estimate bottom = f_on_axis(form, t);
    return top.value / (pow(sqrt_n * t, static_cast<long>(form.weight)) * bottom.value);
  };
  FrickeMeasurement m;
  m.w = ratio(1.1);
  m.w_second = ratio(1.37);
  m.discrepancy = abs(m.w - m.w_second);
  Real tol = epsilon(bits / 3);
  m.stable = m.w.is_finite() && m.discrepancy < tol && abs(abs(m.w) - Real(1L)) < tol;
  m.w = rounded(m.w, bits);
  m.w_second = rounded(m.w_second, bits);
  m.discrepancy = rounded(m.discrepancy, bits);
  return m;
}

Real fricke_constant(const ModularFormNumeric& form) {
  FrickeMeasurement m = measure_fricke(form);
  if (!m.stable) {
    throw FrickeUnstable("Fricke ratio not stable: w(1.1/sqrt N) = " + m.w.to_string(12) +
                         ", w(1.37/sqrt N) = " + m.w_second.to_string(12));
  }
  return m.w;
}

bool LValueResult::meaningful() const {
  return error_bound <= abs(value) / Real(1000L);
}

Real upper_incomplete_gamma(long s, const Real& x) {
  if (s < 1) throw std::domain_error("upper_incomplete_gamma needs integer s >= 1");
  // Γ(s, x) = (s−1)! e^{−x} Σ_{j<s} x^j / j!
  Real term(1L);
  Real acc(1L);
  for (long j = 1; j < s; ++j) {
    term *= x;
    term /= j;
    acc += term;
  }
  Real fact(1L);
  for (long j = 2; j < s; ++j) fact *= j;
  return fact * exp(-x) * acc;
}

LValueResult critical_l_value(const ModularFormNumeric& form, long m, double fold_factor,
                              std::optional<Real> w_opt) {
  int k = form.weight;
  if (m < 1 || m > k - 1) throw std::domain_error("s outside the critical strip 1..k-1");
  mpfr_prec_t bits = form.working_precision;
  Real w;
  Real w_err(0L);
  if (w_opt) {
    w = *w_opt;
  } else {
    FrickeMeasurement fm = measure_fricke(form);
    if (!fm.stable) throw FrickeUnstable("Fricke ratio not stable: w = " + fm.w.to_string(12));
    w = fm.w;
    w_err = fm.discrepancy;
  }
  PrecisionGuard guard(bits + kGuardBits);
  LValueResult out;
  out.s = m;
  out.fricke_constant = rounded(w, bits);
  if (form.qexp.is_zero()) {
    out.value = Real(0L);
    out.error_bound = Real(0L);
    return out;
  }
  Real level(static_cast<long>(form.level));
  Real sqrt_n = sqrt(level);
  Real t0 = Real(fold_factor) / sqrt_n;
  Real u0 = Real(1L) / (level * t0);
  double slowest = std::min(t0.to_double(), u0.to_double());
  size_t need = terms_needed(2 * k, slowest, bits + kGuardBits);
  if (form.qexp.length() < need) {
    throw InsufficientLength("L-value at fold " + std::to_string(fold_factor) + " needs " +
                             std::to_string(need) + " coefficients");
  }
  Real tp = two_pi();
  Real nfac = pow(level, (Real(static_cast<long>(k)) - Real(2L * m)) / Real(2L));
  KahanSum first;
  KahanSum second;
  Real abs_sum(0L);
  for (size_t n = 1; n <= need; ++n) {
    const BigRational& an = form.qexp[n];
    if (an.is_zero()) continue;
    Real a(an);
    Real x = tp * Real(static_cast<long>(n));
    Real t1 = a * pow(x, -m) * upper_incomplete_gamma(m, x * t0);
    Real t2 = a * nfac * pow(x, m - k) * upper_incomplete_gamma(k - m, x * u0);
    first.add(t1);
    second.add(t2);
    abs_sum += abs(t1) + abs(t2);
  }
  Real lambda = first.total() + w * second.total();
  Real gamma_m(1L);
  for (long j = 2; j < m; ++j) gamma_m *= j;
  Real scale = pow(tp, m) / gamma_m;
  Real value = scale * lambda;
  // Rounding, the Deligne-bound tail and the uncertainty of a measured w.
  Real tail = coefficient_bound(need + 1, 2 * k) * exp(-(tp * Real(slowest) * Real(static_cast<long>(need + 1))));
  Real err = scale * (tail * Real(1000L) + epsilon(bits) * abs_sum + w_err * abs(second.total()));
  out.value = rounded(value, bits);
  out.error_bound = rounded(max(err, epsilon(bits - 4) * abs(value)), bits);
  return out;
}

Real validate_functional_equation(const ModularFormNumeric& form, std::optional<Real> w_opt) {
  if (form.qexp.is_zero()) return Real(0L);
  Real w = w_opt ? *w_opt : measure_fricke(form).w;
  Real worst(0L);
  for (long m = 1; m <= form.weight - 1; ++m) {
    Real base = critical_l_value(form, m, 1.0, w).value;
    for (double f : {0.7, 1.4}) {
      Real other = critical_l_value(form, m, f, w).value;
      worst = max(worst, abs(other - base));
    }
  }
  return worst;
}

}  // namespace hypermod
