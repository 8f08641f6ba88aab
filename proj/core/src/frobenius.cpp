#include <cmath>
#include <stdexcept>

#include "hypermod/bilateral.hpp"

namespace hypermod {

std::vector<Real> to_reals(const std::vector<BigRational>& xs) {
  std::vector<Real> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

namespace {

void require_positive(const std::vector<Real>& upper) {
  for (const auto& a : upper) {
    if (!(a > Real(0L))) throw std::domain_error("Frobenius expansion needs positive upper parameters");
  }
}

// Per-term ε-expansion of log(∏Γ(a_j+n+ε)/Γ(1+n+ε)^m) built from polygamma values
// that are advanced by ψ^{(i)}(x+1) = ψ^{(i)}(x) + (−1)^i i!/x^{i+1}.
class TermExpansion {
 public:
  TermExpansion(const std::vector<Real>& upper, int order) : upper_(upper), order_(order) {
    int depth = std::max(order - 1, 0);
    for (int i = 0; i < depth; ++i) fact_.push_back(factorial(i));
    for (const auto& a : upper) {
      std::vector<Real> row;
      for (int i = 0; i < depth; ++i) row.push_back(polygamma(i, a));
      psi_.push_back(std::move(row));
    }
    for (int i = 0; i < depth; ++i) psi_one_.push_back(polygamma(i, Real(1L)));
  }

  RealSeries exp_series() const {
    RealSeries c(order_);
    long m = static_cast<long>(upper_.size());
    for (int i = 1; i < order_; ++i) {
      Real acc(0L);
      for (const auto& row : psi_) acc += row[i - 1];
      acc -= psi_one_[i - 1] * m;
      c[i] = acc / factorial(i);
    }
    return series_exp(c, order_);
  }

  void advance(long n) {
    for (size_t j = 0; j < upper_.size(); ++j) bump(psi_[j], upper_[j] + Real(n));
    bump(psi_one_, Real(n + 1));
  }

 private:
  void bump(std::vector<Real>& row, const Real& x) {
    Real xp = x;
    for (size_t i = 0; i < row.size(); ++i) {
      Real step = fact_[i] / xp;
      if (i % 2 == 0) row[i] += step; else row[i] -= step;
      xp *= x;
    }
  }

  std::vector<Real> upper_;
  int order_;
  std::vector<Real> fact_;
  std::vector<std::vector<Real>> psi_;
  std::vector<Real> psi_one_;
};

Real term_ratio(const std::vector<Real>& upper, long n) {
  Real num(1L);
  for (const auto& a : upper) num *= a + Real(n);
  return num / pow(Real(n + 1), static_cast<long>(upper.size()));
}

// Σ_{n<N} T_n [ε^j] exp(...) with T_n = ∏(a_j)_n/(n!)^m, at z = 1.
RealSeries head_at_one(const std::vector<Real>& upper, int order, long terms) {
  TermExpansion tx(upper, order);
  std::vector<KahanSum> acc(order);
  Real t(1L);
  for (long n = 0; n < terms; ++n) {
    RealSeries e = tx.exp_series();
    for (int i = 0; i < order; ++i) acc[i].add(t * e[i]);
    t *= term_ratio(upper, n);
    tx.advance(n);
  }
  RealSeries out(order);
  for (int i = 0; i < order; ++i) out[i] = acc[i].total();
  return out;
}

// Σ_{n≥N} ∏Γ(a_j+n+ε)/(∏Γ(a_j) Γ(1+n+ε)^m) expanded in ε, from the large-x expansion
// x^{−s₀} Σ_k e_k x^{−k} and ζ(s, N+ε) = Σ_j (−1)^j C(s+j−1, j) ζ(s+j, N) ε^j.
RealSeries tail_at_one(const std::vector<Real>& upper, int order, long start) {
  mpfr_prec_t bits = default_precision();
  long m = static_cast<long>(upper.size());
  Real s0(m);
  for (const auto& a : upper) s0 -= a;
  std::vector<Real> ones(upper.size(), Real(1L));
  size_t kmax = 24 + static_cast<size_t>(bits) / 4;
  RealSeries e = gamma_ratio_asymptotic(upper, ones, kmax);
  Real x(start);
  Real tol = epsilon(bits + 8) * abs(e[0]);
  size_t kept = 1;
  Real xk(1L);
  // Individual coefficients can vanish, so keep everything up to the last significant one.
  for (size_t k = 1; k < kmax; ++k) {
    xk *= x;
    if (!(abs(e[k]) / xk < tol)) kept = k + 1;
  }
  Real c(1L);
  for (const auto& a : upper) c /= gamma(a);
  RealSeries out(order);
  for (int j = 0; j < order; ++j) {
    KahanSum acc;
    for (size_t k = 0; k < kept; ++k) {
      Real s = s0 + Real(static_cast<long>(k));
      Real term = e[k] * binomial(s + Real(static_cast<long>(j - 1)), j) *
                  hurwitz_zeta(s + Real(static_cast<long>(j)), x);
      acc.add(term);
    }
    out[j] = (j % 2 == 0) ? acc.total() * c : -(acc.total() * c);
  }
  return out;
}

}  // namespace

std::vector<ComplexSeries> frobenius_theta_series(const std::vector<Real>& upper, const Complex& z,
                                                  int order, int theta_max) {
  if (order < 1) throw std::invalid_argument("Frobenius order must be positive");
  require_positive(upper);
  Real az = abs(z);
  if (!(az < Real(1L))) throw std::domain_error("Frobenius series needs |z| < 1");
  if (az.is_zero()) throw std::domain_error("Frobenius series needs z ≠ 0");
  mpfr_prec_t bits = default_precision();
  PrecisionGuard guard(bits + 32);
  TermExpansion tx(upper, order);
  std::vector<ComplexSeries> acc(theta_max + 1, ComplexSeries(order, Complex(0L)));
  Real t(1L);
  Complex zn(1L);
  Real tol = epsilon(bits + 24);
  Real peak(0L);
  Real log_az = abs(log(az));
  int quiet = 0;
  for (long n = 0;; ++n) {
    if (n > 5000000) throw std::domain_error("Frobenius series converges too slowly at this z");
    RealSeries e = tx.exp_series();
    RealSeries pw(order);
    pw[0] = Real(1L);
    for (int r = 0; r <= theta_max; ++r) {
      RealSeries term = series_mul(e, pw, order);
      for (int i = 0; i < order; ++i) acc[r][i] += zn * (t * term[i]);
      // pw ← pw · (n + ε)
      for (int i = order - 1; i >= 0; --i) {
        pw[i] *= n;
        if (i > 0) pw[i] += pw[i - 1];
      }
    }
    Real mag = abs(t) * pow(az, n) * pow(Real(n + 1), static_cast<long>(theta_max)) *
               pow(Real(1L) + log(Real(n + 1)) + log_az, static_cast<long>(order - 1));
    peak = max(peak, mag);
    if (n > 8 && mag < tol * peak) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    t *= term_ratio(upper, n);
    zn *= z;
    tx.advance(n);
    if (t.is_zero()) break;
  }
  // Restore the factor z^ε = exp(ε log z).
  Complex lz = log(z);
  ComplexSeries ze(order);
  ze[0] = Complex(1L);
  for (int i = 1; i < order; ++i) ze[i] = ze[i - 1] * lz / Real(static_cast<long>(i));
  for (auto& s : acc) s = series_mul(s, ze, order);
  return acc;
}

FrobeniusBasis frobenius_basis(const std::vector<BigRational>& upper, const Complex& z, int order,
                               mpfr_prec_t bits) {
  PrecisionGuard outer(bits);
  FrobeniusBasis fb;
  fb.upper = upper;
  fb.z = z;
  fb.order = order;
  std::vector<Real> a = to_reals(upper);
  bool at_one = z.im.is_zero() && z.re == Real(1L);
  if (!at_one) {
    auto series = frobenius_theta_series(a, z, order, 0)[0];
    for (auto& v : series) {
      Real err = epsilon(bits - 8) * max(abs(v), Real(1L));
      fb.values.push_back({v, err});
    }
    fb.converged.assign(order, true);
    return fb;
  }
  require_positive(a);
  Real s0(static_cast<long>(a.size()));
  for (const auto& x : a) s0 -= x;
  if (!(s0 > Real(1L))) {
    fb.converged.assign(order, false);
    for (int j = 0; j < order; ++j) {
      Real nan;
      mpfr_set_nan(nan.get());
      fb.values.push_back({Complex(nan, Real(0L)), Real(0L)});
    }
    return fb;
  }
  PrecisionGuard guard(bits + 32);
  long n1 = std::max<long>(256, bits);
  long n2 = 2 * n1;
  RealSeries head1 = head_at_one(a, order, n1);
  RealSeries head2 = head_at_one(a, order, n2);
  RealSeries tail1 = tail_at_one(a, order, n1);
  RealSeries tail2 = tail_at_one(a, order, n2);
  for (int j = 0; j < order; ++j) {
    Real v1 = head1[j] + tail1[j];
    Real v2 = head2[j] + tail2[j];
    Real err = abs(v2 - v1) + epsilon(bits - 8) * abs(v2);
    fb.values.push_back({Complex(rounded(v2, bits), Real(0L)), rounded(err, bits)});
  }
  fb.converged.assign(order, true);
  return fb;
}

}  // namespace hypermod
