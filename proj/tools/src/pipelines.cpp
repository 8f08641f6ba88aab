#include "hypermod/cli/pipelines.hpp"

#include <stdexcept>

#include "hypermod/bilateral.hpp"
#include "hypermod/clausen.hpp"
#include "hypermod/lseries.hpp"

namespace hypermod::cli {

namespace {

BigRational q(long a, long b = 1) { return BigRational(BigInt(a), BigInt(b)); }

Real tolerance(const RunConfig& cfg) { return pow(Real(10L), -cfg.tolerance_exponent); }

void finish_entry(RatioEntry& e, const LValueResult& l, const Real& ref, const Real& ref_err,
                  const Real& scale, mpfr_prec_t bits, long max_den) {
  e.l_value = l.value;
  e.l_error = l.error_bound;
  e.reference = ref;
  e.ratio = l.value / (ref * scale);
  Real err = l.error_bound / abs(ref * scale) + abs(e.ratio) * ref_err / abs(ref);
  e.ratio_error = max(err, epsilon(bits - 24) * max(abs(e.ratio), Real(1L)));
  e.vanishing = abs(l.value) <= max(l.error_bound * 1000L, epsilon(bits / 2));
  e.guess = reconstruct_rational(e.ratio, e.ratio_error, BigInt(max_den));
  if (e.vanishing) {
    e.relation = "L(f," + std::to_string(e.m) + ") vanishes";
  } else if (e.guess.found) {
    e.relation = e.guess.value.to_string();
  } else {
    e.relation = "no relation";
  }
}

void require_ms(const std::vector<long>& ms, long lo, long hi) {
  for (long m : ms) {
    if (m < lo || m > hi) {
      throw std::invalid_argument("m = " + std::to_string(m) + " is outside " +
                                  std::to_string(lo) + ".." + std::to_string(hi));
    }
  }
}

std::vector<long> all_ms(long hi) {
  std::vector<long> ms;
  for (long m = 1; m <= hi; ++m) ms.push_back(m);
  return ms;
}

Real hyp3f2_weight3_reference(const std::string& form_id) {
  if (form_id == "f1") return hyp3f2_half_clausen(Complex(1L)).re;
  if (form_id == "f2") return hyp3f2_half_clausen(Complex(-1L)).re;
  if (form_id == "f3") return hyp3f2_half_clausen(Complex(4L)).re;
  throw std::invalid_argument("no ₃F₂ partner for form '" + form_id + "'");
}

IdentityCheck make_check(std::string name, const Real& lhs, const Real& rhs, const Real& tol) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relative_error = abs(lhs - rhs) / abs(rhs);
  c.tolerance = tol;
  c.passed = c.relative_error < tol;
  return c;
}

}  // namespace

RatioReport family_ratios(const CyFamily& family, const std::vector<long>& ms,
                          const RunConfig& cfg) {
  require_ms(ms, 1, 3);
  mpfr_prec_t bits = cfg.precision_bits;
  PrecisionGuard guard(bits);
  RatioReport rep;
  rep.form_id = family.form_id;
  rep.family_id = family.id();
  rep.level = family.level;
  rep.weight = 4;
  rep.reference_name = "F_m(1)";
  size_t need = required_length(family.level, 4, bits);
  ModularFormNumeric form = numeric_form(family_expansion(family, need), family.level, 4, bits);
  rep.fricke = fricke_constant(form);
  rep.fe_residual = validate_functional_equation(form, rep.fricke);
  FrobeniusBasis fb = frobenius_basis(
      {family.r, BigRational(1) - family.r, family.t, BigRational(1) - family.t}, Complex(1L), 4,
      bits);
  bool prototype = family.r == q(1, 2) && family.t == q(1, 2);
  for (long m : ms) {
    RatioEntry e;
    e.m = m;
    e.conjectural = !(prototype && m == 2);
    LValueResult l = critical_l_value(form, m, 1.0, rep.fricke);
    const ComplexEstimate& f = fb.values[static_cast<size_t>(m)];
    finish_entry(e, l, f.value.re, f.error, Real(1L), bits, cfg.max_denominator);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

RatioReport weight6_ratios(const std::vector<long>& ms, const RunConfig& cfg) {
  require_ms(ms, 1, 5);
  mpfr_prec_t bits = cfg.precision_bits;
  PrecisionGuard guard(bits);
  RatioReport rep;
  rep.form_id = "g";
  rep.family_id = "1/2^6";
  rep.level = 8;
  rep.weight = 6;
  rep.reference_name = "F_m(1)";
  ModularFormNumeric form = numeric_form("g", bits);
  rep.fricke = fricke_constant(form);
  rep.fe_residual = validate_functional_equation(form, rep.fricke);
  FrobeniusBasis fb = frobenius_basis(std::vector<BigRational>(6, q(1, 2)), Complex(1L), 6, bits);
  for (long m : ms) {
    RatioEntry e;
    e.m = m;
    LValueResult l = critical_l_value(form, m, 1.0, rep.fricke);
    const ComplexEstimate& f = fb.values[static_cast<size_t>(m)];
    finish_entry(e, l, f.value.re, f.error, Real(1L), bits, cfg.max_denominator);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

RatioReport weight3_ratios(const std::string& form_id, const std::vector<long>& ms,
                           const RunConfig& cfg) {
  require_ms(ms, 1, 2);
  mpfr_prec_t bits = cfg.precision_bits;
  PrecisionGuard guard(bits);
  RatioReport rep;
  rep.form_id = form_id;
  const FormInfo& info = find_form(form_id);
  rep.level = info.level;
  rep.weight = info.weight;
  rep.family_id = form_id == "f1" ? "z=1" : (form_id == "f2" ? "z=-1" : "z=4");
  rep.reference_name = "Re 3F2(1/2,1/2,1/2;1,1|z)";
  ModularFormNumeric form = numeric_form(form_id, bits);
  rep.fricke = fricke_constant(form);
  rep.fe_residual = validate_functional_equation(form, rep.fricke);
  Real y = hyp3f2_weight3_reference(form_id);
  QuadraticBounds bounds;
  bounds.tolerance = tolerance(cfg);
  for (long m : ms) {
    RatioEntry e;
    e.m = m;
    e.conjectural = false;
    LValueResult l = critical_l_value(form, m, 1.0, rep.fricke);
    Real pim = pow(const_pi(), m);
    finish_entry(e, l, y, epsilon(bits - 8), pim, bits, cfg.max_denominator);
    e.quadratic = find_quadratic_coefficient(l.value / pim, y, {1, 2, 3, 5, 6}, bounds);
    if (e.quadratic.found) {
      const QuadraticCoefficient& c = e.quadratic;
      e.relation = c.u.to_string() + " + " + c.v.to_string() + "*sqrt(" + std::to_string(c.d) + ")";
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

RatioReport lratio(const std::string& id, std::vector<long> ms, const RunConfig& cfg) {
  if (id == "g") return weight6_ratios(ms.empty() ? all_ms(5) : ms, cfg);
  if (id == "f1" || id == "f2" || id == "f3") return weight3_ratios(id, ms.empty() ? all_ms(2) : ms, cfg);
  if (ms.empty()) ms = all_ms(3);
  if (id.find(',') != std::string::npos) return family_ratios(find_family(id), ms, cfg);
  for (const CyFamily& f : cy_families()) {
    if (f.form_id == id || (!f.lmfdb_label.empty() && f.lmfdb_label == id)) {
      return family_ratios(f, ms, cfg);
    }
  }
  throw std::invalid_argument("unknown form or family '" + id + "'");
}

Estimate long4_series(mpfr_prec_t bits) {
  PrecisionGuard guard(bits + 16);
  std::vector<Real> alphas(6, Real(q(1, 2)));
  alphas.push_back(Real(q(5, 4)));
  std::vector<Real> betas(6, Real(1L));
  betas.push_back(Real(q(1, 4)));
  ComplexEstimate s = unit_circle_gamma_sum(alphas, betas, Complex(1L), 0);
  Real scale = Real(4L) / pow(const_pi(), 3L);
  Real v = s.value.re * scale;
  return {rounded(v, bits), rounded(s.error * scale + epsilon(bits) * abs(v), bits)};
}

std::vector<IdentityCheck> form_identities(const std::string& form_id, const RunConfig& cfg) {
  mpfr_prec_t bits = cfg.precision_bits;
  PrecisionGuard guard(bits);
  Real tol = tolerance(cfg);
  Real pi = const_pi();
  std::vector<IdentityCheck> out;
  if (form_id == "8.4-prototype") {
    ModularFormNumeric form = numeric_form(form_id, bits);
    Real w = fricke_constant(form);
    Real l1 = critical_l_value(form, 1, 1.0, w).value;
    Real l2 = critical_l_value(form, 2, 1.0, w).value;
    FrobeniusBasis fb = frobenius_basis(std::vector<BigRational>(4, q(1, 2)), Complex(1L), 3, bits);
    const Real& f0 = fb.values[0].value.re;
    out.push_back(make_check("16 L(f,2)/pi^2 = 4F3(1/2;1|1)", l2 * 16L / (pi * pi), f0, tol));
    out.push_back(make_check("F_2(1)/F_0(1) = 2 pi^2", fb.values[2].value.re / f0,
                             pi * pi * 2L, tol));
    out.push_back(make_check("sum (4k+1)(1/2)_k^6/k!^6 = 32 L(f,1)/pi^2",
                             long4_series(bits).value, l1 * 32L / (pi * pi), tol));
  } else if (form_id == "9.4-cm") {
    ModularFormNumeric form = numeric_form(form_id, bits);
    Real w = fricke_constant(form);
    Real g9 = pow(gamma(Real(q(1, 3))), 9L);
    Real cm_tol = min(tol, Real(1e-25));
    out.push_back(make_check("L(f,2) = Gamma(1/3)^9/(96 pi^4)",
                             critical_l_value(form, 2, 1.0, w).value,
                             g9 / (Real(96L) * pow(pi, 4L)), cm_tol));
    out.push_back(make_check("L(f,3) = Gamma(1/3)^9/(144 sqrt3 pi^3)",
                             critical_l_value(form, 3, 1.0, w).value,
                             g9 / (Real(144L) * sqrt(Real(3L)) * pow(pi, 3L)), cm_tol));
  } else if (form_id == "f1" || form_id == "f2" || form_id == "f3") {
    ModularFormNumeric form = numeric_form(form_id, bits);
    Real w = fricke_constant(form);
    Real l1 = critical_l_value(form, 1, 1.0, w).value;
    Real l2 = critical_l_value(form, 2, 1.0, w).value;
    Real y = hyp3f2_weight3_reference(form_id);
    Real closed, c2, c1;
    long ell = 0;
    if (form_id == "f1") {
      closed = pi / pow(gamma(Real(q(3, 4))), 4L);
      c2 = Real(16L);
      c1 = Real(8L);
      ell = 16;
    } else if (form_id == "f2") {
      closed = pow(gamma(Real(q(1, 8))) * gamma(Real(q(3, 8))), 2L) /
               (pow(Real(2L), Real(q(7, 2))) * pow(pi, 3L));
      c2 = Real(12L) * sqrt(Real(2L));
      c1 = Real(12L);
      ell = 8;
    } else {
      closed = Real(3L) * pow(gamma(Real(q(1, 3))), 6L) /
               (pow(Real(2L), Real(q(11, 3))) * pow(pi, 4L));
      c2 = Real(12L);
      c1 = Real(4L) * sqrt(Real(3L));
      ell = 12;
    }
    out.push_back(make_check("3F2 value = Gamma closed form", y, closed, tol));
    out.push_back(make_check("3F2 value = c2 L(f,2)/pi^2", y, c2 * l2 / (pi * pi), tol));
    out.push_back(make_check("3F2 value = c1 L(f,1)/pi", y, c1 * l1 / pi, tol));
    out.push_back(make_check("|L(f,2)/L(f,1)| = 2 pi/sqrt(" + std::to_string(ell) + ")",
                             abs(l2 / l1), pi * 2L / sqrt(Real(ell)), tol));
  }
  return out;
}

std::vector<long> parse_m_range(const std::string& text) {
  std::vector<long> out;
  auto to_long = [&](const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad m value '" + s + "'");
    return v;
  };
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      long lo = to_long(text.substr(0, dots));
      long hi = to_long(text.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("empty m range '" + text + "'");
      for (long m = lo; m <= hi; ++m) out.push_back(m);
      return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      out.push_back(to_long(text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("cannot parse m range '" + text + "'");
  }
  return out;
}

}  // namespace hypermod::cli
