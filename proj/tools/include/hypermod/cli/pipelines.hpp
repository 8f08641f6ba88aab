#pragma once

#include <string>
#include <vector>

#include "hypermod/cli/config.hpp"
#include "hypermod/recon.hpp"
#include "hypermod/trunchyper.hpp"

namespace hypermod::cli {

/// One L-value compared against its hypergeometric partner.
struct RatioEntry {
  long m = 0;
  Real l_value;
  Real l_error;
  Real reference;  ///< F_m(1), or Re ₃F₂ for the weight-3 forms
  Real ratio;      ///< L(f,m)/reference, with π^m removed for the weight-3 forms
  Real ratio_error;
  RationalGuess guess;
  QuadraticCoefficient quadratic;  ///< filled for the weight-3 forms
  bool vanishing = false;          ///< L(f,m) is numerically zero
  bool conjectural = true;
  std::string relation;
};

struct RatioReport {
  std::string form_id;
  std::string family_id;
  int level = 0;
  int weight = 0;
  Real fricke;
  Real fe_residual;
  std::string reference_name;
  std::vector<RatioEntry> entries;
};

/// L(f,m)/F_m(1) for a Calabi–Yau family, m ⊂ {1, 2, 3}.
RatioReport family_ratios(const CyFamily& family, const std::vector<long>& ms,
                          const RunConfig& cfg);
/// L(g,m)/F_m(1) for the weight-6 form and (½)⁶, m ⊂ {1..5}.
RatioReport weight6_ratios(const std::vector<long>& ms, const RunConfig& cfg);
/// L(f,m)/π^m against Re ₃F₂(½,½,½;1,1|z) with z = 1, −1, 4 for f1, f2, f3; m ⊂ {1, 2}.
RatioReport weight3_ratios(const std::string& form_id, const std::vector<long>& ms,
                           const RunConfig& cfg);
/// Dispatches on a form id, a family id "r,t", or "g"; an empty ms selects every critical m.
RatioReport lratio(const std::string& id, std::vector<long> ms, const RunConfig& cfg);

struct IdentityCheck {
  std::string name;
  Real lhs;
  Real rhs;
  Real relative_error;
  Real tolerance;
  bool passed = false;
};

/// Closed-form identities attached to a form: 8.4-prototype, 9.4-cm, f1, f2 and f3.
std::vector<IdentityCheck> form_identities(const std::string& form_id, const RunConfig& cfg);

/// Σ_k (4k+1)(½)_k⁶/k!⁶ with an asymptotic tail.
Estimate long4_series(mpfr_prec_t bits);

/// Parses "1..5", "2,3" or "2".
std::vector<long> parse_m_range(const std::string& text);

}  // namespace hypermod::cli
