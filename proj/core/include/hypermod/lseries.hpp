#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hypermod/etaforms.hpp"
#include "hypermod/real.hpp"

namespace hypermod {

/// A cusp form with its level and weight, evaluated at a fixed working precision.
struct ModularFormNumeric {
  QExpansion qexp;
  int level = 1;
  int weight = 2;
  mpfr_prec_t working_precision = 256;
};

/// Number of coefficients such that the Deligne-bound tail of Σ a(n)e^{−2πnt} is under 2^{−bits}.
size_t terms_needed(int weight, double t, mpfr_prec_t bits);
/// Smallest axis point used by the folded L-value and functional-equation checks.
double minimal_axis_point(int level);

/// Expansion long enough for every evaluation this module performs at the given precision.
ModularFormNumeric numeric_form(const QExpansion& qexp, int level, int weight, mpfr_prec_t bits);
ModularFormNumeric numeric_form(const std::string& form_id, mpfr_prec_t bits);
/// Required expansion length for numeric_form at this level, weight and precision.
size_t required_length(int level, int weight, mpfr_prec_t bits);

/// Σ a(n)e^{−2πnt} with a tail estimate.
Estimate f_on_axis(const ModularFormNumeric& form, const Real& t);

class FrickeUnstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrickeMeasurement {
  Real w;            ///< value at the first sample point
  Real w_second;     ///< value at the second sample point
  Real discrepancy;  ///< |w − w_second|
  bool stable = false;
};

/// w(t) = f(i/(Nt)) / ((√N t)^k f(it)) at t = 1.1/√N and t = 1.37/√N.
FrickeMeasurement measure_fricke(const ModularFormNumeric& form);
/// The measured constant; throws FrickeUnstable when the two sample points disagree.
Real fricke_constant(const ModularFormNumeric& form);

struct LValueResult {
  long s = 0;
  Real value;
  Real error_bound;
  Real fricke_constant;
  /// false when the error bound exceeds |value|·10⁻³.
  bool meaningful() const;
};

/// Γ(s, x) for integer s ≥ 1 by the finite closed form.
Real upper_incomplete_gamma(long s, const Real& x);

/// L(f, m) from the integral folded at t₀ = fold_factor/√N.
LValueResult critical_l_value(const ModularFormNumeric& form, long m, double fold_factor = 1.0,
                              std::optional<Real> w = std::nullopt);
/// max over t₀ ∈ {0.7, 1, 1.4}/√N and critical m of |L_{t₀}(m) − L_{1/√N}(m)|.
Real validate_functional_equation(const ModularFormNumeric& form,
                                  std::optional<Real> w = std::nullopt);

}  // namespace hypermod
