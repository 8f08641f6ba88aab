#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermod/etaforms.hpp"
#include "hypermod/exactnum.hpp"

namespace hypermod {

/// Upper parameters a₁..a_m, lower parameters b₁..b_m and the argument z.
struct HyperParams {
  std::vector<BigRational> upper;
  std::vector<BigRational> lower;
  BigRational argument{1};

  /// Lower parameters all equal to 1.
  static HyperParams with_unit_lower(std::vector<BigRational> upper, BigRational z);
  /// Throws std::invalid_argument on mismatched lengths or a nonpositive-integer lower parameter.
  void validate() const;
  size_t order() const { return upper.size(); }
  /// Primes dividing a denominator of some parameter or of z.
  std::vector<long> denominator_primes() const;
};

/// Σ_{k<N} ∏(a_j)_k/∏(b_j)_k · z^k, exact.
BigRational truncated_sum(const HyperParams& params, long terms);
/// Σ_{k<N} (c₀ + c₁k) ∏(a_j)_k/∏(b_j)_k · z^k.
BigRational truncated_linear_sum(const HyperParams& params, long terms, const BigRational& c0,
                                 const BigRational& c1);
/// The same partial sum reduced modulo p^ℓ without forming the exact rational.
BigInt truncated_sum_mod(const HyperParams& params, long terms, long p, long ell);

/// |a(p)| ≤ 2p^{(m−1)/2}.
struct WeilBoundSpec {
  int weight = 4;
  bool within(const BigInt& value, long p) const;
  /// True when the Weil window is wide enough to admit two lifts modulo p^ℓ.
  bool ambiguous(long p, long ell) const;
};

struct Eigenvalue {
  BigInt value;
  bool ambiguous = false;
};

Eigenvalue eigenvalue_from_truncation(const HyperParams& params, long p, long ell,
                                      const WeilBoundSpec& weil);

BigInt apery_number(long n);

/// Entry of the fourteen Calabi–Yau families with parameters (r, 1−r, t, 1−t).
struct CyFamily {
  BigRational r;
  BigRational t;
  int level = 1;
  std::string form_id;  ///< catalogue form; empty when no eta expression is known
  std::string lmfdb_label;

  HyperParams params(const BigRational& z = BigRational(1)) const;
  std::string id() const;  ///< "r,t", e.g. "1/2,1/3"
  bool has_eta() const;
  /// p odd and coprime to the denominators of r and t.
  bool admissible(long p) const;
};

const std::vector<CyFamily>& cy_families();
const CyFamily& find_family(const std::string& rt);

Eigenvalue eigenvalue_from_truncation(const CyFamily& family, long p, long ell = 3);

/// Weight-4 expansion assembled from truncation eigenvalues at admissible primes and a(p) = 0 at
/// inadmissible p with p² | N. Throws std::domain_error when an inadmissible prime has p² ∤ N.
QExpansion euler_reconstruction(const CyFamily& family, size_t n_max);
/// The eta expansion when the family has one, otherwise the Euler reconstruction.
QExpansion family_expansion(const CyFamily& family, size_t n_max);

struct CongruenceReport {
  std::string case_id;
  long prime = 0;
  long modulus_power = 0;
  BigInt truncated_residue;
  BigInt target_value;
  bool passed = false;
  bool ambiguous = false;
  bool conjectural = false;
  bool admissible = true;
  std::string notes;
};

/// Kronecker symbol (d/p) for the characters (−4/·), (−3/·), (−2/·).
int quadratic_character(long d, long p);
/// The character of the r ↦ 1−z symmetry: (−4/·), (−3/·), (−2/·), (−4/·) for r = ½, ⅓, ¼, ⅙.
long symmetry_character(const BigRational& r);

struct CaseInfo {
  std::string id;
  bool proved = true;
  std::string description;
};

/// The fixed catalogue; parameterized cases (OBS1, OBS4, SYM, HASSE-CHAR) appear with their
/// built-in parameter choices.
std::vector<CaseInfo> builtin_cases();
/// Parses and validates a case id; throws std::invalid_argument on unknown ids.
CaseInfo describe_case(const std::string& case_id);
CongruenceReport check_supercongruence(const std::string& case_id, long p);

}  // namespace hypermod
