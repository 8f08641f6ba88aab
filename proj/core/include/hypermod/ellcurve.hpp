#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/exactnum.hpp"
#include "hypermod/real.hpp"
#include "hypermod/recon.hpp"
#include "hypermod/trunchyper.hpp"

namespace hypermod {

enum class CurveKind { LEGENDRE_TWIST, W3, W4, W6 };

/// "legendre", "w3", "w4", "w6".
std::string kind_id(CurveKind kind);
CurveKind parse_kind(const std::string& id);
/// The hypergeometric parameter paired with each pencil: ½, ⅓, ¼, ⅙.
BigRational default_parameter(CurveKind kind);

/// y² = c₃x³ + c₂x² + c₁x + c₀.
struct Cubic {
  BigRational c0, c1, c2, c3;
  /// Discriminant of the cubic on the right-hand side.
  BigRational discriminant() const;
};

struct CurveFamily {
  CurveKind kind = CurveKind::LEGENDRE_TWIST;
  BigRational z;

  /// Throws std::invalid_argument for z ∈ {0, 1} or a singular fibre.
  void validate() const;
  Cubic model() const;
  std::string id() const { return kind_id(kind); }
};

/// y² = x(x−1)(x−z), the −1 twist of the Legendre-twist fibre.
Cubic legendre_hat(const BigRational& z);

class BadReduction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Empty when the model has good reduction at the odd prime p; otherwise the obstruction.
std::optional<std::string> reduction_obstruction(const Cubic& model, long p);

struct TraceRecord {
  long p = 0;
  long point_count = 0;
  long trace = 0;  ///< p + 1 − point_count
  bool within_hasse() const;
};

/// #E(F_p) including the point at infinity, by enumeration over x. Throws BadReduction.
long count_points(const Cubic& model, long p);
long count_points(const CurveFamily& family, long p);
TraceRecord trace_record(const CurveFamily& family, long p);
/// Same count without the good-reduction precondition (nodal and cuspidal cubics included).
long count_points_any(const Cubic& model, long p);

/// Quadratic character (d/·) relating the truncation to the trace, fitted on good p ≤ 50.
struct TwistCalibration {
  CurveKind kind = CurveKind::LEGENDRE_TWIST;
  BigRational r;
  long character = 1;
  std::vector<BigRational> sample_z;
  long primes_checked = 0;
  /// Candidates consistent with every sample; the calibration succeeds when exactly one remains.
  std::vector<long> consistent;
};

/// Cached per (kind, r); throws std::runtime_error when no unique character fits.
const TwistCalibration& twist_calibration(CurveKind kind, const BigRational& r);

/// Σ_{k<p}(r)_k(1−r)_k/k!² z^k as a balanced residue mod p, against (d/p)·a(p).
CongruenceReport trace_congruence(const CurveFamily& family, const BigRational& r, long p);

/// Counts of y² = x(1−x)(x−(1−z)) and y² = x(x−1)(x−z) agree at p.
bool legendre_isomorphism_holds(const BigRational& z, long p);

/// ∫₀¹ dt/√(t(1−t)(1−zt)) for real z < 1.
Estimate period_integral(const Real& z, mpfr_prec_t bits);

struct ConductorSearch {
  long conductor = 0;
  Real residual;  ///< functional-equation residual at the chosen conductor
  long candidates = 0;
};

struct Weight2LRatio {
  CurveFamily family;
  BigRational r;
  long conductor = 0;
  Real conductor_residual;
  Real l_value;
  Real l_error;
  Real period;  ///< Γ(r)Γ(1−r)·Re F₀(1−z)
  Real ratio;   ///< −L(z,1)/period
  RationalGuess guess;
  bool positive_rank_suspected = false;
  bool conjectural = true;
  std::string notes;
};

/// Primes at which the fibre is bad, 2 always included.
std::vector<long> bad_primes(const CurveFamily& family);
/// a(p) used in the weight-2 L-series: the trace at good p and the singular-model count elsewhere,
/// with 0 at 2, at primes dividing den(z) and (for the Weierstrass pencils) at 3.
EulerData weight2_euler_data(const CurveFamily& family, long n_max);
/// Smallest functional-equation residual over N = ∏ p^{e_p}, e₂ ≤ 8, e₃ ≤ 5, else e ≤ 2.
ConductorSearch search_conductor(const CurveFamily& family, mpfr_prec_t bits = 64,
                                 size_t max_terms = 20000);
Weight2LRatio weight2_l_ratio(const CurveFamily& family, const BigRational& r, mpfr_prec_t bits,
                              std::optional<long> conductor = std::nullopt,
                              long max_denominator = 64);

/// CSV cache with header `family,z,p,count,trace`.
void write_trace_csv(const CurveFamily& family, const std::vector<TraceRecord>& records,
                     const std::filesystem::path& path);
std::vector<TraceRecord> read_trace_csv(const std::filesystem::path& path, CurveFamily* family);

}  // namespace hypermod
