#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/exactnum.hpp"

namespace hypermod {

/// η(mτ)^e.
struct EtaFactor {
  int scale = 1;
  int exponent = 1;
};

struct EtaQuotientTerm {
  BigRational coefficient{1};
  std::vector<EtaFactor> factors;

  /// Σ m·e / 24 as an exact rational.
  BigRational q_offset() const;
  /// Σ e / 2.
  BigRational weight() const;
};

struct EtaCombination {
  std::vector<EtaQuotientTerm> terms;
  int declared_level = 1;
  int declared_weight = 0;
  bool eigenform = true;

  /// Throws std::invalid_argument when a term's weight disagrees with the declared weight.
  void validate() const;
};

/// Fourier coefficients a(1..N); a0 holds the constant term if present.
class QExpansion {
 public:
  QExpansion() = default;
  explicit QExpansion(std::vector<BigRational> coefficients, BigRational a0 = BigRational(0))
      : coeffs_(std::move(coefficients)), a0_(std::move(a0)) {}

  size_t length() const { return coeffs_.size(); }
  /// a(n) for 1 ≤ n ≤ length().
  const BigRational& operator[](size_t n) const;
  const BigRational& constant_term() const { return a0_; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool all_integral() const;
  /// a(n) as an integer; throws if it is not integral.
  BigInt integer_at(size_t n) const;
  std::vector<BigInt> integers() const;
  bool is_zero() const;
  QExpansion truncated(size_t n) const;

  friend bool operator==(const QExpansion& a, const QExpansion& b) = default;

 private:
  std::vector<BigRational> coeffs_;
  BigRational a0_;
};

class InsufficientLength : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

QExpansion eta_expand(const EtaQuotientTerm& term, size_t n_max);
QExpansion combo_expand(const EtaCombination& form, size_t n_max);
BigInt hecke_eigenvalue(const QExpansion& expansion, long p);

/// Local data at a prime: a(p) and whether the prime is good.
struct EulerData {
  std::map<long, BigInt> good;  ///< a(p) at good primes
  std::map<long, BigInt> bad;   ///< a(p) at bad primes, extended as a(p^r) = a(p)^r
};

/// Multiplicative extension with a(p^{r+1}) = a(p)a(p^r) − χ(p)p^{k−1}a(p^{r−1})
/// at good primes, χ the Kronecker character of discriminant `character`.
QExpansion coefficients_from_euler(const EulerData& data, int weight, size_t n_max,
                                   long character = 1);

/// Dense power series with integer coefficients, truncated at the vector length.
using IntSeries = std::vector<BigInt>;
IntSeries series_mul(const IntSeries& a, const IntSeries& b, size_t length);
IntSeries series_reciprocal(const IntSeries& a, size_t length);
IntSeries series_pow(const IntSeries& a, long e, size_t length);
/// ∏_{n≥1}(1 − x^n) to the given length via the pentagonal-number theorem.
IntSeries euler_function(size_t length);

struct HeckeViolation {
  std::string relation;
  size_t index = 0;
};

/// Checks a(mn)=a(m)a(n) for coprime m, n and the prime-power recursion at good primes.
std::vector<HeckeViolation> check_hecke_relations(const QExpansion& expansion, int level,
                                                  int weight, long character = 1);
/// Primes p ≤ limit with |a(p)| > 2p^{(k−1)/2}.
std::vector<long> weil_violations(const QExpansion& expansion, int weight, long limit);

/// Catalogue entry for a modular form used by the library.
struct FormInfo {
  std::string id;
  std::string label;  ///< database label when known
  int level = 1;
  int weight = 2;
  long character = 1;  ///< Kronecker discriminant of the nebentypus (1 = trivial)
  std::optional<EtaCombination> eta;
  std::string description;
};

const std::vector<FormInfo>& builtin_forms();
const FormInfo& find_form(const std::string& id);
std::optional<FormInfo> lookup_form(const std::string& id);

/// Process-wide memoized expansion of a catalogue form with eta data.
QExpansion cached_expansion(const std::string& form_id, size_t n_max);

/// CSV cache with header `n,a_n`.
void write_qexpansion_csv(const QExpansion& expansion, const std::filesystem::path& path);
QExpansion read_qexpansion_csv(const std::filesystem::path& path);

}  // namespace hypermod
