#include "hypermod/ellcurve.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "hypermod/special.hpp"

namespace hypermod {

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

bool p_integral(const BigRational& x, long p) { return x.denominator() % p != 0; }

long residue_long(const BigRational& x, long p) {
  return residue_mod(x, BigInt(p)).get_si();
}

// Counts affine solutions plus infinity; the model must be p-integral.
long enumerate_points(const Cubic& m, long p) {
  long c0 = residue_long(m.c0, p), c1 = residue_long(m.c1, p);
  long c2 = residue_long(m.c2, p), c3 = residue_long(m.c3, p);
  std::vector<char> square(static_cast<size_t>(p), 0);
  for (long x = 1; x < p; ++x) square[static_cast<size_t>((x * x) % p)] = 1;
  long count = 1;
  for (long x = 0; x < p; ++x) {
    long v = ((c3 * x + c2) % p * x + c1) % p;
    v = (v * x + c0) % p;
    if (v == 0) {
      count += 1;
    } else if (square[static_cast<size_t>(v)]) {
      count += 2;
    }
  }
  return count;
}

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

const std::vector<long> kTwistCandidates{1, -1, 2, -2, 3, -3, 6, -6};

const std::vector<BigRational>& calibration_points() {
  static const std::vector<BigRational> pts{q(-7, 3), q(-2), q(5, 4), q(3), q(7, 2), q(-1, 5),
                                            q(13, 4), q(-29, 9)};
  return pts;
}

HyperParams pair_params(const BigRational& r, const BigRational& z) {
  return HyperParams::with_unit_lower({r, BigRational(1) - r}, z);
}

// The truncation residue mod p, or nullopt when p is not good for (r, z) and the model.
std::optional<BigInt> truncation_residue(const CurveFamily& fam, const BigRational& r, long p) {
  if (!p_integral(r, p) || !p_integral(fam.z, p)) return std::nullopt;
  if (reduction_obstruction(fam.model(), p)) return std::nullopt;
  return balanced_mod(truncated_sum_mod(pair_params(r, fam.z), p, p, 1), BigInt(p));
}

}  // namespace

std::string kind_id(CurveKind kind) {
  switch (kind) {
    case CurveKind::LEGENDRE_TWIST: return "legendre";
    case CurveKind::W3: return "w3";
    case CurveKind::W4: return "w4";
    case CurveKind::W6: return "w6";
  }
  return "?";
}

CurveKind parse_kind(const std::string& id) {
  for (CurveKind k : {CurveKind::LEGENDRE_TWIST, CurveKind::W3, CurveKind::W4, CurveKind::W6}) {
    if (kind_id(k) == id) return k;
  }
  throw std::invalid_argument("unknown curve family '" + id + "'");
}

BigRational default_parameter(CurveKind kind) {
  switch (kind) {
    case CurveKind::LEGENDRE_TWIST: return q(1, 2);
    case CurveKind::W3: return q(1, 3);
    case CurveKind::W4: return q(1, 4);
    case CurveKind::W6: return q(1, 6);
  }
  return q(1, 2);
}

BigRational Cubic::discriminant() const {
  const BigRational &a = c3, &b = c2, &c = c1, &d = c0;
  return b * b * c * c - BigRational(4) * a * c * c * c - BigRational(4) * b * b * b * d -
         BigRational(27) * a * a * d * d + BigRational(18) * a * b * c * d;
}

Cubic CurveFamily::model() const {
  const BigRational& t = z;
  switch (kind) {
    case CurveKind::LEGENDRE_TWIST:  // x(1−x)(x−z)
      return {BigRational(0), -t, BigRational(1) + t, BigRational(-1)};
    case CurveKind::W3:
      return {BigRational(2) * (BigRational(27) - BigRational(36) * t + BigRational(8) * t * t),
              BigRational(-3) * (BigRational(9) - BigRational(8) * t), BigRational(0),
              BigRational(1)};
    case CurveKind::W4:
      return {BigRational(54) * (BigRational(1) - BigRational(9) * t),
              BigRational(-27) * (BigRational(1) + BigRational(3) * t), BigRational(0),
              BigRational(1)};
    case CurveKind::W6:
      return {BigRational(54) * (BigRational(1) - BigRational(2) * t), BigRational(-27),
              BigRational(0), BigRational(1)};
  }
  throw std::logic_error("unhandled curve kind");
}

void CurveFamily::validate() const {
  if (z.is_zero() || z == BigRational(1)) throw std::invalid_argument("z must avoid 0 and 1");
  if (model().discriminant().is_zero()) {
    throw std::invalid_argument("the fibre at z = " + z.to_string() + " is singular");
  }
}

Cubic legendre_hat(const BigRational& z) {
  return {BigRational(0), z, -(BigRational(1) + z), BigRational(1)};
}

std::optional<std::string> reduction_obstruction(const Cubic& m, long p) {
  if (p < 3 || !is_prime(p)) return "p = " + std::to_string(p) + " is not an odd prime";
  for (const BigRational* c : {&m.c0, &m.c1, &m.c2, &m.c3}) {
    if (!p_integral(*c, p)) return "model is not " + std::to_string(p) + "-integral";
  }
  if (residue_long(m.c3, p) == 0) return "leading coefficient vanishes mod " + std::to_string(p);
  if (residue_long(m.discriminant(), p) == 0) {
    return "discriminant ≡ 0 (mod " + std::to_string(p) + ")";
  }
  return std::nullopt;
}

bool TraceRecord::within_hasse() const {
  return static_cast<double>(trace) * static_cast<double>(trace) <= 4.0 * static_cast<double>(p);
}

long count_points(const Cubic& model, long p) {
  if (auto why = reduction_obstruction(model, p)) throw BadReduction("bad reduction: " + *why);
  return enumerate_points(model, p);
}

long count_points(const CurveFamily& family, long p) { return count_points(family.model(), p); }

long count_points_any(const Cubic& model, long p) {
  require_odd_prime(p);
  for (const BigRational* c : {&model.c0, &model.c1, &model.c2, &model.c3}) {
    if (!p_integral(*c, p)) throw BadReduction("model is not " + std::to_string(p) + "-integral");
  }
  return enumerate_points(model, p);
}

TraceRecord trace_record(const CurveFamily& family, long p) {
  TraceRecord rec;
  rec.p = p;
  rec.point_count = count_points(family, p);
  rec.trace = p + 1 - rec.point_count;
  return rec;
}

const TwistCalibration& twist_calibration(CurveKind kind, const BigRational& r) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, TwistCalibration> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), r.to_string());
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  TwistCalibration cal;
  cal.kind = kind;
  cal.r = r;
  std::vector<std::pair<BigInt, long>> samples;  // (residue, p) paired with traces below
  std::vector<long> traces;
  for (const BigRational& z : calibration_points()) {
    CurveFamily fam{kind, z};
    try {
      fam.validate();
    } catch (const std::invalid_argument&) {
      continue;
    }
    cal.sample_z.push_back(z);
    for (long p : primes_in(3, 50)) {
      auto res = truncation_residue(fam, r, p);
      if (!res) continue;
      samples.emplace_back(*res, p);
      traces.push_back(trace_record(fam, p).trace);
    }
  }
  cal.primes_checked = static_cast<long>(samples.size());
  for (long d : kTwistCandidates) {
    bool ok = true;
    for (size_t i = 0; i < samples.size() && ok; ++i) {
      long p = samples[i].second;
      BigInt diff = samples[i].first - BigInt(kronecker(d, p) * traces[i]);
      ok = (diff % p == 0);
    }
    if (ok) cal.consistent.push_back(d);
  }
  if (cal.consistent.size() != 1) {
    throw std::runtime_error("no unique twist character for family " + kind_id(kind) +
                             " at r = " + r.to_string());
  }
  cal.character = cal.consistent.front();
  return cache.emplace(key, std::move(cal)).first->second;
}

CongruenceReport trace_congruence(const CurveFamily& family, const BigRational& r, long p) {
  family.validate();
  CongruenceReport rep;
  rep.case_id = "ELL:" + family.id() + ":" + family.z.to_string() + ":r=" + r.to_string();
  rep.prime = p;
  rep.modulus_power = 1;
  rep.conjectural = !(r == default_parameter(family.kind));
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (!p_integral(r, p) || !p_integral(family.z, p)) {
    rep.admissible = false;
    rep.notes = "p divides a denominator of r or z";
    return rep;
  }
  if (auto why = reduction_obstruction(family.model(), p)) {
    rep.admissible = false;
    rep.notes = "bad reduction: " + *why;
    return rep;
  }
  const TwistCalibration* calp = nullptr;
  try {
    calp = &twist_calibration(family.kind, r);
  } catch (const std::runtime_error& e) {
    if (!rep.conjectural) throw;
    rep.truncated_residue = *truncation_residue(family, r, p);
    rep.target_value = BigInt(trace_record(family, p).trace);
    rep.notes = e.what();
    return rep;
  }
  const TwistCalibration& cal = *calp;
  TraceRecord tr = trace_record(family, p);
  rep.truncated_residue = *truncation_residue(family, r, p);
  rep.target_value = BigInt(kronecker(cal.character, p) * tr.trace);
  rep.passed = ((rep.truncated_residue - rep.target_value) % p) == 0;
  rep.ambiguous = p <= 13;
  rep.notes = "twist character (" + std::to_string(cal.character) + "/p), calibrated on " +
              std::to_string(cal.primes_checked) + " primes";
  return rep;
}

bool legendre_isomorphism_holds(const BigRational& z, long p) {
  CurveFamily reflected{CurveKind::LEGENDRE_TWIST, BigRational(1) - z};
  Cubic hat = legendre_hat(z);
  return count_points(reflected, p) == count_points(hat, p);
}

Estimate period_integral(const Real& z, mpfr_prec_t bits) {
  PrecisionGuard guard(bits + 16);
  if (!(z < Real(1L))) throw std::domain_error("period_integral needs z < 1");
  Real one(1L);
  Estimate e = tanh_sinh(
      [&](const Real& t, const Real& omt) { return one / sqrt(t * omt * (one - z * t)); },
      bits + 16);
  return {rounded(e.value, bits), rounded(e.error + epsilon(bits) * abs(e.value), bits)};
}

void write_trace_csv(const CurveFamily& family, const std::vector<TraceRecord>& records,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "family,z,p,count,trace\n";
  for (const TraceRecord& r : records) {
    out << family.id() << ',' << family.z.to_string() << ',' << r.p << ',' << r.point_count << ','
        << r.trace << '\n';
  }
}

std::vector<TraceRecord> read_trace_csv(const std::filesystem::path& path, CurveFamily* family) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "family,z,p,count,trace") {
    throw std::runtime_error(path.string() + ": unexpected header");
  }
  std::vector<TraceRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 5) throw std::runtime_error(path.string() + ": malformed row '" + line + "'");
    if (family) *family = CurveFamily{parse_kind(f[0]), BigRational::parse(f[1])};
    TraceRecord r;
    r.p = std::stol(f[2]);
    r.point_count = std::stol(f[3]);
    r.trace = std::stol(f[4]);
    out.push_back(r);
  }
  return out;
}

}  // namespace hypermod
