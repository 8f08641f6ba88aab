#include <gtest/gtest.h>

#include <filesystem>

#include "hypermod/etaforms.hpp"

using namespace hypermod;

namespace {
std::vector<long> head(const QExpansion& f, size_t n) {
  std::vector<long> out;
  for (size_t i = 1; i <= n; ++i) out.push_back(f.integer_at(i).get_si());
  return out;
}
}  // namespace

// Frozen from tests/oracles/exact_oracle.py.
TEST(EtaExpandTest, PrototypeMatchesOracle) {
  QExpansion f = cached_expansion("8.4-prototype", 30);
  EXPECT_EQ(head(f, 30),
            (std::vector<long>{1, 0, -4, 0, -2, 0, 24, 0, -11, 0, -44, 0, 22, 0, 8, 0, 50, 0, 44, 0,
                               -96, 0, -56, 0, -121, 0, 152, 0, 198, 0}));
}

TEST(EtaExpandTest, SingleQuotientsMatchOracle) {
  EXPECT_EQ(head(cached_expansion("9.4-cm", 30), 30),
            (std::vector<long>{1, 0, 0, -8, 0, 0, 20, 0, 0, 0, 0, 0, -70, 0, 0, 64, 0, 0, 56, 0,
                               0, 0, 0, 0, -125, 0, 0, -160, 0, 0}));
  EXPECT_EQ(head(cached_expansion("f1", 30), 30),
            (std::vector<long>{1, 0, 0, 0, -6, 0, 0, 0, 9, 0, 0, 0, 10, 0, 0, 0, -30, 0, 0, 0, 0,
                               0, 0, 0, 11, 0, 0, 0, 42, 0}));
}

TEST(EtaQuotientTermTest, OffsetAndWeight) {
  EtaQuotientTerm t{BigRational(1), {{2, 4}, {4, 4}}};
  EXPECT_EQ(t.q_offset(), BigRational(1));
  EXPECT_EQ(t.weight(), BigRational(4));
  EtaCombination bad{{t}, 8, 3, true};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(EtaExpandTest, CatalogueFormsAreHeckeEigenforms) {
  for (const FormInfo& info : builtin_forms()) {
    if (!info.eta) continue;
    QExpansion f = cached_expansion(info.id, 200);
    EXPECT_TRUE(f.all_integral()) << info.id;
    EXPECT_TRUE(check_hecke_relations(f, info.level, info.weight, info.character).empty())
        << info.id;
    EXPECT_TRUE(weil_violations(f, info.weight, 200).empty()) << info.id;
  }
}

TEST(EulerTest, RebuildsPrototypeFromPrimes) {
  QExpansion f = cached_expansion("8.4-prototype", 300);
  EulerData data;
  for (long p : primes_up_to(300)) {
    (p == 2 ? data.bad : data.good)[p] = hecke_eigenvalue(f, p);
  }
  EXPECT_EQ(coefficients_from_euler(data, 4, 300), f);
}

TEST(SeriesTest, EulerFunctionPentagonal) {
  IntSeries e = euler_function(16);
  std::vector<long> want{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (size_t i = 0; i < want.size(); ++i) EXPECT_EQ(e[i], want[i]) << i;
  IntSeries inv = series_reciprocal(e, 10);  // partition numbers
  EXPECT_EQ(inv[9], 30);
  EXPECT_EQ(series_pow(e, -1, 10), inv);
}

TEST(QExpansionTest, InsufficientLengthAndIntegrality) {
  QExpansion f = cached_expansion("8.4-prototype", 10);
  EXPECT_THROW(f[11], InsufficientLength);
  QExpansion g({BigRational(BigInt(1), BigInt(2))});
  EXPECT_FALSE(g.all_integral());
  EXPECT_THROW(g.integer_at(1), std::domain_error);
}

TEST(CatalogueTest, LookupAndUnknownIds) {
  EXPECT_EQ(find_form("g").weight, 6);
  EXPECT_EQ(find_form("8.4-prototype").label, "8.4.1.a");
  EXPECT_FALSE(lookup_form("nope").has_value());
  EXPECT_THROW(find_form("nope"), std::invalid_argument);
  EXPECT_THROW(cached_expansion("72.4", 10), std::invalid_argument);
}

TEST(CsvCacheTest, RoundTripIsExact) {
  auto path = std::filesystem::temp_directory_path() / "hypermod-qexp-test.csv";
  QExpansion f = cached_expansion("g", 120);
  write_qexpansion_csv(f, path);
  EXPECT_EQ(read_qexpansion_csv(path), f);
  std::filesystem::remove(path);
}
