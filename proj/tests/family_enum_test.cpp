#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permcycle/family_enum.hpp"
#include "permcycle/serialize.hpp"

namespace permcycle {
namespace {

using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

TEST(FactorPairs, Examples) {
  EXPECT_EQ(factor_pairs(Field::prime(13), 2), (Pairs{{1, 12}, {2, 6}, {3, 4}, {6, 2}}));
  EXPECT_EQ(factor_pairs(Field::prime(13), 3), (Pairs{{1, 12}, {2, 6}, {4, 3}}));
  EXPECT_EQ(factor_pairs(Field::prime(3), 2), (Pairs{{1, 2}}));
}

TEST(EnumerateFamily, Examples) {
  const Field f13 = Field::prime(13);
  const auto bin = enumerate_family(f13, Family::Bin, 3);
  ASSERT_EQ(bin.size(), 2u);
  EXPECT_EQ(bin[0].poly.format(), "3x^7+6x");
  EXPECT_EQ(bin[1].poly.format(), "10x^7+6x");
  const auto tri = enumerate_family(f13, Family::Tri, 4);
  ASSERT_EQ(tri.size(), 6u);
  Verifier verifier(f13);
  for (const auto& c : tri) {
    const auto report = verifier.verify(c);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.cycle_type->to_string(), "1+4^3");
  }
  EXPECT_EQ(enumerate_family(f13, Family::Bin, 6).size(), 2u);
  EXPECT_ERROR_CODE(FamilyEnumerator(f13, Family::Bin, 5), ErrorCode::BadDivisibility);
  EXPECT_ERROR_CODE(FamilyEnumerator(f13, Family::Bin, 4), ErrorCode::BadDivisibility);
  EXPECT_ERROR_CODE(FamilyEnumerator(f13, Family::Cyclo, 3, 5), ErrorCode::BadDivisibility);
}

TEST(EnumerateFamily, LexicographicUnitOrder) {
  const Field f = Field::of_order(61);
  const auto all = enumerate_family(f, Family::Tri, 10);
  for (std::size_t i = 1; i < all.size(); ++i) {
    ASSERT_LT(all[i - 1].units, all[i].units);
  }
}

TEST(CountFamily, Examples) {
  const Field f121 = Field::extension(11, 2);
  const auto bin = count_family(f121, Family::Bin, 60);
  EXPECT_EQ(bin.closed_form, 240u);
  EXPECT_EQ(bin.exhaustive, 240u);
  const auto tri = count_family(f121, Family::Tri, 40);
  EXPECT_EQ(tri.closed_form, 4080u);
  EXPECT_EQ(tri.exhaustive, 4080u);
  const auto f89 = count_family(Field::prime(89), Family::Bin, 11);
  EXPECT_EQ(f89.closed_form, 90u);
  EXPECT_TRUE(f89.agree());
}

// Closed form against the stream for every family and field q <= 1000,
// families capped in size; the acceptance suite covers BIN uncapped.
TEST(CountFamily, ClosedFormMatchesEnumeration) {
  for (const auto q : oracle::odd_prime_powers(1000)) {
    const Field f = Field::of_order(q);
    for (const auto m : divisors(q - 1)) {
      const std::uint64_t d = (q - 1) / m;
      const std::uint64_t phi = euler_phi(m);
      if (d % 2 == 0 && phi <= 48) {
        ASSERT_TRUE(count_family(f, Family::Bin, m).agree()) << q << " " << m;
        if (m <= 24) ASSERT_TRUE(count_family(f, Family::Bin, m, 0, UnitPool::Mixed).agree()) << q << " " << m;
      }
      if (d % 3 == 0 && phi <= 12) {
        ASSERT_TRUE(count_family(f, Family::Tri, m).agree()) << q << " " << m;
        if (m <= 8) ASSERT_TRUE(count_family(f, Family::Tri, m, 0, UnitPool::Mixed).agree()) << q << " " << m;
      }
      if (d % 4 == 0 && phi <= 8) ASSERT_TRUE(count_family(f, Family::Cyclo, m, 4).agree()) << q << " " << m;
      if (phi <= 48) ASSERT_TRUE(count_family(f, Family::GeomSum, m).agree()) << q << " " << m;
      if (m <= 24) ASSERT_TRUE(count_family(f, Family::GeomSum, m, 0, UnitPool::Mixed).agree()) << q << " " << m;
    }
  }
}

TEST(CheckFamily, DeterministicAndVerified) {
  const Field f = Field::of_order(121);
  std::vector<std::string> first, second;
  CheckOptions options;
  options.distinct = true;
  options.threads = 3;
  const auto a = check_family(f, Family::Tri, 20, 3, options,
                              [&](const Construction& c, const VerificationReport* r) {
                                ASSERT_NE(r, nullptr);
                                first.push_back(construction_to_json(c).dump());
                              });
  options.threads = 1;
  const auto b = check_family(f, Family::Tri, 20, 3, options,
                              [&](const Construction& c, const VerificationReport*) {
                                second.push_back(construction_to_json(c).dump());
                              });
  EXPECT_EQ(first, second);
  EXPECT_EQ(a.count, 504u);
  EXPECT_EQ(a.count, b.count);
  EXPECT_TRUE(a.verified);
  EXPECT_EQ(a.failures, 0u);
  EXPECT_EQ(a.distinct, std::optional<std::uint64_t>{504});
}

TEST(ReproduceTable, SmallFields) {
  auto summary = [](const std::vector<FamilyRow>& rows) {
    std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t, std::uint64_t>> out;
    for (const auto& r : rows) out.emplace_back(std::string(family_tag(r.family)), r.m, r.d, r.count);
    return out;
  };
  using Rows = std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t, std::uint64_t>>;
  const auto f9 = reproduce_table(Field::of_order(9));
  EXPECT_EQ(summary(f9), (Rows{{"BIN", 4, 2, 2}}));
  EXPECT_TRUE(f9[0].verified);
  EXPECT_EQ(f9[0].cycle_type.to_string(), "1+4^2");

  // Divisor-scan oracle for F_13: d even and phi(m) >= 2 for BIN, 3 | d and
  // phi(m) >= 3 for TRI.
  Rows expected;
  for (const auto m : divisors(12)) {
    if ((12 / m) % 2 == 0 && euler_phi(m) >= 2) expected.emplace_back("BIN", m, 12 / m, euler_phi(m) * (euler_phi(m) - 1));
  }
  for (const auto m : divisors(12)) {
    const auto phi = euler_phi(m);
    if ((12 / m) % 3 == 0 && phi >= 3) expected.emplace_back("TRI", m, 12 / m, phi * phi * phi - phi);
  }
  const auto f13 = reproduce_table(Field::prime(13));
  EXPECT_EQ(summary(f13), expected);
  for (const auto& r : f13) EXPECT_TRUE(r.verified);
  EXPECT_TRUE(reproduce_table(Field::prime(3)).empty());
}

TEST(ReproduceTable, TsvForm) {
  const auto rows = reproduce_table(Field::of_order(9));
  EXPECT_EQ(rows_to_tsv(rows, false), "family\tm\td\tcycle_type\tcount\tverified\nBIN\t4\t2\t1+4^2\t2\ttrue\n");
}

}  // namespace
}  // namespace permcycle
