#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "permcycle/field.hpp"

namespace permcycle {
namespace {

std::vector<Encoding> encodings(const std::vector<FieldElement>& xs) {
  std::vector<Encoding> out;
  for (const auto& x : xs) out.push_back(x.encoding());
  return out;
}

TEST(NumberTheory, FactorizeDivisorsPhi) {
  EXPECT_EQ(factorize(120), (std::vector<PrimePower>{{2, 3}, {3, 1}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(60), 16u);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t coprime = 0;
    for (std::uint64_t i = 1; i <= n; ++i) coprime += std::gcd(i, n) == 1;
    ASSERT_EQ(euler_phi(n), coprime) << n;
  }
  EXPECT_EQ(prime_power_root(121), (PrimePower{11, 2}));
  EXPECT_EQ(prime_power_root(12).prime, 0u);
}

TEST(MakePrimeField, GeneratorAndErrors) {
  const Field f13 = Field::prime(13);
  EXPECT_EQ(f13.q(), 13u);
  EXPECT_EQ(f13.generator_encoding(), 2u);
  EXPECT_EQ(oracle::naive_order(f13, 2), 12u);
  EXPECT_EQ(Field::prime(3).generator_encoding(), 2u);
  EXPECT_EQ(Field::prime(7).generator_encoding(), 3u);

  EXPECT_ERROR_CODE(Field::prime(4), ErrorCode::NotPrime);
  EXPECT_ERROR_CODE(Field::prime(2), ErrorCode::EvenCharacteristic);
}

TEST(MakeExtensionField, DefaultModulusScan) {
  const Field f9 = Field::extension(3, 2);
  EXPECT_EQ(f9.modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(f9.modulus_text(), "t^2+1");
  const Field f121 = Field::extension(11, 2);
  EXPECT_EQ(f121.modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(f121.q(), 121u);

  // Oracle: every lower-coefficient encoding below the chosen one has a
  // root in F_p (degree 2, so reducible iff it has a root).
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Field f = Field::extension(p, 2);
    const std::uint64_t chosen = f.modulus()[0] + f.modulus()[1] * p;
    for (std::uint64_t enc = 0; enc <= chosen; ++enc) {
      const std::uint64_t a0 = enc % p, a1 = enc / p;
      bool has_root = false;
      for (std::uint64_t t = 0; t < p; ++t) has_root |= (t * t + a1 * t + a0) % p == 0;
      EXPECT_EQ(has_root, enc != chosen) << "p=" << p << " enc=" << enc;
    }
  }
}

TEST(MakeExtensionField, RejectsReducibleAndEven) {
  // t^2 + 2 = (t+1)(t+2)
  EXPECT_ERROR_CODE(Field::extension(3, 2, std::vector<std::uint64_t>{2, 0}), ErrorCode::ReducibleModulus);
  EXPECT_ERROR_CODE(Field::extension(2, 3), ErrorCode::EvenCharacteristic);
  // Full monic form is accepted too.
  EXPECT_EQ(Field::extension(3, 2, std::vector<std::uint64_t>{1, 0, 1}), Field::extension(3, 2));
  // Degree 3 and 4 moduli: the default must have no root and, for k = 4,
  // no quadratic factor; cross-check by counting field elements of each order.
  for (auto [p, k] : {std::pair{3u, 3u}, std::pair{3u, 4u}, std::pair{5u, 3u}}) {
    const Field f = Field::extension(p, k);
    std::uint64_t primitive = 0;
    for (Encoding x = 1; x < f.q(); ++x) primitive += oracle::naive_order(f, x) == f.q() - 1;
    EXPECT_EQ(primitive, euler_phi(f.q() - 1)) << f.q();
  }
}

TEST(Arithmetic, Examples) {
  const Field f13 = Field::prime(13);
  EXPECT_EQ(mul(f13.element(3), f13.element(9)), f13.element(1));
  const Field f9 = Field::extension(3, 2);
  const FieldElement t = f9.parse_element("0,1");
  EXPECT_EQ(t.encoding(), 3u);
  EXPECT_EQ(mul(t, t), f9.element(2));
  for (Encoding e = 0; e < 9; ++e) {
    const auto x = f9.element(e);
    EXPECT_TRUE(add(x, neg(x)).is_zero());
  }
  EXPECT_EQ(inv(f13.element(3)), f13.element(9));
  EXPECT_EQ(inv(f13.element(2)), f13.element(7));
  EXPECT_EQ(inv(f13.one()), f13.one());
  EXPECT_EQ(pow(f13.element(2), 6), f13.element(12));
  EXPECT_EQ(pow(f13.zero(), 5), f13.zero());
  EXPECT_EQ(pow(f13.zero(), 0), f13.one());
}

TEST(Arithmetic, ExtensionMultiplicationMatchesSchoolbook) {
  // F_9 = F_3[t]/(t^2+1): (a+bt)(c+dt) = (ac-bd) + (ad+bc)t.
  const Field f9 = Field::extension(3, 2);
  for (Encoding x = 0; x < 9; ++x) {
    for (Encoding y = 0; y < 9; ++y) {
      const std::uint64_t a = x % 3, b = x / 3, c = y % 3, d = y / 3;
      const std::uint64_t re = (a * c + 2 * b * d) % 3, im = (a * d + b * c) % 3;
      ASSERT_EQ(f9.mul(x, y), re + 3 * im);
    }
  }
}

TEST(Arithmetic, ErrorPaths) {
  const Field f13 = Field::prime(13);
  const Field f7 = Field::prime(7);
  EXPECT_THROW(add(f13.one(), f7.one()), Error);
  EXPECT_ERROR_CODE(mul(f13.one(), f7.one()), ErrorCode::FieldMismatch);
  EXPECT_ERROR_CODE(inv(f13.zero()), ErrorCode::ZeroInverse);
  EXPECT_ERROR_CODE(element_order(f13.zero()), ErrorCode::ZeroOrder);
  EXPECT_ERROR_CODE(discrete_log(f13.zero()), ErrorCode::ZeroLog);
  EXPECT_ERROR_CODE(root_of_unity(f13, 5), ErrorCode::OrderNotDividing);
}

TEST(Orders, Examples) {
  const Field f13 = Field::prime(13);
  EXPECT_EQ(element_order(f13.element(3)), 3u);
  EXPECT_EQ(element_order(f13.element(5)), 4u);
  EXPECT_EQ(element_order(f13.one()), 1u);
  EXPECT_EQ(encodings(elements_of_order(f13, 3)), (std::vector<Encoding>{3, 9}));
  EXPECT_EQ(encodings(elements_of_order(f13, 4)), (std::vector<Encoding>{5, 8}));
  EXPECT_TRUE(elements_of_order(f13, 5).empty());
  EXPECT_EQ(root_of_unity(f13, 3), f13.element(3));
  EXPECT_EQ(root_of_unity(f13, 2), f13.element(12));
  EXPECT_EQ(root_of_unity(f13, 1), f13.one());
  EXPECT_EQ(discrete_log(f13.element(3)), 4u);
  EXPECT_EQ(discrete_log(f13.element(2)), 1u);
  EXPECT_EQ(discrete_log(f13.one()), 0u);
}

TEST(Orders, GeneratorsMatchExhaustiveScan) {
  EXPECT_EQ(find_generator(Field::extension(3, 2)).encoding(), 4u);  // 1 + t
  for (const auto q : oracle::odd_prime_powers(400)) {
    const Field f = Field::of_order(q);
    ASSERT_EQ(f.generator_encoding(), oracle::naive_generator(f)) << q;
    ASSERT_EQ(find_generator(f), find_generator(Field::of_order(q))) << q;
  }
}

TEST(Encoding, ElementTextForms) {
  const Field f121 = Field::extension(11, 2);
  EXPECT_EQ(f121.parse_element("3,2").encoding(), 3u + 2 * 11);
  EXPECT_EQ(f121.parse_element("enc:25").encoding(), 25u);
  EXPECT_EQ(f121.parse_element("7").encoding(), 7u);
  EXPECT_EQ(f121.parse_element("g^1"), f121.generator());
  EXPECT_EQ(f121.format_element(25), "3,2");
  EXPECT_EQ(f121.format_element(7), "7");
  const Field f13 = Field::prime(13);
  EXPECT_EQ(f13.parse_element("-1").encoding(), 12u);
  EXPECT_EQ(f13.parse_element(" g^4 ").encoding(), 3u);
  EXPECT_THROW(f13.parse_element("abc"), Error);
  EXPECT_THROW(f13.parse_element("enc:13"), Error);
  EXPECT_THROW(f121.parse_element("1,2,3"), Error);
}

// Field invariants, exhaustive over every odd prime power q <= 2000.
TEST(FieldProperties, ExhaustiveUpTo2000) {
  for (const auto q : oracle::odd_prime_powers(2000)) {
    const Field f = Field::of_order(q);
    const std::uint64_t n = q - 1;
    std::uint64_t product = 1;
    for (const auto& pp : f.q_minus_1_factors()) {
      for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    }
    ASSERT_EQ(product, n);

    std::map<std::uint64_t, std::uint64_t> order_counts;
    for (Encoding e = 0; e < q; ++e) {
      ASSERT_EQ(f.encode(f.coefficients(e)), e);
      if (e == 0) continue;
      const auto x = f.element(e);
      const std::uint64_t ord = element_order(x);
      ASSERT_EQ(n % ord, 0u);
      ASSERT_EQ(pow(x, ord), f.one());
      ++order_counts[ord];
    }
    for (const auto m : divisors(n)) {
      const auto of_order = elements_of_order(f, m);
      ASSERT_EQ(of_order.size(), euler_phi(m)) << "q=" << q << " m=" << m;
      ASSERT_EQ(order_counts[m], euler_phi(m));
      ASSERT_TRUE(std::is_sorted(of_order.begin(), of_order.end()));
    }

    const auto g = f.generator();
    auto x = f.one();
    for (std::uint64_t e = 0; e < n; ++e) {
      ASSERT_EQ(discrete_log(x), e) << "q=" << q;
      x = x * g;
    }
  }
}

TEST(FieldProperties, OrderAgreesWithLinearScan) {
  for (const auto q : {13u, 27u, 81u, 121u, 125u, 343u, 997u}) {
    const Field f = Field::of_order(q);
    for (Encoding e = 1; e < q; ++e) ASSERT_EQ(f.order(e), oracle::naive_order(f, e)) << q << " " << e;
  }
}

}  // namespace
}  // namespace permcycle
