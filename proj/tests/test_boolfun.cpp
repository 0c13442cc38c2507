#include <catch2/catch.hpp>

#include <random>

#include "oca/boolfun.hpp"
#include "oracles.hpp"

using oca::LocalRule;
using oracles::rule_of;

namespace {
LocalRule random_rule(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (auto& v : t) v = static_cast<std::uint8_t>(rng() & 1u);
  return LocalRule(n, std::move(t));
}
}  // namespace

TEST_CASE("rule numbers decode with x1 as the most significant index bit") {
  // 210 is the chi rule: x1 + x3 + x2*x3
  const LocalRule chi = LocalRule::from_rule_number(210, 3);
  const LocalRule expect = rule_of(3, [](const std::vector<int>& x) {
    return x[0] ^ x[2] ^ (x[1] & x[2]);
  });
  CHECK(chi == expect);
  CHECK(chi.rule_number() == 210);

  CHECK(LocalRule::from_rule_number(0, 2).table() == std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK(LocalRule::from_rule_number(6, 2).table() == std::vector<std::uint8_t>{0, 1, 1, 0});

  CHECK_THROWS_WITH(LocalRule::from_rule_number(16, 2),
                    Catch::Contains("16") && Catch::Contains("2^4"));
  CHECK_THROWS_AS(LocalRule::from_rule_number(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(LocalRule::from_rule_number(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(LocalRule(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LocalRule(1, {0, 2}), std::invalid_argument);
}

TEST_CASE("walsh transform equals the direct correlation sum") {
  const LocalRule zero = LocalRule::from_rule_number(0, 2);
  CHECK(oca::walsh_transform(zero).values == std::vector<std::int32_t>{4, 0, 0, 0});

  const LocalRule x1 = rule_of(2, [](const std::vector<int>& x) { return x[0]; });
  CHECK(oca::walsh_transform(x1).values == std::vector<std::int32_t>{0, 0, 4, 0});

  const LocalRule andf = rule_of(2, [](const std::vector<int>& x) { return x[0] & x[1]; });
  CHECK(oca::walsh_transform(andf).values == std::vector<std::int32_t>{2, 2, 2, -2});

  SECTION("exhaustive up to 4 variables, with Parseval") {
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
      for (std::uint64_t num = 0; num < count; ++num) {
        const LocalRule f = LocalRule::from_rule_number(num, n);
        const auto fast = oca::walsh_transform(f);
        REQUIRE(fast.values == oracles::walsh_direct(f));
        std::int64_t parseval = 0;
        for (auto v : fast.values) parseval += std::int64_t{v} * v;
        REQUIRE(parseval == std::int64_t{1} << (2 * n));
      }
    }
  }

  SECTION("random functions of 5..8 variables") {
    std::mt19937 rng(0xc0ffee);
    for (int n = 5; n <= 8; ++n)
      for (int rep = 0; rep < 25; ++rep) {
        const LocalRule f = random_rule(n, rng);
        const auto fast = oca::walsh_transform(f);
        REQUIRE(fast.values == oracles::walsh_direct(f));
        std::int64_t parseval = 0;
        for (auto v : fast.values) parseval += std::int64_t{v} * v;
        REQUIRE(parseval == std::int64_t{1} << (2 * n));
      }
  }
}

TEST_CASE("nonlinearity") {
  const LocalRule xorf = LocalRule::from_rule_number(6, 2);
  CHECK(oca::nonlinearity(xorf) == 0);

  const LocalRule andf = rule_of(2, [](const std::vector<int>& x) { return x[0] & x[1]; });
  CHECK(oca::nonlinearity(andf) == 1);

  const LocalRule f = rule_of(3, [](const std::vector<int>& x) { return x[0] ^ (x[1] & x[2]); });
  CHECK(oca::nonlinearity(f) == 2);

  SECTION("vanishes exactly on affine functions, exhaustive up to 4 variables") {
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
      for (std::uint64_t num = 0; num < count; ++num) {
        const LocalRule f = LocalRule::from_rule_number(num, n);
        REQUIRE((oca::nonlinearity(f) == 0) == (oca::degree(f) <= 1));
      }
    }
  }
}

TEST_CASE("algebraic normal form") {
  const oca::AnfForm xor_anf = oca::anf(LocalRule(2, {0, 1, 1, 0}));
  CHECK(xor_anf.coeffs == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(xor_anf.to_string() == "x1+x2");

  const oca::AnfForm and_anf = oca::anf(LocalRule(2, {0, 0, 0, 1}));
  CHECK(and_anf.coeffs == std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(and_anf.to_string() == "x1*x2");

  const oca::AnfForm chi_anf = oca::anf(LocalRule::from_rule_number(210, 3));
  CHECK(chi_anf.coeffs == std::vector<std::uint8_t>{0, 1, 0, 1, 1, 0, 0, 0});
  CHECK(chi_anf.to_string() == "x1+x3+x2*x3");

  SECTION("the Moebius transform is an involution, exhaustive up to 4 variables") {
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
      for (std::uint64_t num = 0; num < count; ++num) {
        const LocalRule f = LocalRule::from_rule_number(num, n);
        REQUIRE(oca::anf_to_rule(oca::anf(f)) == f);
      }
    }
  }
}

TEST_CASE("degree and balancedness") {
  CHECK(oca::degree(LocalRule::from_rule_number(0, 3)) == 0);
  CHECK(oca::degree(LocalRule(2, {1, 1, 1, 1})) == 0);
  CHECK(oca::degree(LocalRule::from_rule_number(6, 2)) == 1);
  CHECK(oca::degree(LocalRule::from_rule_number(210, 3)) == 2);

  CHECK(oca::is_balanced(LocalRule::from_rule_number(6, 2)));
  CHECK_FALSE(oca::is_balanced(LocalRule(2, {0, 0, 0, 1})));
  CHECK(oca::is_balanced(LocalRule::from_rule_number(210, 3)));
}

TEST_CASE("linear and affine predicates") {
  CHECK(oca::is_linear(LocalRule::from_rule_number(6, 2)));
  CHECK(oca::is_affine(LocalRule::from_rule_number(6, 2)));

  const LocalRule not_x1 = rule_of(2, [](const std::vector<int>& x) { return x[0] ^ 1; });
  CHECK(oca::is_affine(not_x1));
  CHECK_FALSE(oca::is_linear(not_x1));

  const LocalRule andf = LocalRule(2, {0, 0, 0, 1});
  CHECK_FALSE(oca::is_affine(andf));
  CHECK_FALSE(oca::is_linear(andf));
}

TEST_CASE("bipermutivity") {
  const LocalRule rule90 = LocalRule::from_rule_number(90, 3);  // x1 + x3
  const auto g90 = oca::bipermutive_generator(rule90);
  REQUIRE(g90.has_value());
  CHECK(g90->n_vars() == 1);
  CHECK(g90->table() == std::vector<std::uint8_t>{0, 0});

  const LocalRule f4 = rule_of(4, [](const std::vector<int>& x) {
    return x[0] ^ (x[1] & x[2]) ^ x[3];
  });
  const auto g4 = oca::bipermutive_generator(f4);
  REQUIRE(g4.has_value());
  CHECK(g4->table() == std::vector<std::uint8_t>{0, 0, 0, 1});

  const LocalRule notbip = rule_of(3, [](const std::vector<int>& x) {
    return (x[0] & x[1]) ^ x[2];
  });
  CHECK_FALSE(oca::bipermutive_generator(notbip).has_value());

  // chi is permutive in x1 only
  CHECK_FALSE(oca::is_bipermutive(LocalRule::from_rule_number(210, 3)));

  CHECK_THROWS_AS(oca::bipermutive_generator(LocalRule(1, {0, 1})), std::invalid_argument);

  SECTION("exactly 2^(2^(d-2)) bipermutive rules, exhaustive for d = 3 and 4") {
    for (int d = 3; d <= 4; ++d) {
      std::uint64_t found = 0;
      const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << d);
      for (std::uint64_t num = 0; num < count; ++num)
        if (oca::is_bipermutive(LocalRule::from_rule_number(num, d))) ++found;
      REQUIRE(found == std::uint64_t{1} << (std::size_t{1} << (d - 2)));
    }
  }

  SECTION("the generating function reconstructs the rule") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
      const int d = 2 + static_cast<int>(rng() % 4);
      const LocalRule g = random_rule(d - 2, rng);
      const LocalRule f = rule_of(d, [&](const std::vector<int>& x) {
        std::size_t mid = 0;
        for (int i = 1; i < d - 1; ++i) mid = (mid << 1) | static_cast<unsigned>(x[i]);
        return x[0] ^ g.bit(mid) ^ x[d - 1];
      });
      const auto back = oca::bipermutive_generator(f);
      REQUIRE(back.has_value());
      REQUIRE(*back == g);
    }
  }
}

TEST_CASE("associated polynomial of linear bipermutive rules") {
  CHECK(oca::rule_polynomial(LocalRule::from_rule_number(90, 3)) == oca::BinaryPolynomial(0b101));
  CHECK(oca::rule_polynomial(LocalRule::from_rule_number(150, 3)) == oca::BinaryPolynomial(0b111));

  const LocalRule nonlinear = rule_of(4, [](const std::vector<int>& x) {
    return x[0] ^ (x[1] & x[2]) ^ x[3];
  });
  CHECK_THROWS_AS(oca::rule_polynomial(nonlinear), std::domain_error);

  // affine with constant term is bipermutive but has no associated polynomial
  CHECK_THROWS_AS(oca::rule_polynomial(LocalRule::from_rule_number(165, 3)), std::domain_error);
}
