#include <catch2/catch.hpp>

#include <random>

#include "oca/ca.hpp"
#include "oca/search.hpp"
#include "oracles.hpp"

using oca::CellularAutomaton;
using oca::LatinSquare;
using oca::LocalRule;
using oracles::rule_of;

TEST_CASE("no-boundary CA application") {
  const CellularAutomaton adj_xor(LocalRule::from_rule_number(6, 2), 4);
  CHECK(adj_xor.output_len() == 3);
  CHECK(adj_xor.apply(std::vector<std::uint8_t>{1, 0, 0, 1}) ==
        std::vector<std::uint8_t>{1, 0, 1});

  const CellularAutomaton ca90(LocalRule::from_rule_number(90, 3), 4);
  CHECK(ca90.apply(0b1010u) == 0b00u);

  const CellularAutomaton chi(LocalRule::from_rule_number(210, 3), 3);
  CHECK(chi.apply(0b111u) == 0b1u);

  CHECK_THROWS_AS(adj_xor.apply(std::vector<std::uint8_t>{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(adj_xor.apply(0b10000u), std::invalid_argument);
  CHECK_THROWS_AS(CellularAutomaton(LocalRule::from_rule_number(90, 3), 2),
                  std::invalid_argument);
}

TEST_CASE("CA application is shift-consistent") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const int n = d + 1 + static_cast<int>(rng() % 6);
    std::vector<std::uint8_t> t(std::size_t{1} << d);
    for (auto& v : t) v = static_cast<std::uint8_t>(rng() & 1u);
    const LocalRule rule(d, std::move(t));
    const std::uint32_t x = rng() & ((std::uint32_t{1} << n) - 1);

    const CellularAutomaton full(rule, n);
    const CellularAutomaton tail(rule, n - 1);
    const std::uint32_t dropped = x & ((std::uint32_t{1} << (n - 1)) - 1);
    const std::uint32_t mask = (std::uint32_t{1} << (full.output_len() - 1)) - 1;
    REQUIRE(tail.apply(dropped) == (full.apply(x) & mask));
  }
}

TEST_CASE("latin squares from bipermutive rules") {
  const LatinSquare sq2 = oca::latin_square(LocalRule::from_rule_number(6, 2));
  CHECK(sq2.order == 2);
  CHECK(sq2.cells == std::vector<std::uint16_t>{0, 1, 1, 0});

  const LatinSquare sq90 = oca::latin_square(LocalRule::from_rule_number(90, 3));
  CHECK(sq90.order == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(sq90.at(i, j) == (i ^ j));

  CHECK_THROWS_AS(oca::latin_square(LocalRule::from_rule_number(106, 3)),  // x1*x2 + x3
                  std::invalid_argument);

  SECTION("every bipermutive rule of diameter up to 5 yields a Latin square") {
    for (int d = 3; d <= 5; ++d)
      for (const auto& rule : oca::enumerate_bipermutive(d))
        REQUIRE(oca::is_latin(oca::latin_square(rule)));
  }
}

TEST_CASE("latin property check") {
  CHECK(oca::is_latin(LatinSquare{2, {0, 1, 1, 0}}));
  CHECK_FALSE(oca::is_latin(LatinSquare{2, {0, 1, 0, 1}}));
  CHECK_FALSE(oca::is_latin(LatinSquare{2, {0, 3, 3, 0}}));
  CHECK_THROWS_AS(oca::is_latin(LatinSquare{2, {0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("orthogonality by superposition") {
  const LatinSquare a = oca::latin_square(LocalRule::from_rule_number(90, 3));
  const LatinSquare b = oca::latin_square(LocalRule::from_rule_number(150, 3));
  CHECK(oca::are_orthogonal(a, b));
  CHECK(oca::are_orthogonal(b, a));
  CHECK_FALSE(oca::are_orthogonal(a, a));

  // diameter-5 rules whose polynomials share the factor (1+X)^2
  const LocalRule f = rule_of(5, [](const std::vector<int>& x) { return x[0] ^ x[4]; });
  const LocalRule g = rule_of(5, [](const std::vector<int>& x) {
    return x[0] ^ x[1] ^ x[3] ^ x[4];
  });
  CHECK_FALSE(oca::are_orthogonal(oca::latin_square(f), oca::latin_square(g)));

  CHECK_THROWS_AS(oca::are_orthogonal(a, oca::latin_square(LocalRule::from_rule_number(6, 2))),
                  std::invalid_argument);
}

TEST_CASE("OCA pair test") {
  const LocalRule r90 = LocalRule::from_rule_number(90, 3);
  const LocalRule r150 = LocalRule::from_rule_number(150, 3);
  CHECK(oca::is_oca_pair(r90, r150));
  CHECK_FALSE(oca::is_oca_pair(r90, r90));
  CHECK_THROWS_AS(oca::is_oca_pair(r90, LocalRule::from_rule_number(6, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(oca::is_oca_pair(r90, LocalRule::from_rule_number(210, 3)),
                  std::invalid_argument);
}

TEST_CASE("coprimality criterion for linear rules") {
  const LocalRule r90 = LocalRule::from_rule_number(90, 3);
  const LocalRule r150 = LocalRule::from_rule_number(150, 3);
  CHECK(oca::linear_orthogonality_by_coprimality(r90, r150));
  CHECK_FALSE(oca::linear_orthogonality_by_coprimality(r90, r90));

  const LocalRule f = rule_of(5, [](const std::vector<int>& x) { return x[0] ^ x[4]; });
  const LocalRule g = rule_of(5, [](const std::vector<int>& x) {
    return x[0] ^ x[1] ^ x[3] ^ x[4];
  });
  CHECK_FALSE(oca::linear_orthogonality_by_coprimality(f, g));

  const LocalRule nonlinear = rule_of(4, [](const std::vector<int>& x) {
    return x[0] ^ (x[1] & x[2]) ^ x[3];
  });
  CHECK_THROWS_AS(
      oca::linear_orthogonality_by_coprimality(nonlinear, rule_of(4, [](const std::vector<int>& x) {
        return x[0] ^ x[3];
      })),
      std::domain_error);

  SECTION("equivalent to the superposition test on all linear pairs, d = 3..5") {
    for (int d = 3; d <= 5; ++d) {
      std::vector<LocalRule> linear;
      for (const auto& rule : oca::enumerate_bipermutive(d))
        if (oca::is_linear(rule)) linear.push_back(rule);
      REQUIRE(linear.size() == std::size_t{1} << (d - 2));
      for (std::size_t i = 0; i < linear.size(); ++i)
        for (std::size_t j = i + 1; j < linear.size(); ++j)
          REQUIRE(oca::linear_orthogonality_by_coprimality(linear[i], linear[j]) ==
                  oca::is_oca_pair(linear[i], linear[j]));
    }
  }
}

TEST_CASE("latin square exports") {
  const LatinSquare sq = oca::latin_square(LocalRule::from_rule_number(6, 2));
  CHECK(oca::latin_to_text(sq) == "0 1\n1 0\n");
  CHECK(oca::latin_to_csv(sq) == "0,1\n1,0\n");
}
