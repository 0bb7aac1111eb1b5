#include <doctest.h>

#include "bdsweyl/garland.hpp"

using namespace bdsweyl;

namespace {

BdsPair make(char letter, int rank, int node) { return BdsPair::build(RootSystem::build(letter, rank), node); }

}  // namespace

TEST_CASE("low-order P elements") {
  BdsPair p = make('B', 3, 3);
  const RootVec a0 = p.alpha0();
  CHECK(p_element(p, a0, 0) == HPoly::constant(1));
  CHECK(p_element(p, a0, 1) == h_alpha(p, a0, 1) * Rational(-1));
  const HPoly h1 = h_alpha(p, a0, 1), h2 = h_alpha(p, a0, 2);
  CHECK(p_element(p, a0, 2) == h1 * h1 * Rational(1, 2) - h2 * Rational(1, 2));
  // h_{alpha_0} = h_2 + h_3 for (B3, j = 3).
  CHECK(h_alpha(p, a0, 1) == HPoly::generator({2, 1, 0}) + HPoly::generator({3, 1, 0}));
  CHECK_THROWS_AS(p_element(p, -a0, 1), std::invalid_argument);
}

TEST_CASE("exp series") {
  BdsPair p = make('B', 3, 3);
  HSeries s0 = exp_series(p, p.alpha0(), 0);
  REQUIRE(s0.coefficients.size() == 1);
  CHECK(s0.coefficients[0] == HPoly::constant(1));
  CHECK(exp_agreement_check(p, p.alpha0(), 3).ok);
  HSeries simple = exp_series(p, unit_vector(3, 1), 3);
  for (const auto& c : simple.coefficients)
    for (const auto& [m, x] : c.terms())
      for (const auto& [g, e] : m.factors) CHECK(g.node == 1);
}

TEST_CASE("identity checks on named cases") {
  BdsPair b3 = make('B', 3, 3);
  CHECK(product_formula_check(b3, b3.alpha0(), 4).ok);
  CHECK(grouplike_check(b3, b3.alpha0(), 3).ok);
  CHECK(grouplike_check(b3, b3.alpha0(), 0).ok);
  BdsPair g2 = make('G', 2, 1);
  CHECK(product_formula_check(g2, g2.root_system().theta(), 3).ok);
  const HPoly p1 = p_element(b3, b3.alpha0(), 1);
  CHECK(p1.coproduct() == p1.on_side(0) + p1.on_side(1));
}

TEST_CASE("every positive root up to rank 4") {
  for (const auto& spec : all_pairs(4)) {
    BdsPair p = build_pair(spec);
    for (const auto& alpha : p.root_system().positive_roots()) {
      CAPTURE(spec.name());
      CAPTURE(format_root(alpha));
      CHECK(exp_agreement_check(p, alpha, 6).ok);
      CHECK(newton_check(p, alpha, 4).ok);
      CHECK(degree_check(p, alpha, 4).ok);
      CHECK(product_formula_check(p, alpha, 4).ok);
      CHECK(grouplike_check(p, alpha, 4).ok);
    }
  }
}

TEST_CASE("HPoly arithmetic") {
  HPoly x = HPoly::generator({1, 1, 0});
  CHECK_FALSE(x == x * Rational(2));
  CHECK((x - x).is_zero());
  CHECK(x.to_string() == "(1)*H[1,1]");
  CHECK((x * x).to_string() == "(1)*H[1,1]^2");
}
