#include <doctest.h>

#include <random>
#include <set>

#include "bdsweyl/weylcrit.hpp"

using namespace bdsweyl;

namespace {

BdsPair make(char letter, int rank, int node) { return BdsPair::build(RootSystem::build(letter, rank), node); }

// g_0 weight r * lambda_i with i in I(j) or i = 0.
Weight0 multiple(const BdsPair& pair, int i, int r) { return Weight0(pair, {{i, r}}); }

DeltaWeight delta(std::vector<int> v) { return DeltaWeight{std::move(v)}; }

Weight0 sum_weight(const BdsPair& pair, const EvalParams& params) {
  std::map<int, int> values;
  for (int i : pair.complement()) {
    values[i] = params.mu[i];
    for (const auto& pt : params.points) values[i] += pt.lambda[i];
  }
  values[0] = params.mu.h0();
  for (const auto& pt : params.points) values[0] += h0_value(pair, pt.lambda);
  return Weight0(pair, values);
}

}  // namespace

TEST_CASE("weight conversion") {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    DeltaWeight d = weight_convert(p, multiple(p, n - 1, 1));
    CHECK(d[n] == -1);
    CHECK(d[n - 1] == 1);
    CHECK_FALSE(d.dominant());
    DeltaWeight w0 = weight_convert(p, multiple(p, 0, 1));
    std::vector<int> omega_n(n, 0);
    omega_n[n - 1] = 1;
    CHECK(w0.values == omega_n);
    CHECK(to_weight0(p, w0).h0() == 1);
  }
  BdsPair b3 = make('B', 3, 3);
  CHECK(weight_convert(b3, Weight0::zero(b3)).values == std::vector<int>{0, 0, 0});
  CHECK(delta({1, 0, 2}).to_string() == "h1=1,h2=0,h3=2");
  // G2, j = 2 has a_j^vee(alpha_0) = 2, so odd h0 values leave the weight lattice of g.
  BdsPair g2 = make('G', 2, 2);
  REQUIRE(g2.comark0(2) == 2);
  CHECK_THROWS_AS(weight_convert(g2, Weight0(g2, {{0, 1}})), std::invalid_argument);
  CHECK(weight_convert(g2, Weight0(g2, {{0, 2}})).values == std::vector<int>{0, 1});
}

TEST_CASE("conversion round trip") {
  for (const auto& spec : all_pairs(6)) {
    BdsPair p = build_pair(spec);
    for (int i = 1; i <= p.rank(); ++i) {
      std::vector<int> v(p.rank(), 0);
      v[i - 1] = 2;
      DeltaWeight d = delta(v);
      Weight0 w = to_weight0(p, d);
      CHECK(weight_convert(p, w).values == d.values);
    }
  }
}

TEST_CASE("A_lambda triviality") {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    for (int r = 0; r <= 3; ++r) CHECK(is_alambda_trivial(p, multiple(p, n - 1, r)));
    CHECK_FALSE(is_alambda_trivial(p, multiple(p, 0, 1)));
    CHECK_FALSE(is_alambda_trivial(p, multiple(p, 1, 1)));
  }
  BdsPair b3 = make('B', 3, 3);
  CHECK(is_alambda_trivial(b3, Weight0::zero(b3)));
  CHECK_FALSE(presentation(b3, multiple(b3, 0, 1)).variables.empty());
}

TEST_CASE("global Weyl irreducibility") {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    CHECK(is_global_weyl_irreducible(p, Weight0::zero(p)));
    for (int r = 1; r <= 3; ++r) CHECK(is_global_weyl_irreducible(p, multiple(p, n - 1, r)));
    for (int i = 1; i <= n - 2; ++i) CHECK_FALSE(is_global_weyl_irreducible(p, multiple(p, i, 1)));
    CHECK_FALSE(is_global_weyl_irreducible(p, multiple(p, 0, 1)));
  }
}

TEST_CASE("criteria consistency up to rank 5") {
  for (const auto& spec : all_pairs(5)) {
    BdsPair p = build_pair(spec);
    std::vector<int> keys = p.complement();
    keys.push_back(0);
    // Weights with two nonzero entries <= 3 cover every case of the criteria.
    for (std::size_t a = 0; a < keys.size(); ++a)
      for (std::size_t b = a; b < keys.size(); ++b)
        for (int x = 0; x <= 3; ++x)
          for (int y = 0; y <= 3; ++y) {
            std::map<int, int> values{{keys[a], x}};
            values[keys[b]] += y;
            Weight0 w(p, values);
            const bool trivial = is_alambda_trivial(p, w);
            CHECK(trivial == presentation(p, w).variables.empty());
            if (is_global_weyl_irreducible(p, w)) CHECK(trivial);
          }
  }
}

TEST_CASE("ideal points") {
  BdsPair b3 = make('B', 3, 3);
  Weight0 lambda(b3, {{2, 1}, {0, 1}});

  EvalParams none;
  none.mu = lambda;
  IdealPoint zero = ideal_point_from_params(b3, lambda, none);
  for (int i = 1; i <= 3; ++i) CHECK(zero.degree(i) == 0);
  CHECK(zero.value(3, 1) == 0);

  EvalParams one;
  one.mu = Weight0(b3, {{2, 1}});
  one.points.push_back({Rational(5, 2), delta({0, 0, 1})});
  IdealPoint pt = ideal_point_from_params(b3, lambda, one);
  CHECK(pt.value(3, 1) == Rational(-5, 2));
  CHECK(pt.value(2, 1) == 0);
  CHECK(weighted_product_degree(b3, pt) == 1);
  CHECK(relation_violations(b3, pt).empty());

  EvalParams repeated = one;
  repeated.mu = Weight0::zero(b3);
  repeated.points.push_back({Rational(5, 2), delta({0, 1, 0})});
  CHECK_THROWS_AS(ideal_point_from_params(b3, lambda, repeated), std::invalid_argument);
  EvalParams zero_z = one;
  zero_z.points[0].z_power = 0;
  CHECK_THROWS_AS(ideal_point_from_params(b3, lambda, zero_z), std::invalid_argument);
  EvalParams nondominant = one;
  nondominant.points[0].lambda = delta({0, 1, -1});
  CHECK_THROWS_AS(ideal_point_from_params(b3, lambda, nondominant), std::invalid_argument);
  EvalParams mismatch = one;
  mismatch.mu = Weight0::zero(b3);
  CHECK_THROWS_AS(ideal_point_from_params(b3, lambda, mismatch), std::invalid_argument);

  IdealPoint bad = pt;
  bad.pi[0] = {Rational(1), Rational(1)};
  CHECK_FALSE(relation_violations(b3, bad).empty());
}

TEST_CASE("randomized ideal points satisfy the relations") {
  std::mt19937_64 rng(17);
  const std::vector<PairSpec> specs = {{'B', 3, 3}, {'B', 4, 4}, {'G', 2, 1}, {'G', 2, 2}, {'F', 4, 3}, {'C', 4, 2}};
  for (int trial = 0; trial < 120; ++trial) {
    BdsPair p = build_pair(specs[trial % specs.size()]);
    std::uniform_int_distribution<int> small(0, 2), count(0, 3), znum(-9, 9), zden(1, 4);
    EvalParams params;
    std::map<int, int> mu;
    for (int i : p.complement()) mu[i] = small(rng);
    mu[0] = small(rng);
    params.mu = Weight0(p, mu);
    std::set<Rational> used;
    const int k = count(rng);
    while (static_cast<int>(params.points.size()) < k) {
      Rational z(znum(rng), zden(rng));
      if (z == 0 || !used.insert(z).second) continue;
      std::vector<int> v(p.rank());
      for (auto& x : v) x = small(rng);
      params.points.push_back({z, delta(v)});
    }
    Weight0 lambda = sum_weight(p, params);
    IdealPoint pt = ideal_point_from_params(p, lambda, params);
    CHECK(relation_violations(p, pt).empty());
    CHECK(weighted_product_degree(p, pt) == lambda.h0() - params.mu.h0());
    for (int i : p.complement()) CHECK(pt.degree(i) <= lambda[i]);
  }
}

TEST_CASE("local Weyl dimensions for (B_n, j = n)") {
  BdsPair b3 = make('B', 3, 3);
  CHECK(local_weyl_dim_bn(b3, 0, 1).dimension == 8);
  LocalDimension d = local_weyl_dim_bn(b3, 2, 1);
  CHECK(d.current_algebra_dim == 22);
  CHECK(d.displayed_formula == 21);
  CHECK(d.discrepancy);
  CHECK(d.spin_case);
  CHECK(d.dimension == 4);
  CHECK(local_weyl_dim_bn(b3, 1, 2).dimension == 49);
  CHECK(local_weyl_dim_bn(b3, 1, 2).displayed_formula == 36);
  CHECK(local_weyl_dim_bn(b3, Weight0(b3, {{2, 1}})).dimension == 4);
  CHECK(local_weyl_dim_bn(b3, Weight0(b3, {{0, 2}})).dimension == 64);
  CHECK_THROWS_AS(local_weyl_dim_bn(b3, Weight0(b3, {{1, 1}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(local_weyl_dim_bn(b3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_weyl_dim_bn(make('C', 3, 2), 1, 1), std::invalid_argument);

  for (int n = 3; n <= 7; ++n) {
    BdsPair p = make('B', n, n);
    for (int r = 0; r <= 3; ++r) {
      CHECK(local_weyl_dim_bn(p, 0, r).dimension == BigInt(1) << (n * r));
      CHECK_FALSE(local_weyl_dim_bn(p, 0, r).discrepancy);
      for (int i = 1; i <= n - 2; ++i) {
        BigInt one = local_weyl_dim_bn(p, i, 1).dimension;
        BigInt pow = 1;
        for (int e = 0; e < r; ++e) pow *= one;
        CHECK(local_weyl_dim_bn(p, i, r).dimension == pow);
      }
      std::vector<int> labels(n, 0);
      labels[p.g0_position(n - 1)] = r;
      CHECK(local_weyl_dim_bn(p, n - 1, r).dimension == p.g0().weyl_dim(labels));
    }
  }
  CHECK(bn_fundamental_decomposition(3, 2) == std::vector<std::pair<int, BigInt>>{{2, 21}, {0, 1}});
  CHECK(bn_fundamental_decomposition(4, 3) == std::vector<std::pair<int, BigInt>>{{3, 84}, {1, 9}});
}

TEST_CASE("sl2 local Weyl basis") {
  CHECK(sl2_local_weyl_basis(0) == std::vector<std::vector<int>>{{}});
  CHECK(sl2_local_weyl_basis(2) == std::vector<std::vector<int>>{{}, {0}, {1}, {0, 0}});
  for (int m = 0; m <= 16; ++m) CHECK(sl2_local_weyl_basis(m).size() == (std::size_t{1} << m));
  CHECK_THROWS_AS(sl2_local_weyl_basis(-1), std::invalid_argument);
}

TEST_CASE("recorded constants") {
  CHECK(lookup_constant("B3/h1=0,h2=1,h0=1/generic-ideal")->value == 22);
  auto special = lookup_constant("B3/h1=0,h2=1,h0=1/special-ideal");
  REQUIRE(special.has_value());
  CHECK(special->value == 32);
  CHECK_FALSE(special->computed);
  CHECK_FALSE(lookup_constant("B4/h0=1/generic-ideal").has_value());
}
