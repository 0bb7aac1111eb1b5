#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "bdsweyl/garland.hpp"
#include "bdsweyl/oracles.hpp"
#include "bdsweyl/weylcrit.hpp"

using namespace bdsweyl;

namespace {

// Exact arithmetic throughout: every comparison below uses a tolerance of zero.
constexpr int kMaxEntry = 3;

BdsPair make(char letter, int rank, int node) { return BdsPair::build(RootSystem::build(letter, rank), node); }

Weight0 random_weight(const BdsPair& pair, std::mt19937_64& rng, int max_entry) {
  std::uniform_int_distribution<int> dist(0, max_entry);
  std::map<int, int> values;
  for (int i : pair.complement()) values[i] = dist(rng);
  values[0] = dist(rng);
  return Weight0(pair, values);
}

struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

bool c1(Failures& f) {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    const std::string tag = "B" + std::to_string(n);
    RootVec a0 = RootVec::Zero(n), c = RootVec::Zero(n);
    a0(n - 2) = 1;
    a0(n - 1) = 2;
    c(n - 2) = 1;
    c(n - 1) = 1;
    f.expect(p.alpha0() == a0, tag + " alpha_0");
    f.expect(p.g0_components().size() == 1 &&
                 cartan_isomorphic(p.g0().cartan(), RootSystem::build('D', n).cartan()),
             tag + " g_0 type D_n");
    f.expect(p.theta_k(1) == RootVec::Ones(n), tag + " theta_1");
    f.expect(p.comarks_alpha0() == c, tag + " comarks");
    f.expect(p.graded_roots()[1].size() == static_cast<std::size_t>(2 * n), tag + " |R_1|");
  }
  return f.items.empty();
}

bool c2(Failures& f) {
  BdsPair p = make('B', 3, 3);
  Weight0 w(p, {{2, 1}, {0, 1}});
  SRPresentation pres = presentation(p, w);
  f.expect(pres.variables.size() == 2 && pres.variables[0] == SRVariable{2, 1, 0} && pres.variables[1] == SRVariable{3, 1, 0},
           "variables");
  f.expect(pres.generators == std::vector<Face>{{0, 1}}, "generators");
  f.expect(krull_dim(pres) == 1, "Krull dimension");
  std::vector<Face> fs = facets(pres).facets;
  std::sort(fs.begin(), fs.end());
  f.expect(fs == std::vector<Face>{{0}, {1}}, "facets");
  const std::vector<std::int64_t> expected = {1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2};
  f.expect(hilbert_coefficients(pres, 12) == expected, "Hilbert series");
  f.expect(oracle::brute_force_hilbert(p, w, 12) == expected, "brute-force oracle");
  return f.items.empty();
}

bool c3(Failures& f) {
  std::vector<PairSpec> specs = {{'B', 3, 3}, {'B', 4, 4}, {'G', 2, 1}, {'G', 2, 2}};
  for (int j = 1; j <= 3; ++j)
    if (RootSystem::build('C', 3).marks()(j - 1) == 2) specs.push_back({'C', 3, j});
  for (int j = 1; j <= 4; ++j)
    if (RootSystem::build('F', 4).marks()(j - 1) >= 2) specs.push_back({'F', 4, j});
  std::mt19937_64 rng(2024);
  int instances = 0;
  for (int round = 0; instances < 60; ++round) {
    const PairSpec& spec = specs[round % specs.size()];
    BdsPair p = build_pair(spec);
    Weight0 w = random_weight(p, rng, kMaxEntry);
    SRPresentation pres = presentation(p, w);
    f.expect(hilbert_coefficients(pres, 24) == oracle::brute_force_hilbert(p, w, 24), spec.name() + " " + w.to_string());
    ++instances;
  }
  return f.items.empty();
}

bool c4(Failures& f) {
  std::mt19937_64 rng(99);
  for (const auto& spec : all_pairs(8)) {
    BdsPair p = build_pair(spec);
    for (int trial = 0; trial < 3; ++trial) {
      SRPresentation pres = presentation(p, random_weight(p, rng, kMaxEntry));
      const int max_facet = static_cast<int>(facets(pres).max_facet_size());
      f.expect(krull_dim(pres) == max_facet, spec.name() + " Krull dimension vs max facet");
      if (pres.jac_zero) f.expect(max_facet == krull_closed_form(pres), spec.name() + " d_lambda " + pres.lambda.to_string());
    }
  }
  return f.items.empty();
}

bool c5(Failures& f) {
  for (const auto& spec : all_pairs(8)) {
    BdsPair p = build_pair(spec);
    if (p.comark0(p.node()) != 1) continue;
    for (int i = 1; i <= p.rank(); ++i) f.expect(p.comark0(i) <= 1, spec.name() + " node " + std::to_string(i));
  }
  return f.items.empty();
}

bool c6(Failures& f) {
  for (const auto& spec : all_pairs(8)) {
    BdsPair p = build_pair(spec);
    const int n = p.rank();
    std::vector<int> asc(n), desc, rotated;
    for (int i = 0; i < n; ++i) asc[i] = i + 1;
    desc.assign(asc.rbegin(), asc.rend());
    rotated = asc;
    std::rotate(rotated.begin(), rotated.begin() + n / 2, rotated.end());
    for (const auto& order : {asc, desc, rotated}) {
      std::vector<int> counts = reflection_chain(p, order).node_counts(n);
      for (int i = 1; i <= n; ++i) f.expect(counts[i - 1] == p.comark0(i), spec.name() + " node " + std::to_string(i));
    }
  }
  return f.items.empty();
}

bool c7(Failures& f) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 5; ++n) {
    BdsPair p = make('B', n, n);
    for (int trial = 0; trial < 20; ++trial) {
      Weight0 w = random_weight(p, rng, kMaxEntry);
      SRPresentation pres = presentation(p, w);
      SimplicialComplex c = facets(pres);
      std::vector<Face> order = canonical_shelling(pres);
      std::vector<Face> a = order, b = c.facets;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      const std::string tag = "B" + std::to_string(n) + " " + w.to_string();
      f.expect(a == b, tag + " facet set");
      f.expect(c.pure(), tag + " pure");
      f.expect(verify_shelling(c, order), tag + " shelling");
    }
  }
  SimplicialComplex t;
  const Face t1{0, 1, 2}, t2{2, 3, 4}, t3{1, 2, 3};
  t.facets = {t1, t2, t3};
  f.expect(!verify_shelling(t, {t1, t2, t3}), "bad order accepted");
  f.expect(verify_shelling(t, {t1, t3, t2}), "good order rejected");
  return f.items.empty();
}

bool c8(Failures& f) {
  for (const auto& spec : all_pairs(5)) {
    BdsPair p = build_pair(spec);
    std::vector<int> keys = p.complement();
    keys.push_back(0);
    std::vector<int> values(keys.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == keys.size()) {
        std::map<int, int> m;
        for (std::size_t k = 0; k < keys.size(); ++k) m[keys[k]] = values[k];
        Weight0 w(p, m);
        const bool trivial = is_alambda_trivial(p, w);
        f.expect(trivial == presentation(p, w).variables.empty(), spec.name() + " " + w.to_string() + " triviality vs empty variable set");
        if (is_global_weyl_irreducible(p, w)) f.expect(trivial, spec.name() + " " + w.to_string() + " irreducible => trivial");
        if (spec.type_letter == 'B' && spec.node == spec.rank) {
          bool multiple = true;
          for (std::size_t k = 0; k < keys.size(); ++k)
            if (keys[k] != spec.rank - 1 && values[k] != 0) multiple = false;
          f.expect(is_global_weyl_irreducible(p, w) == multiple, spec.name() + " " + w.to_string() + " r lambda_{n-1}");
        }
        return;
      }
      for (int v = 0; v <= kMaxEntry; ++v) {
        values[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
  }
  return f.items.empty();
}

bool c9(Failures& f) {
  std::mt19937_64 rng(31);
  const std::vector<PairSpec> specs = {{'B', 3, 3}, {'B', 5, 5}, {'C', 4, 2}, {'D', 5, 3}, {'G', 2, 1}, {'G', 2, 2}, {'F', 4, 3}, {'E', 6, 4}};
  std::uniform_int_distribution<int> small(0, 2), count(0, 3), znum(-12, 12), zden(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    BdsPair p = build_pair(specs[trial % specs.size()]);
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
      params.points.push_back({z, DeltaWeight{v}});
    }
    std::map<int, int> lam;
    for (int i : p.complement()) {
      lam[i] = params.mu[i];
      for (const auto& pt : params.points) lam[i] += pt.lambda[i];
    }
    lam[0] = params.mu.h0();
    for (const auto& pt : params.points) lam[0] += h0_value(p, pt.lambda);
    Weight0 lambda(p, lam);
    IdealPoint pt = ideal_point_from_params(p, lambda, params);
    const std::string tag = "trial " + std::to_string(trial);
    f.expect(relation_violations(p, pt).empty(), tag + " relations");
    f.expect(params.mu.h0() == lambda.h0() - weighted_product_degree(p, pt), tag + " degree identity");
  }
  return f.items.empty();
}

bool c10(Failures& f) {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    for (int r = 0; r <= 3; ++r) {
      const std::string tag = "B" + std::to_string(n) + " r=" + std::to_string(r);
      f.expect(local_weyl_dim_bn(p, 0, r).dimension == BigInt(1) << (n * r), tag + " 2^{nr}");
      for (int i = 1; i <= n - 1; ++i) {
        LocalDimension d = local_weyl_dim_bn(p, i, r);
        f.expect(d.discrepancy == (d.displayed_formula != d.current_algebra_dim), tag + " discrepancy flag");
        BigInt base = local_weyl_dim_bn(p, i, 1).current_algebra_dim, pow = 1;
        for (int e = 0; e < r; ++e) pow *= base;
        f.expect(d.current_algebra_dim == pow, tag + " multiplicativity at i=" + std::to_string(i));
        if (i <= n - 2) f.expect(d.dimension == pow, tag + " dimension at i=" + std::to_string(i));
      }
    }
  }
  BdsPair b3 = make('B', 3, 3);
  LocalDimension d = local_weyl_dim_bn(b3, 2, 1);
  f.expect(d.current_algebra_dim == 22, "B3 i=2 r=1 equals 22");
  f.expect(d.discrepancy, "B3 i=2 discrepancy reported");
  std::vector<int> labels(3, 0);
  labels[b3.g0_position(2)] = 1;
  f.expect(b3.g0().weyl_dim(labels) == 4, "weyl_dim(D3, lambda_2) = 4");
  f.expect(d.dimension == 4, "spin case dimension");
  return f.items.empty();
}

bool c11(Failures& f) {
  for (const auto& spec : all_pairs(4)) {
    BdsPair p = build_pair(spec);
    for (const auto& alpha : p.root_system().positive_roots()) {
      const std::string tag = spec.name() + " " + format_root(alpha);
      f.expect(exp_agreement_check(p, alpha, 6).ok, tag + " exp agreement");
      f.expect(newton_check(p, alpha, 4).ok, tag + " Newton");
      f.expect(product_formula_check(p, alpha, 4).ok, tag + " product formula");
      f.expect(grouplike_check(p, alpha, 4).ok, tag + " coproduct");
    }
  }
  return f.items.empty();
}

bool c12(Failures& f) {
  for (int n = 3; n <= 6; ++n) {
    BdsPair p = make('B', n, n);
    f.expect(weight_convert(p, Weight0(p, {{n - 1, 1}}))[n] == -1, "lambda_{n-1}(h_n) for n=" + std::to_string(n));
    std::vector<int> omega(n, 0);
    omega[n - 1] = 1;
    f.expect(weight_convert(p, Weight0(p, {{0, 1}})).values == omega, "lambda_0 = omega_n for n=" + std::to_string(n));
  }
  return f.items.empty();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Failures&)>>> criteria = {
      {"(B_n, j=n) structural constants, n = 3..6", c1},
      {"B3 example presentation, facets, Krull dimension and Hilbert series", c2},
      {"Hilbert DP equals monomial counting to degree 24 on 60 random instances", c3},
      {"max facet size equals d_lambda when a_j^vee(alpha_0) = 1", c4},
      {"a_j^vee(alpha_0) = 1 implies all comarks of alpha_0 are <= 1, rank <= 8", c5},
      {"reflection chain counts equal comarks under 3 orders, rank <= 8", c6},
      {"canonical shelling for (B_n, j=n), n = 3..5, and the bad-order test", c7},
      {"triviality and irreducibility criteria, rank <= 5, entries <= 3", c8},
      {"120 random ideal points satisfy the relations and degree identity", c9},
      {"local Weyl module dimensions for (B_n, j=n)", c10},
      {"P_{alpha,r} identities for every positive root, rank <= 4, N = 4", c11},
      {"weight conversion lambda_{n-1}(h_n) = -1 and lambda_0 = omega_n", c12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Failures f;
    bool ok = false;
    try {
      ok = criteria[k].second(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[k].first << "\n";
    for (std::size_t m = 0; m < std::min<std::size_t>(f.items.size(), 5); ++m) std::cout << "    " << f.items[m] << "\n";
    if (!ok) ++failed;
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
