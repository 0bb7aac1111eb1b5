#include "bdsweyl/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <random>

#include "bdsweyl/garland.hpp"
#include "bdsweyl/oracles.hpp"
#include "bdsweyl/weylcrit.hpp"

namespace bdsweyl {

namespace {

void check(PairVerdict& v, bool ok, const std::string& what) {
  ++v.checks;
  if (!ok) v.failures.push_back(what);
}

void check_weight(PairVerdict& v, const BdsPair& pair, const Weight0& lambda, int degree) {
  const std::string tag = " [" + lambda.to_string() + "]";
  SRPresentation pres = presentation(pair, lambda);
  check(v, hilbert_coefficients(pres, degree) == oracle::brute_force_hilbert(pair, lambda, degree),
        "Hilbert series differs from monomial count" + tag);
  SimplicialComplex complex = facets(pres);
  check(v, complex.max_facet_size() == static_cast<std::size_t>(krull_dim(pres)), "Krull dimension" + tag);
  if (pres.jac_zero) check(v, krull_dim(pres) == krull_closed_form(pres), "Krull closed form" + tag);
  if (pres.variables.size() <= 14) {
    std::vector<Face> expected = oracle::brute_force_facets(pres);
    std::vector<Face> got = complex.facets;
    std::sort(got.begin(), got.end());
    check(v, got == expected, "facets differ from subset enumeration" + tag);
  }
  check(v, is_alambda_trivial(pair, lambda) == pres.variables.empty(), "A_lambda = C test vs empty variable set" + tag);
  if (is_global_weyl_irreducible(pair, lambda))
    check(v, is_alambda_trivial(pair, lambda), "irreducible W(lambda) with nontrivial A_lambda" + tag);
  SRFlags f = flags(pres);
  if (f.shelling_source == "canonical") check(v, f.pure && f.cohen_macaulay_certified, "canonical shelling" + tag);
}

}  // namespace

std::vector<PairVerdict> verify_all(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> dist(0, options.max_weight);
  std::vector<PairVerdict> out;
  for (const PairSpec& spec : all_pairs(options.max_rank)) {
    PairVerdict v{spec, 0, {}};
    try {
      BdsPair pair = build_pair(spec);
      for (const auto& b : check_pair_invariants(pair)) check(v, false, b);
      check(v, true, "pair invariants");
      check(v, oracle::alpha0_by_scan(pair) == pair.alpha0(), "alpha_0 differs from the scan");

      check_weight(v, pair, Weight0::zero(pair), options.degree);
      for (int k = 0; k < options.weights_per_pair; ++k) {
        std::map<int, int> values;
        for (int i : pair.complement()) values[i] = dist(rng);
        values[0] = dist(rng);
        check_weight(v, pair, Weight0(pair, values), options.degree);
      }

      if (spec.rank <= options.garland_max_rank) {
        for (const auto& alpha : pair.root_system().positive_roots()) {
          const int n = options.garland_order;
          for (const CheckResult& r : {exp_agreement_check(pair, alpha, n), newton_check(pair, alpha, n),
                                       degree_check(pair, alpha, n), product_formula_check(pair, alpha, n),
                                       grouplike_check(pair, alpha, n)})
            check(v, r.ok, r.detail);
        }
      }
    } catch (const std::exception& e) {
      check(v, false, std::string("exception: ") + e.what());
    }
    out.push_back(std::move(v));
  }
  return out;
}

void print_verdicts(const std::vector<PairVerdict>& verdicts, std::ostream& out) {
  int failed = 0;
  for (const auto& v : verdicts) {
    out << std::left << std::setw(10) << v.spec.name() << " checks=" << std::setw(5) << v.checks
        << (v.failures.empty() ? "ok" : "FAIL") << "\n";
    for (const auto& f : v.failures) out << "    " << f << "\n";
    failed += !v.failures.empty();
  }
  out << verdicts.size() << " pairs, " << failed << " failing\n";
}

}  // namespace bdsweyl
