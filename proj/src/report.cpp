#include "bdsweyl/report.hpp"

#include <sstream>

namespace bdsweyl {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? sep : "") << v[k];
  return out.str();
}

std::string poly_text(const std::vector<std::int64_t>& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const std::int64_t a = c[k] < 0 ? -c[k] : c[k];
    out << (first ? (c[k] < 0 ? "-" : "") : (c[k] < 0 ? " - " : " + "));
    if (k == 0 || a != 1) out << a;
    if (k > 0) out << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : out.str();
}

std::string rational_poly_text(const std::vector<Rational>& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    out << (first ? "" : " + ") << '(' << c[k] << ')';
    if (k > 0) out << "u" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json root_to_json(const RootVec& v) { return to_std(v); }

Json face_to_json(const SRPresentation& pres, const Face& f) {
  Json out = Json::array();
  for (int v : f) out.push_back(pres.variables.at(v).name());
  return out;
}

std::string g0_type_string(const BdsPair& pair) {
  std::string out;
  for (const auto& t : pair.g0_components()) {
    if (!out.empty()) out += " x ";
    out += t.name();
    if (t.letter == 'A' && t.rank == 3) out += " (=D3)";
  }
  return out;
}

Json pair_json(const BdsPair& pair) {
  const RootSystem& g = pair.root_system();
  Json j;
  j["type"] = std::string(1, g.type_letter()) + std::to_string(g.rank());
  j["node"] = pair.node();
  j["mark"] = pair.mark();
  j["theta"] = root_to_json(g.theta());
  j["alpha0"] = root_to_json(pair.alpha0());
  Json delta = Json::array();
  for (const auto& b : pair.delta0()) delta.push_back(to_std(b));
  j["delta0"] = delta;
  j["comarks_alpha0"] = to_std(pair.comarks_alpha0());
  j["marks_alpha0"] = to_std(pair.marks_alpha0());
  Json comps = Json::array();
  for (const auto& t : pair.g0_components()) comps.push_back(t.name());
  j["g0_components"] = comps;
  Json sizes = Json::array();
  for (const auto& rk : pair.graded_roots()) sizes.push_back(rk.size());
  j["graded_root_counts"] = sizes;
  Json thetas = Json::array();
  Json irreducible = Json::array();
  for (int k = 1; k < pair.mark(); ++k) {
    thetas.push_back(to_std(pair.theta_k(k)));
    irreducible.push_back(gk_irreducibility_check(pair, k));
  }
  j["theta_k"] = thetas;
  j["gk_irreducible"] = irreducible;
  Json dims = Json::array();
  for (int s = 0; s <= pair.mark(); ++s) dims.push_back(graded_dim(pair, s));
  j["graded_dims"] = dims;
  Json chain = Json::array();
  for (const auto& e : reflection_chain(pair).entries) chain.push_back({{"node", e.node}, {"beta", to_std(e.beta)}});
  j["reflection_chain"] = chain;
  Json bad = Json::array();
  for (const auto& b : check_pair_invariants(pair)) bad.push_back(b);
  j["invariant_violations"] = bad;
  return j;
}

std::string pair_text(const BdsPair& pair) {
  const RootSystem& g = pair.root_system();
  std::ostringstream out;
  out << "pair " << g.type_letter() << g.rank() << " j=" << pair.node() << "\n";
  out << "mark a_j: " << pair.mark() << "\n";
  out << "theta: " << format_root(g.theta()) << "\n";
  out << "alpha_0: " << format_root(pair.alpha0()) << "\n";
  out << "Delta_0:";
  for (int i : pair.complement()) out << " alpha" << i << ",";
  out << " alpha0\n";
  out << "comarks of alpha_0: " << join_ints(to_std(pair.comarks_alpha0())) << "\n";
  out << "marks of alpha_0: " << join_ints(to_std(pair.marks_alpha0())) << "\n";
  out << "g_0: " << g0_type_string(pair) << "\n";
  out << "graded root counts:";
  for (int k = 0; k < pair.mark(); ++k) out << " |R_" << k << "|=" << pair.graded_roots()[k].size();
  out << "\n";
  for (int k = 1; k < pair.mark(); ++k)
    out << "theta_" << k << ": " << format_root(pair.theta_k(k))
        << "  (g_" << k << " irreducible: " << (gk_irreducibility_check(pair, k) ? "yes" : "no") << ")\n";
  out << "graded dims s=0.." << pair.mark() << ":";
  for (int s = 0; s <= pair.mark(); ++s) out << ' ' << graded_dim(pair, s);
  out << "\n";
  out << "reflection chain:";
  for (const auto& e : reflection_chain(pair).entries) out << " (" << e.node << ": " << format_root(e.beta) << ")";
  out << "\n";
  auto bad = check_pair_invariants(pair);
  out << "invariants: " << (bad.empty() ? "ok" : "FAILED") << "\n";
  for (const auto& b : bad) out << "  " << b << "\n";
  return out.str();
}

AlambdaReport make_alambda_report(const BdsPair& pair, const Weight0& lambda, int degree) {
  AlambdaReport r;
  r.pres = presentation(pair, lambda);
  r.complex = facets(r.pres);
  r.krull = krull_dim(r.pres);
  r.series = hilbert_series(r.pres, degree);
  r.flags = flags(r.pres);
  if (r.flags.shelling_source == "canonical") {
    r.shelling = canonical_shelling(r.pres);
  } else if (auto found = find_shelling(r.complex)) {
    r.shelling = *found;
  }
  r.trivial = is_alambda_trivial(pair, lambda);
  r.irreducible = is_global_weyl_irreducible(pair, lambda);
  try {
    r.delta = weight_convert(pair, lambda);
  } catch (const std::invalid_argument& e) {
    r.delta_error = e.what();
  }
  return r;
}

Json series_json(const HilbertSeries& h) {
  Json j;
  j["truncation_degree"] = h.truncation_degree;
  j["coefficients"] = h.coefficients;
  if (h.closed_form) {
    j["closed_form"] = {{"numerator", h.closed_form->numerator},
                        {"denominator_degrees", h.closed_form->denominator_degrees}};
  } else {
    j["closed_form"] = nullptr;
  }
  return j;
}

std::string series_text(const HilbertSeries& h) {
  std::ostringstream out;
  std::vector<int> c(h.coefficients.begin(), h.coefficients.end());
  out << "Hilbert series to degree " << h.truncation_degree << ": " << join_ints(c, ",") << "\n";
  if (h.closed_form) {
    out << "closed form: (" << poly_text(h.closed_form->numerator) << ") / (";
    if (h.closed_form->denominator_degrees.empty()) out << "1";
    for (std::size_t k = 0; k < h.closed_form->denominator_degrees.size(); ++k)
      out << "(1 - t^" << h.closed_form->denominator_degrees[k] << ")";
    out << ")\n";
  }
  return out.str();
}

Json alambda_json(const BdsPair& pair, const AlambdaReport& r) {
  Json j;
  j["pair"] = {{"type", std::string(1, pair.root_system().type_letter()) + std::to_string(pair.rank())},
               {"node", pair.node()}};
  Json w;
  for (const auto& [key, v] : r.pres.lambda.values())
    if (key != 0) w["h" + std::to_string(key)] = v;
  w["h0"] = r.pres.lambda.h0();
  j["weight"] = w;
  if (r.delta) {
    j["delta_weight"] = r.delta->values;
  } else {
    j["delta_weight"] = nullptr;
  }
  j["presentation"] = r.pres.to_string();
  Json vars = Json::array();
  for (const auto& v : r.pres.variables) vars.push_back({{"name", v.name()}, {"node", v.node}, {"level", v.level}, {"degree", v.degree}});
  j["variables"] = vars;
  Json gens = Json::array();
  for (const auto& g : r.pres.generators) gens.push_back(face_to_json(r.pres, g));
  j["generators"] = gens;
  Json facets = Json::array();
  for (const auto& f : r.complex.facets) facets.push_back(face_to_json(r.pres, f));
  j["facets"] = facets;
  j["krull_dim"] = r.krull;
  if (r.pres.jac_zero) {
    j["krull_closed_form"] = krull_closed_form(r.pres);
  } else {
    j["krull_closed_form"] = nullptr;
  }
  j["hilbert"] = series_json(r.series);
  j["flags"] = {{"jac_zero", r.flags.jac_zero},
                {"koszul", to_string(r.flags.koszul)},
                {"pure", r.flags.pure},
                {"cohen_macaulay_certified", r.flags.cohen_macaulay_certified},
                {"two_support_nodes", r.flags.two_support_nodes},
                {"shelling_source", r.flags.shelling_source}};
  Json shell = Json::array();
  for (const auto& f : r.shelling) shell.push_back(face_to_json(r.pres, f));
  j["shelling"] = shell;
  j["alambda_trivial"] = r.trivial;
  j["global_weyl_irreducible"] = r.irreducible;
  return j;
}

std::string alambda_text(const BdsPair& pair, const AlambdaReport& r) {
  std::ostringstream out;
  out << "A_lambda for " << pair.root_system().type_letter() << pair.rank() << " j=" << pair.node()
      << ", lambda: " << r.pres.lambda.to_string() << "\n";
  if (r.delta)
    out << "lambda on h_1..h_n: " << join_ints(r.delta->values) << "\n";
  else
    out << "lambda on h_1..h_n: " << r.delta_error << "\n";
  out << "presentation: " << r.pres.to_string() << "\n";
  out << "variables: " << r.pres.variables.size() << ", generators: " << r.pres.generators.size() << "\n";
  out << "facets (" << r.complex.facets.size() << "):";
  const std::size_t shown = std::min<std::size_t>(r.complex.facets.size(), 40);
  for (std::size_t k = 0; k < shown; ++k) {
    out << " {";
    const auto& f = r.complex.facets[k];
    for (std::size_t v = 0; v < f.size(); ++v) out << (v ? ", " : "") << r.pres.variables[f[v]].name();
    out << "}";
  }
  if (shown < r.complex.facets.size()) out << " ...";
  out << "\n";
  out << "Krull dimension: " << r.krull << "\n";
  out << series_text(r.series);
  out << "flags: jac_zero=" << (r.flags.jac_zero ? "true" : "false") << " koszul=" << to_string(r.flags.koszul)
      << " pure=" << (r.flags.pure ? "true" : "false")
      << " cohen_macaulay_certified=" << (r.flags.cohen_macaulay_certified ? "true" : "false")
      << " two_support_nodes=" << (r.flags.two_support_nodes ? "true" : "false")
      << " shelling=" << r.flags.shelling_source << "\n";
  out << "A_lambda = C: " << (r.trivial ? "true" : "false") << "\n";
  out << "W(lambda) irreducible: " << (r.irreducible ? "true" : "false") << "\n";
  const std::string key = std::string(1, pair.root_system().type_letter()) + std::to_string(pair.rank()) + "/" +
                          r.pres.lambda.to_string() + "/";
  for (const char* kind : {"generic-ideal", "special-ideal"})
    if (auto c = lookup_constant(key + kind))
      out << "recorded constant (" << kind << "): " << c->value << "  [" << c->note << "]\n";
  return out.str();
}

Json localdim_json(const LocalDimension& d) {
  return Json{{"n", d.n},
              {"fundamental", d.fundamental},
              {"power", d.power},
              {"dimension", big_to_json(d.dimension)},
              {"current_algebra_dim", big_to_json(d.current_algebra_dim)},
              {"displayed_formula", big_to_json(d.displayed_formula)},
              {"discrepancy", d.discrepancy},
              {"spin_case", d.spin_case}};
}

std::string localdim_text(const LocalDimension& d) {
  std::ostringstream out;
  out << "B" << d.n << " j=" << d.n << ", lambda = " << d.power << "*lambda_" << d.fundamental << "\n";
  out << "local Weyl module dimension: " << d.dimension;
  if (d.spin_case) out << "  (half-spin weight of D" << d.n << ", W(lambda) irreducible)";
  out << "\n";
  if (d.fundamental == 0) {
    out << "current-algebra value (2^n)^r: " << d.current_algebra_dim << "\n";
    out << "displayed form (2^(n-1)+2^(n-1))^r: " << d.displayed_formula << "\n";
  } else {
    out << "current-algebra value for omega_" << d.fundamental << ", (sum_k binom(" << 2 * d.n + 1 << ", "
        << d.fundamental << "-2k))^r: " << d.current_algebra_dim << "\n";
    out << "displayed form (sum_{s=1}^" << d.fundamental << " binom(" << 2 * d.n << ",s))^r: " << d.displayed_formula << "\n";
  }
  out << "discrepancy: " << (d.discrepancy ? "yes" : "no") << "\n";
  return out.str();
}

Json idealpoint_json(const BdsPair& pair, const IdealPoint& p, const EvalParams& params) {
  Json j;
  Json pts = Json::array();
  for (const auto& pt : params.points) pts.push_back({{"z_power", to_fraction_string(pt.z_power)}, {"lambda", pt.lambda.values}});
  j["mu"] = params.mu.to_string();
  j["points"] = pts;
  Json pi = Json::object();
  for (int i = 1; i <= pair.rank(); ++i) {
    Json coeffs = Json::array();
    for (const auto& c : p.pi[i - 1]) coeffs.push_back(to_fraction_string(c));
    pi[std::to_string(i)] = coeffs;
  }
  j["pi"] = pi;
  j["relations_hold"] = relation_violations(pair, p).empty();
  j["weighted_degree"] = weighted_product_degree(pair, p);
  j["mu_h0"] = params.mu.h0();
  return j;
}

std::string idealpoint_text(const BdsPair& pair, const IdealPoint& p, const EvalParams& params) {
  std::ostringstream out;
  out << "lambda: " << p.lambda.to_string() << ", mu: " << params.mu.to_string() << "\n";
  for (int i = 1; i <= pair.rank(); ++i) out << "pi_" << i << "(u) = " << rational_poly_text(p.pi[i - 1]) << "\n";
  for (int i = 1; i <= pair.rank(); ++i)
    for (int r = 1; r <= p.degree(i); ++r)
      if (p.value(i, r) != 0) out << "pi_{" << i << "," << r << "} = " << to_fraction_string(p.value(i, r)) << "\n";
  out << "relations: " << (relation_violations(pair, p).empty() ? "ok" : "FAILED") << "\n";
  out << "deg prod pi_i^{a_i^vee(alpha_0)} = " << weighted_product_degree(pair, p) << " = lambda(h_0) - mu(h_0) = "
      << p.lambda.h0() - params.mu.h0() << "\n";
  return out.str();
}

}  // namespace bdsweyl
