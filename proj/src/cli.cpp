#include "bdsweyl/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bdsweyl/oracles.hpp"
#include "bdsweyl/report.hpp"
#include "bdsweyl/verify.hpp"

namespace bdsweyl {

namespace {

struct Request {
  std::string type = "B";
  int rank = 0;
  int node = 0;
  std::string weight;
  std::string delta_weight;
  int degree = kDefaultHilbertDegree;
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_rank = 5;
  int fundamental = -1;
  int power = 1;
  int order = 4;
  std::string root;
  std::string mu;
  std::vector<std::string> points;
  int weights_per_pair = 6;
};

std::map<int, int> parse_assignments(const std::string& text) {
  std::map<int, int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    const auto eq = item.find('=');
    if (item.size() < 4 || item[0] != 'h' || eq == std::string::npos)
      throw std::invalid_argument("malformed weight entry '" + item + "', expected h<i>=<value>");
    int key = 0, value = 0;
    try {
      std::size_t used = 0;
      key = std::stoi(item.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument("");
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight entry '" + item + "', expected h<i>=<value>");
    }
    if (out.count(key)) throw std::invalid_argument("weight entry h" + std::to_string(key) + " given twice");
    out[key] = value;
  }
  return out;
}

DeltaWeight parse_delta(const BdsPair& pair, const std::string& text) {
  DeltaWeight w;
  w.values.assign(pair.rank(), 0);
  for (const auto& [key, value] : parse_assignments(text)) {
    if (key < 1 || key > pair.rank()) throw std::invalid_argument("h" + std::to_string(key) + " is not a node of g");
    w.values[key - 1] = value;
  }
  return w;
}

Weight0 parse_weight(const BdsPair& pair, const Request& req) {
  if (!req.weight.empty() && !req.delta_weight.empty())
    throw std::invalid_argument("give either --weight or --delta-weight, not both");
  if (!req.delta_weight.empty()) return to_weight0(pair, parse_delta(pair, req.delta_weight));
  return Weight0(pair, parse_assignments(req.weight));
}

BdsPair make_pair(const Request& req) {
  if (req.type.size() != 1) throw std::invalid_argument("type must be a single letter A-G");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(req.type[0])));
  if (!valid_simple_type(letter, req.rank))
    throw std::invalid_argument(std::string(1, letter) + std::to_string(req.rank) + " is not a supported simple type");
  return BdsPair::build(RootSystem::build(letter, req.rank), req.node);
}

Json envelope(const std::string& command, Json body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["result"] = std::move(body);
  return j;
}

int emit(std::ostream& out, const Request& req, const std::string& command, Json body, const std::string& text) {
  if (req.format == "json")
    out << envelope(command, std::move(body)).dump(2) << "\n";
  else
    out << text;
  return kExitOk;
}

int cmd_pair(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  const bool ok = check_pair_invariants(pair).empty();
  emit(out, req, "pair", pair_json(pair), pair_text(pair));
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_alambda(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  Weight0 lambda = parse_weight(pair, req);
  AlambdaReport r = make_alambda_report(pair, lambda, req.degree);
  return emit(out, req, "alambda", alambda_json(pair, r), alambda_text(pair, r));
}

int cmd_hilbert(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  Weight0 lambda = parse_weight(pair, req);
  SRPresentation pres = presentation(pair, lambda);
  HilbertSeries h = hilbert_series(pres, req.degree);
  const bool agree = h.coefficients == oracle::brute_force_hilbert(pair, lambda, req.degree);
  bool closed_ok = true;
  if (h.closed_form) closed_ok = expand_closed_form(*h.closed_form, req.degree) == h.coefficients;
  Json body = series_json(h);
  body["presentation"] = pres.to_string();
  body["oracle_agrees"] = agree;
  body["closed_form_agrees"] = closed_ok;
  std::string text = "presentation: " + pres.to_string() + "\n" + series_text(h) +
                     "monomial-count oracle: " + (agree ? "agree" : "DISAGREE") + "\n";
  if (h.closed_form) text += std::string("closed form expansion: ") + (closed_ok ? "agree" : "DISAGREE") + "\n";
  emit(out, req, "hilbert", body, text);
  return agree && closed_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_localdim(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  LocalDimension d = req.fundamental >= 0 ? local_weyl_dim_bn(pair, req.fundamental, req.power)
                                          : local_weyl_dim_bn(pair, parse_weight(pair, req));
  return emit(out, req, "localdim", localdim_json(d), localdim_text(d));
}

int cmd_idealpoint(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  Weight0 lambda = parse_weight(pair, req);
  EvalParams params;
  params.mu = Weight0(pair, parse_assignments(req.mu));
  for (const auto& spec : req.points) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed --point '" + spec + "', expected z:h<i>=<v>,...");
    params.points.push_back({parse_rational(spec.substr(0, colon)), parse_delta(pair, spec.substr(colon + 1))});
  }
  IdealPoint p = ideal_point_from_params(pair, lambda, params);
  return emit(out, req, "idealpoint", idealpoint_json(pair, p, params), idealpoint_text(pair, p, params));
}

int cmd_garland(const Request& req, std::ostream& out) {
  BdsPair pair = make_pair(req);
  std::vector<RootVec> roots;
  if (!req.root.empty()) {
    std::stringstream in(req.root);
    std::string item;
    std::vector<int> coords;
    while (std::getline(in, item, ',')) coords.push_back(std::stoi(item));
    if (static_cast<int>(coords.size()) != pair.rank()) throw std::invalid_argument("--root needs one coordinate per node");
    roots.push_back(Eigen::Map<RootVec>(coords.data(), coords.size()));
    if (!pair.root_system().is_positive_root(roots.back())) throw std::invalid_argument("--root is not a positive root");
  } else {
    roots = pair.root_system().positive_roots();
  }
  bool all_ok = true;
  Json body = Json::array();
  std::ostringstream text;
  const std::pair<const char*, std::function<CheckResult(const BdsPair&, const RootVec&, int)>> checks[] = {
      {"exp", exp_agreement_check}, {"newton", newton_check},       {"degree", degree_check},
      {"product", product_formula_check}, {"coproduct", grouplike_check}};
  for (const auto& alpha : roots) {
    Json entry;
    entry["root"] = to_std(alpha);
    text << format_root(alpha) << ":";
    for (const auto& [name, fn] : checks) {
      CheckResult r = fn(pair, alpha, req.order);
      all_ok = all_ok && r.ok;
      entry[name] = r.ok;
      text << ' ' << name << (r.ok ? " ok" : " FAIL");
      if (!r.ok) {
        entry[std::string(name) + "_detail"] = r.detail;
        text << " (" << r.detail << ")";
      }
    }
    text << "\n";
    body.push_back(entry);
  }
  text << (all_ok ? "pass" : "fail") << "\n";
  emit(out, req, "garland-check", Json{{"order", req.order}, {"roots", body}, {"pass", all_ok}}, text.str());
  return all_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_verify_all(const Request& req, std::ostream& out) {
  VerifyOptions opt;
  opt.max_rank = req.max_rank;
  opt.seed = req.seed;
  opt.degree = req.degree;
  opt.weights_per_pair = req.weights_per_pair;
  std::vector<PairVerdict> verdicts = verify_all(opt);
  bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.failures.empty(); });
  Json body = Json::array();
  for (const auto& v : verdicts) body.push_back({{"pair", v.spec.name()}, {"checks", v.checks}, {"failures", v.failures}});
  std::ostringstream text;
  print_verdicts(verdicts, text);
  emit(out, req, "verify-all", Json{{"max_rank", opt.max_rank}, {"seed", opt.seed}, {"degree", opt.degree}, {"pairs", body}, {"pass", ok}},
       text.str());
  return ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-de Siebenthal pairs, A_lambda presentations and Weyl module dimensions", "bdsweyl"};
  app.require_subcommand(1);
  Request req;
  req.degree = -1;

  auto add_common = [&](CLI::App* sub, bool weight) {
    sub->add_option("type", req.type, "Dynkin letter A-G")->required();
    sub->add_option("rank", req.rank, "rank")->required();
    sub->add_option("--node", req.node, "node j with mark a_j >= 2 (Bourbaki numbering)")->required();
    sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (weight) {
      sub->add_option("--weight", req.weight, "g_0 weight, e.g. h1=0,h2=1,h0=1");
      sub->add_option("--delta-weight", req.delta_weight, "g weight on h_1..h_n, restricted to g_0");
    }
  };

  CLI::App* pair = app.add_subcommand("pair", "structure of the pair (g, g_0)");
  add_common(pair, false);
  CLI::App* alambda = app.add_subcommand("alambda", "presentation and invariants of A_lambda");
  add_common(alambda, true);
  alambda->add_option("--degree", req.degree, "Hilbert series truncation degree")->check(CLI::NonNegativeNumber);
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of A_lambda checked against monomial counting");
  add_common(hilbert, true);
  hilbert->add_option("--degree", req.degree, "truncation degree")->check(CLI::NonNegativeNumber);
  CLI::App* localdim = app.add_subcommand("localdim", "local Weyl module dimensions for (B_n, j = n)");
  add_common(localdim, true);
  localdim->add_option("--fundamental", req.fundamental, "i with lambda = r lambda_i (0 means lambda_0)");
  localdim->add_option("--power", req.power, "r");
  CLI::App* idealpoint = app.add_subcommand("idealpoint", "maximal-ideal point from evaluation parameters");
  add_common(idealpoint, true);
  idealpoint->add_option("--mu", req.mu, "g_0 weight mu, e.g. h2=1");
  idealpoint->add_option("--point", req.points, "z^{a_j}:weight on h_1..h_n, e.g. 3/2:h3=1 (repeatable)");
  CLI::App* garland = app.add_subcommand("garland-check", "identities for the elements P_{alpha,r}");
  add_common(garland, false);
  garland->add_option("--order", req.order, "truncation order N")->check(CLI::NonNegativeNumber);
  garland->add_option("--root", req.root, "positive root as comma-separated coordinates (default: all)");
  CLI::App* verify = app.add_subcommand("verify-all", "invariant suite over all pairs up to a rank cap");
  verify->add_option("--max-rank", req.max_rank, "rank cap")->check(CLI::Range(1, 8));
  verify->add_option("--seed", req.seed, "seed for random weights");
  verify->add_option("--degree", req.degree, "Hilbert truncation degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--weights-per-pair", req.weights_per_pair, "random weights per pair")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (req.degree < 0) req.degree = verify->parsed() ? 12 : kDefaultHilbertDegree;

  try {
    if (pair->parsed()) return cmd_pair(req, out);
    if (alambda->parsed()) return cmd_alambda(req, out);
    if (hilbert->parsed()) return cmd_hilbert(req, out);
    if (localdim->parsed()) return cmd_localdim(req, out);
    if (idealpoint->parsed()) return cmd_idealpoint(req, out);
    if (garland->parsed()) return cmd_garland(req, out);
    if (verify->parsed()) return cmd_verify_all(req, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "property failure: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

}  // namespace bdsweyl
