#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "bdsweyl/cli.hpp"

using namespace bdsweyl;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("pair command") {
  Outcome o = call({"pair", "B", "3", "--node", "3"});
  CHECK(o.code == kExitOk);
  CHECK(contains(o.out, "alpha_0: alpha2 + 2*alpha3"));
  CHECK(contains(o.out, "g_0: A3 (=D3)"));
  CHECK(contains(o.out, "invariants: ok"));

  Outcome g = call({"pair", "G", "2", "--node", "1"});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "mark a_j: 3"));
  CHECK(contains(g.out, "|R_2|="));
}

TEST_CASE("usage errors") {
  Outcome bad = call({"pair", "B", "3", "--node", "1"});
  CHECK(bad.code == kExitUsage);
  CHECK(contains(bad.err, "mark a_1 = 1"));
  CHECK(call({"pair", "X", "3", "--node", "1"}).code == kExitUsage);
  CHECK(call({"alambda", "B", "3", "--node", "3", "--weight", "h2=one"}).code == kExitUsage);
  CHECK(call({"alambda", "B", "3", "--node", "3", "--weight", "h3=1"}).code == kExitUsage);
  CHECK(call({"alambda", "B", "3", "--node", "3", "--weight", "h2=-1"}).code == kExitUsage);
  CHECK(call({"alambda", "B", "3", "--node", "3", "--degree", "-2"}).code == kExitUsage);
  CHECK(call({"pair", "B", "3", "--node", "3", "--format", "xml"}).code == kExitUsage);
  CHECK(call({}).code == kExitUsage);
}

TEST_CASE("alambda command") {
  Outcome o = call({"alambda", "B", "3", "--node", "3", "--weight", "h2=1,h0=1"});
  CHECK(o.code == kExitOk);
  CHECK(contains(o.out, "C[P_{2,1}, P_{3,1}]/(P_{2,1}P_{3,1})"));
  CHECK(contains(o.out, "Krull dimension: 1"));
  CHECK(contains(o.out, "recorded constant (generic-ideal): 22"));

  Outcome zero = call({"alambda", "B", "3", "--node", "3", "--weight", "h0=0"});
  CHECK(contains(zero.out, "A_lambda = C: true"));
  CHECK(contains(zero.out, "W(lambda) irreducible: true"));

  Outcome b4 = call({"alambda", "B", "4", "--node", "4", "--weight", "h1=2,h3=1,h0=3", "--degree", "12", "--format", "json"});
  REQUIRE(b4.code == kExitOk);
  auto j = nlohmann::json::parse(b4.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "alambda");
  CHECK(j["result"]["krull_dim"] == 5);
  CHECK(j["result"]["hilbert"]["coefficients"] == nlohmann::json::parse("[1,0,3,0,8,0,17,0,32,0,55,0,89]"));

  Outcome d = call({"alambda", "B", "3", "--node", "3", "--delta-weight", "h3=1"});
  CHECK(d.code == kExitOk);
  CHECK(contains(d.out, "lambda: h1=0,h2=0,h0=1"));
}

TEST_CASE("hilbert and localdim commands") {
  Outcome h = call({"hilbert", "G", "2", "--node", "1", "--weight", "h2=2,h0=2"});
  CHECK(h.code == kExitOk);
  CHECK(contains(h.out, "monomial-count oracle: agree"));
  Outcome l = call({"localdim", "B", "3", "--node", "3", "--fundamental", "2", "--power", "1"});
  CHECK(l.code == kExitOk);
  CHECK(contains(l.out, ": 22"));
  CHECK(contains(l.out, "discrepancy: yes"));
  Outcome lj = call({"localdim", "B", "3", "--node", "3", "--weight", "h0=1", "--format", "json"});
  CHECK(nlohmann::json::parse(lj.out)["result"]["dimension"] == 8);
}

TEST_CASE("idealpoint command") {
  Outcome o = call({"idealpoint", "B", "3", "--node", "3", "--weight", "h2=1,h0=1", "--mu", "h2=1", "--point", "5/2:h3=1",
                    "--format", "json"});
  REQUIRE(o.code == kExitOk);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["result"]["pi"]["3"] == nlohmann::json::parse(R"(["1/1","-5/2"])"));
  CHECK(j["result"]["relations_hold"] == true);
  Outcome bad = call({"idealpoint", "B", "3", "--node", "3", "--weight", "h2=1,h0=1", "--point", "5/2:h3=1"});
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("garland-check and verify-all") {
  Outcome g = call({"garland-check", "B", "3", "--node", "3", "--order", "3"});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "pass"));
  Outcome r = call({"garland-check", "B", "3", "--node", "3", "--root", "0,1,2", "--order", "2"});
  CHECK(r.code == kExitOk);
  CHECK(call({"garland-check", "B", "3", "--node", "3", "--root", "1,0,2"}).code == kExitUsage);
  Outcome v = call({"verify-all", "--max-rank", "3", "--seed", "4"});
  CHECK(v.code == kExitOk);
  CHECK(v.out == call({"verify-all", "--max-rank", "3", "--seed", "4"}).out);
}
