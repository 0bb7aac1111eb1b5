#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bdsweyl/garland.hpp"
#include "bdsweyl/weylcrit.hpp"

namespace bdsweyl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& v);
Json root_to_json(const RootVec& v);
Json face_to_json(const SRPresentation& pres, const Face& f);

Json pair_json(const BdsPair& pair);
std::string pair_text(const BdsPair& pair);

/// Everything reported for A_lambda: presentation, complex, series, flags, criteria.
struct AlambdaReport {
  SRPresentation pres;
  SimplicialComplex complex;
  int krull = 0;
  HilbertSeries series;
  SRFlags flags;
  std::vector<Face> shelling;
  bool trivial = false;
  bool irreducible = false;
  std::optional<DeltaWeight> delta;
  std::string delta_error;
};

AlambdaReport make_alambda_report(const BdsPair& pair, const Weight0& lambda, int degree);
Json alambda_json(const BdsPair& pair, const AlambdaReport& r);
std::string alambda_text(const BdsPair& pair, const AlambdaReport& r);

Json series_json(const HilbertSeries& h);
std::string series_text(const HilbertSeries& h);

Json localdim_json(const LocalDimension& d);
std::string localdim_text(const LocalDimension& d);

Json idealpoint_json(const BdsPair& pair, const IdealPoint& p, const EvalParams& params);
std::string idealpoint_text(const BdsPair& pair, const IdealPoint& p, const EvalParams& params);

/// Component types of g_0, e.g. "A3 (=D3)" or "A1 x A1".
std::string g0_type_string(const BdsPair& pair);

}  // namespace bdsweyl
