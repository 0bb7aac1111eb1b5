#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bdsweyl/bdspair.hpp"

namespace bdsweyl {

struct VerifyOptions {
  int max_rank = 5;
  std::uint64_t seed = 1;
  int degree = 12;
  int weights_per_pair = 6;
  int max_weight = 2;
  int garland_order = 3;
  int garland_max_rank = 4;
};

struct PairVerdict {
  PairSpec spec;
  int checks = 0;
  std::vector<std::string> failures;
};

/// Runs the invariant suite on every pair up to the rank cap. Random weights are
/// drawn from a generator seeded once, so equal options give equal verdicts.
std::vector<PairVerdict> verify_all(const VerifyOptions& options);

/// One line per pair plus a closing summary line.
void print_verdicts(const std::vector<PairVerdict>& verdicts, std::ostream& out);

}  // namespace bdsweyl
