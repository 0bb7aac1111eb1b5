#pragma once

#include <cstdint>
#include <vector>

#include "bdsweyl/srring.hpp"

namespace bdsweyl::oracle {

/// Counts monomials in the P_{i,r} (i in I, a_j r <= degree) that survive the two
/// relation families, by degree. Works from the weight alone, not from the
/// presentation.
std::vector<std::int64_t> brute_force_hilbert(const BdsPair& pair, const Weight0& lambda, int degree);

/// sum over all faces sigma of prod_{v in sigma} t^d / (1 - t^d), faces found by
/// subset enumeration against the generators. Needs at most 22 variables.
std::vector<std::int64_t> face_sum_hilbert(const SRPresentation& pres, int degree);

/// No generator divides prod sigma.
bool divisibility_face_test(const SRPresentation& pres, const Face& sigma);

/// Maximal faces by subset enumeration. Needs at most 22 variables.
std::vector<Face> brute_force_facets(const SRPresentation& pres);

/// The indecomposable root of R_0^+ with a_j(alpha) = a_j.
RootVec alpha0_by_scan(const BdsPair& pair);

}  // namespace bdsweyl::oracle
