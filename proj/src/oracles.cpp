#include "bdsweyl/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bdsweyl::oracle {

namespace {

struct Candidate {
  int node;
  int level;
  int degree;
};

// Some choice of at most one level per node inside the support has
// sum a_i^vee(alpha_0) r_i > lambda(h_0).
bool support_killed(const BdsPair& pair, const Weight0& lambda, const std::vector<std::vector<int>>& levels_by_node) {
  const int n = pair.rank();
  bool killed = false;
  std::function<void(int, long)> walk = [&](int i, long sum) {
    if (killed) return;
    if (i > n) {
      killed = sum > lambda.h0();
      return;
    }
    walk(i + 1, sum);
    for (int r : levels_by_node[i - 1]) walk(i + 1, sum + static_cast<long>(pair.comark0(i)) * r);
  };
  walk(1, 0);
  return killed;
}

}  // namespace

std::vector<std::int64_t> brute_force_hilbert(const BdsPair& pair, const Weight0& lambda, int degree) {
  const int n = pair.rank();
  const int a = pair.mark();
  std::vector<Candidate> vars;
  for (int i = 1; i <= n; ++i)
    for (int r = 1; a * r <= degree; ++r) {
      if (i != pair.node() && r > lambda[i]) continue;
      vars.push_back({i, r, a * r});
    }

  std::vector<std::int64_t> counts(degree + 1, 0);
  std::vector<std::vector<int>> support(n);
  std::function<void(std::size_t, int)> walk = [&](std::size_t k, int used) {
    if (k == vars.size()) {
      ++counts[used];
      return;
    }
    walk(k + 1, used);
    const Candidate& v = vars[k];
    support[v.node - 1].push_back(v.level);
    if (!support_killed(pair, lambda, support))
      for (int e = 1; used + e * v.degree <= degree; ++e) walk(k + 1, used + e * v.degree);
    support[v.node - 1].pop_back();
  };
  walk(0, 0);
  return counts;
}

bool divisibility_face_test(const SRPresentation& pres, const Face& sigma) {
  for (const auto& g : pres.generators)
    if (std::includes(sigma.begin(), sigma.end(), g.begin(), g.end())) return false;
  return true;
}

namespace {

std::vector<Face> all_faces(const SRPresentation& pres) {
  const int m = static_cast<int>(pres.variables.size());
  if (m > 22) throw std::length_error("too many variables for subset enumeration");
  std::vector<Face> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    Face f;
    for (int v = 0; v < m; ++v)
      if (mask >> v & 1) f.push_back(v);
    if (divisibility_face_test(pres, f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> face_sum_hilbert(const SRPresentation& pres, int degree) {
  std::vector<std::int64_t> total(degree + 1, 0);
  for (const auto& f : all_faces(pres)) {
    std::vector<std::int64_t> s(degree + 1, 0);
    int shift = 0;
    for (int v : f) shift += pres.variables[v].degree;
    if (shift > degree) continue;
    s[shift] = 1;
    for (int v : f) {
      const int d = pres.variables[v].degree;
      for (int k = d; k <= degree; ++k) s[k] += s[k - d];
    }
    for (int k = 0; k <= degree; ++k) total[k] += s[k];
  }
  return total;
}

std::vector<Face> brute_force_facets(const SRPresentation& pres) {
  std::vector<Face> faces = all_faces(pres);
  std::vector<Face> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (const auto& g : faces)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootVec alpha0_by_scan(const BdsPair& pair) {
  const RootSystem& g = pair.root_system();
  const int j = pair.node();
  std::vector<RootVec> r0;
  for (const auto& alpha : g.positive_roots())
    if (alpha(j - 1) % pair.mark() == 0) r0.push_back(alpha);
  std::vector<RootVec> found;
  for (const auto& alpha : r0) {
    if (alpha(j - 1) != pair.mark()) continue;
    bool decomposable = false;
    for (const auto& beta : r0)
      for (const auto& gamma : r0)
        if (beta + gamma == alpha) decomposable = true;
    if (!decomposable) found.push_back(alpha);
  }
  if (found.size() != 1) throw std::logic_error("scan did not find a unique indecomposable root with a_j(alpha) = a_j");
  return found.front();
}

}  // namespace bdsweyl::oracle
