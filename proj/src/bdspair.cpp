#include "bdsweyl/bdspair.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bdsweyl {

std::vector<int> ReflectionChain::node_counts(int rank) const {
  std::vector<int> counts(rank, 0);
  for (const auto& e : entries) ++counts[e.node - 1];
  return counts;
}

BdsPair BdsPair::build(RootSystem rs, int node) {
  const int n = rs.rank();
  if (node < 1 || node > n) throw std::invalid_argument("node " + std::to_string(node) + " out of range 1.." + std::to_string(n));
  const RootVec& theta = rs.theta();
  const int a = theta(node - 1);
  if (a < 2) {
    std::ostringstream msg;
    msg << "mark a_" << node << " = " << a << "; the construction requires a_j >= 2";
    throw std::invalid_argument(msg.str());
  }

  std::vector<int> complement;
  for (int i = 1; i <= n; ++i)
    if (i != node) complement.push_back(i);
  WeylWord w0 = rs.longest_parabolic_word(complement);
  RootVec alpha0 = rs.apply_word(w0.inverse(), theta);

  std::vector<RootVec> delta0;
  for (int i : complement) delta0.push_back(unit_vector(n, i));
  delta0.push_back(alpha0);
  IntMatrix d(n, n);
  for (int c = 0; c < n; ++c) d.col(c) = delta0[c];

  RootSystem g0 = RootSystem::from_gram(d.transpose() * rs.gram6() * d);
  BdsPair pair(std::move(rs), std::move(g0));
  const RootSystem& g = pair.rs_;
  pair.node_ = node;
  pair.mark_ = a;
  pair.complement_ = std::move(complement);
  pair.w0_ = std::move(w0);
  pair.alpha0_ = alpha0;
  pair.delta0_ = std::move(delta0);
  pair.delta0_matrix_ = d;
  pair.comarks0_ = g.coroot_expansion(alpha0);
  pair.marks0_ = alpha0;

  pair.graded_.assign(a, {});
  for (const auto& alpha : g.roots()) pair.graded_[pair.grade(alpha)].push_back(alpha);

  // theta_k: the unique alpha in R_k^+ orthogonal-or-acute to Delta_0 with no
  // alpha + beta (beta in Delta_0) a root.
  for (int k = 1; k < a; ++k) {
    std::vector<RootVec> found;
    for (const auto& alpha : pair.graded_positive_roots(k)) {
      bool ok = true;
      for (const auto& beta : pair.delta0_)
        if (g.inner6(alpha, beta) < 0 || g.is_root(alpha + beta)) ok = false;
      if (ok) found.push_back(alpha);
    }
    if (found.size() != 1)
      throw std::logic_error("theta_" + std::to_string(k) + " is not unique (" + std::to_string(found.size()) + " candidates)");
    const RootVec& tk = found.front();
    if ((tk.array() <= 0).any()) throw std::logic_error("theta_k has a vanishing coordinate");
    if (!g.is_positive_root(tk + unit_vector(n, node))) throw std::logic_error("theta_k + alpha_j is not a root");
    auto positives = pair.graded_positive_roots(k);
    for (const auto& alpha : positives)
      if (alpha != tk && RootSystem::height(alpha) >= RootSystem::height(tk))
        throw std::logic_error("theta_k is not the unique root of maximal height in R_k^+");
    pair.thetas_.push_back(tk);
  }

  pair.g0_types_ = classify_components(pair.g0_);
  return pair;
}

std::vector<RootVec> BdsPair::graded_positive_roots(int k) const {
  std::vector<RootVec> out;
  for (const auto& alpha : graded_.at(k))
    if ((alpha.array() >= 0).all()) out.push_back(alpha);
  return out;
}

int BdsPair::grade(const RootVec& alpha) const {
  return ((alpha(node_ - 1) % mark_) + mark_) % mark_;
}

const RootVec& BdsPair::theta_k(int k) const {
  if (k < 1 || k >= mark_) throw std::invalid_argument("theta_k needs 1 <= k < a_j");
  return thetas_[k - 1];
}

int BdsPair::g0_position(int i) const {
  if (i == 0) return rank() - 1;
  auto it = std::find(complement_.begin(), complement_.end(), i);
  if (it == complement_.end()) throw std::invalid_argument("node " + std::to_string(i) + " is not in I(j) u {0}");
  return static_cast<int>(it - complement_.begin());
}

std::vector<int> BdsPair::g0_labels(const RootVec& v) const {
  std::vector<int> labels;
  for (const auto& beta : delta0_) {
    const int num = 2 * rs_.inner6(v, beta);
    const int den = rs_.inner6(beta, beta);
    if (num % den != 0) throw std::logic_error("non-integral pairing with a Delta_0 coroot");
    labels.push_back(num / den);
  }
  return labels;
}

ReflectionChain reflection_chain(const BdsPair& pair, std::span<const int> priority) {
  const RootSystem& g = pair.root_system();
  const int n = g.rank();
  std::vector<int> order;
  if (priority.empty()) {
    for (int i = 1; i <= n; ++i) order.push_back(i);
  } else {
    order.assign(priority.begin(), priority.end());
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (static_cast<int>(sorted.size()) != n || sorted[i] != i + 1)
        throw std::invalid_argument("tie-break priority must be a permutation of the nodes");
  }

  ReflectionChain chain;
  chain.entries.push_back({pair.node(), pair.alpha0()});
  RootVec beta = pair.alpha0();
  int node = pair.node();
  for (std::size_t step = 0; step < g.positive_roots().size() + 1; ++step) {
    RootVec next = g.reflect(node, beta);
    if (!g.is_positive_root(next)) throw std::logic_error("reflection chain left R^+");
    if (auto simple = g.simple_index(next)) {
      chain.entries.push_back({*simple, next});
      return chain;
    }
    int chosen = 0;
    for (int i : order) {
      RootVec e = unit_vector(n, i);
      if (g.inner6(next, e) > 0 && !g.is_root(next + e)) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) throw std::logic_error("reflection chain has no admissible node");
    chain.entries.push_back({chosen, next});
    beta = next;
    node = chosen;
  }
  throw std::logic_error("reflection chain did not terminate");
}

long graded_dim(const BdsPair& pair, long s) {
  if (s < 0) throw std::invalid_argument("grade must be non-negative");
  const long k = s % pair.mark();
  return static_cast<long>(pair.graded_roots()[k].size()) + (k == 0 ? pair.rank() : 0);
}

bool gk_irreducibility_check(const BdsPair& pair, int k) {
  std::vector<int> labels = pair.g0_labels(pair.theta_k(k));
  for (int x : labels)
    if (x < 0) throw std::logic_error("theta_k is not dominant for Delta_0");
  return pair.g0().weyl_dim(labels) == BigInt(pair.graded_roots()[k].size());
}

std::vector<PairSpec> all_pairs(int max_rank) {
  std::vector<PairSpec> out;
  for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    for (int n = 1; n <= max_rank; ++n) {
      if (!valid_simple_type(letter, n)) continue;
      RootVec marks = RootSystem::build(letter, n).marks();
      for (int j = 1; j <= n; ++j)
        if (marks(j - 1) >= 2) out.push_back({letter, n, j});
    }
  }
  return out;
}

BdsPair build_pair(const PairSpec& spec) {
  return BdsPair::build(RootSystem::build(spec.type_letter, spec.rank), spec.node);
}

std::vector<std::string> check_pair_invariants(const BdsPair& pair) {
  std::vector<std::string> bad;
  const RootSystem& g = pair.root_system();
  const int n = g.rank();
  const int a = pair.mark();
  const int j = pair.node();
  const RootVec& a0 = pair.alpha0();
  const RootVec aj = unit_vector(n, j);

  if (a0(j - 1) != a) bad.push_back("a_j(alpha_0) != a_j");
  if (g.inner6(a0, a0) != 12) bad.push_back("alpha_0 is not long");
  for (int i : pair.complement())
    if (g.inner6(a0, unit_vector(n, i)) > 0) bad.push_back("(alpha_0, alpha_" + std::to_string(i) + ") > 0");
  if (g.inner6(a0, aj) <= 0) bad.push_back("(alpha_0, alpha_j) <= 0");
  for (const auto& beta : pair.delta0())
    if (!g.is_positive_root(beta)) bad.push_back("Delta_0 not contained in R^+");

  // Root closure of Delta_0 equals R_0.
  std::set<RootVec, LexLess> closure, r0;
  for (const auto& v : pair.g0().roots()) closure.insert(pair.delta0_matrix() * v);
  for (const auto& v : pair.graded_roots()[0]) r0.insert(v);
  if (closure != r0) bad.push_back("root closure of Delta_0 differs from R_0");

  std::size_t total = 0;
  for (const auto& rk : pair.graded_roots()) total += rk.size();
  if (total != g.roots().size()) bad.push_back("graded root sets do not partition R");
  for (int k = 1; k < a; ++k)
    if (pair.graded_roots()[k].size() != pair.graded_roots()[a - k].size()) bad.push_back("|R_k| != |R_{a_j-k}|");

  for (int k = 1; k < a; ++k) {
    const RootVec& tk = pair.theta_k(k);
    RootVec diff = g.theta() - tk;
    if (!g.is_positive_root(diff) || pair.grade(diff) != a - k) bad.push_back("theta - theta_k not in R^+_{a_j-k}");
    if (!gk_irreducibility_check(pair, k)) bad.push_back("g_" + std::to_string(k) + " fails the irreducibility check");
    for (const auto& beta : pair.graded_positive_roots(k))
      if (g.is_root(a0 + beta)) bad.push_back("alpha_0 + beta is a root for beta in R_k^+");
  }
  {
    RootVec v = pair.theta_k(a - 1) + aj - a0;
    bool ok = v.isZero() || (g.is_positive_root(v) && pair.grade(v) == 0);
    if (!ok) bad.push_back("theta_{a_j-1} + alpha_j - alpha_0 not in R_0^+ u {0}");
  }
  for (const auto& alpha : pair.graded_positive_roots(0))
    if (alpha(j - 1) == a && g.is_long(alpha) && alpha != a0 && RootSystem::height(alpha) <= RootSystem::height(a0))
      bad.push_back("a long root of R_0^+ with a_j(alpha) = a_j is not higher than alpha_0");

  if (pair.comark0(j) == 1)
    for (int i = 1; i <= n; ++i)
      if (pair.comark0(i) > 1) bad.push_back("a_j^vee(alpha_0) = 1 but a_i^vee(alpha_0) > 1");

  // Counting identity under three tie-breaking orders.
  std::vector<int> ascending, descending, rotated;
  for (int i = 1; i <= n; ++i) ascending.push_back(i);
  descending.assign(ascending.rbegin(), ascending.rend());
  rotated = ascending;
  std::rotate(rotated.begin(), rotated.begin() + n / 2, rotated.end());
  for (const auto* order : {&ascending, &descending, &rotated}) {
    ReflectionChain chain = reflection_chain(pair, *order);
    std::vector<int> counts = chain.node_counts(n);
    for (int i = 1; i <= n; ++i)
      if (counts[i - 1] != pair.comark0(i)) bad.push_back("reflection chain count differs from a_i^vee(alpha_0)");
  }

  // Weight-level shadow of g_k = [g_{k-m}, g_m] for 1 <= m < k < a_j.
  for (int k = 2; k < a; ++k) {
    for (int m = 1; m < k; ++m) {
      std::set<RootVec, LexLess> sums;
      for (const auto& x : pair.graded_roots()[k - m])
        for (const auto& y : pair.graded_roots()[m]) sums.insert(x + y);
      for (const auto& alpha : pair.graded_roots()[k])
        if (!sums.count(alpha)) bad.push_back("a root of R_k is not a sum from R_{k-m} + R_m");
    }
  }
  return bad;
}

}  // namespace bdsweyl
