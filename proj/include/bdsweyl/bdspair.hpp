#pragma once

#include <span>
#include <string>
#include <vector>

#include "bdsweyl/rootsys.hpp"

namespace bdsweyl {

/// One step (i_r, beta_r) of the reflection chain started at (j, alpha_0).
struct ChainEntry {
  int node = 0;
  RootVec beta;
};

/// Chain alpha_0 = beta_0 -> beta_1 = s_{i_0} beta_0 -> ... ending at a simple
/// root beta_k = alpha_{i_k}. Node i occurs exactly a_i^vee(alpha_0) times.
struct ReflectionChain {
  std::vector<ChainEntry> entries;

  int terminal_index() const { return static_cast<int>(entries.size()) - 1; }
  /// Occurrences of each node among i_0..i_k (index i-1).
  std::vector<int> node_counts(int rank) const;
};

/// The pair (g, g_0) attached to a node j with mark a_j >= 2.
///
/// g_0 is the fixed-point subalgebra of the order-a_j automorphism scaling x_j^+
/// by a primitive a_j-th root of unity. Its simple system is
/// Delta_0 = {alpha_i : i != j} u {alpha_0} with alpha_0 = w_o^{-1} theta, where w_o
/// is the longest element of the parabolic subgroup on I(j). The grading by
/// a_j(alpha) mod a_j gives the root sets R_0, ..., R_{a_j - 1}.
///
/// Weights of g_0 are indexed by I(j) u {0}; index 0 always refers to alpha_0 / h_0.
class BdsPair {
 public:
  static BdsPair build(RootSystem rs, int node);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int node() const { return node_; }
  int mark() const { return mark_; }
  const std::vector<int>& complement() const { return complement_; }
  const WeylWord& parabolic_longest_word() const { return w0_; }

  const RootVec& alpha0() const { return alpha0_; }
  /// alpha_i for i in I(j) ascending, then alpha_0.
  const std::vector<RootVec>& delta0() const { return delta0_; }
  /// Delta_0 vectors as columns: maps g_0 simple-root coordinates to g coordinates.
  const IntMatrix& delta0_matrix() const { return delta0_matrix_; }
  /// a_i^vee(alpha_0), index i-1.
  const RootVec& comarks_alpha0() const { return comarks0_; }
  /// a_i(alpha_0), index i-1.
  const RootVec& marks_alpha0() const { return marks0_; }
  int comark0(int i) const { return comarks0_(i - 1); }

  /// R_k for 0 <= k < a_j, each listed positive roots first.
  const std::vector<std::vector<RootVec>>& graded_roots() const { return graded_; }
  std::vector<RootVec> graded_positive_roots(int k) const;
  /// Grade k with a_j(alpha) in {k, k - a_j}.
  int grade(const RootVec& alpha) const;

  /// The root of R_k^+ that is dominant for Delta_0 and killed by every x_beta^+,
  /// beta in Delta_0; 1 <= k < a_j.
  const RootVec& theta_k(int k) const;

  /// Root system of g_0 in Delta_0 order (I(j) ascending, then alpha_0).
  const RootSystem& g0() const { return g0_; }
  const std::vector<SimpleType>& g0_components() const { return g0_types_; }
  /// Position of g_0 node i (i in I(j) or 0) inside delta0().
  int g0_position(int i) const;

  /// Dynkin labels on Delta_0 of a vector in the root lattice of g.
  std::vector<int> g0_labels(const RootVec& v) const;

 private:
  BdsPair(RootSystem rs, RootSystem g0) : rs_(std::move(rs)), g0_(std::move(g0)) {}

  RootSystem rs_;
  int node_ = 0;
  int mark_ = 0;
  std::vector<int> complement_;
  WeylWord w0_;
  RootVec alpha0_;
  std::vector<RootVec> delta0_;
  IntMatrix delta0_matrix_;
  RootVec comarks0_;
  RootVec marks0_;
  std::vector<std::vector<RootVec>> graded_;
  std::vector<RootVec> thetas_;
  RootSystem g0_;
  std::vector<SimpleType> g0_types_;
};

/// Chain with tie-breaking by `priority`: among admissible nodes the one appearing
/// first in `priority` is taken. An empty span means ascending node order.
ReflectionChain reflection_chain(const BdsPair& pair, std::span<const int> priority = {});

/// dim g[t]^tau[s] = |R_{s mod a_j}| + n * [s mod a_j == 0].
long graded_dim(const BdsPair& pair, long s);

/// Irreducibility certificate for g_k: the g_0-module of highest weight theta_k
/// has dimension |R_k|.
bool gk_irreducibility_check(const BdsPair& pair, int k);

/// Every (type, rank, node) with rank <= max_rank and a_j >= 2, in a fixed order.
struct PairSpec {
  char type_letter = 'B';
  int rank = 0;
  int node = 0;

  std::string name() const { return std::string(1, type_letter) + std::to_string(rank) + " j=" + std::to_string(node); }
};
std::vector<PairSpec> all_pairs(int max_rank);
BdsPair build_pair(const PairSpec& spec);

/// Checks every structural invariant of the pair; returns a description of each
/// violation (empty when all hold).
std::vector<std::string> check_pair_invariants(const BdsPair& pair);

}  // namespace bdsweyl
