#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdsweyl/numeric.hpp"

namespace bdsweyl {

/// A sequence of simple reflections s_{i_1} s_{i_2} ... s_{i_m} (1-based nodes).
/// As an operator the rightmost letter acts first.
struct WeylWord {
  std::vector<int> letters;

  WeylWord inverse() const { return {{letters.rbegin(), letters.rend()}}; }
  bool operator==(const WeylWord&) const = default;
};

/// Simple type label such as A3, D4, G2.
struct SimpleType {
  char letter = '?';
  int rank = 0;

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  bool operator==(const SimpleType&) const = default;
};

/// Root system of a (semi)simple Lie algebra, stored in simple-root coordinates.
///
/// The bilinear form is kept as the integer matrix gram6 = 6 * ((alpha_i, alpha_j)),
/// which is integral for every type once long roots have squared length 2
/// (short roots of B, C, F have length 1, the short root of G2 has length 2/3).
/// Nodes follow Bourbaki numbering and are 1-based in every public method.
class RootSystem {
 public:
  /// Simple type from its Dynkin letter and rank. Classical ranks up to 12.
  static RootSystem build(char type_letter, int rank);

  /// Root system spanned by simple roots with the given scaled Gram matrix.
  /// Reducible systems are allowed; theta() is then unavailable.
  static RootSystem from_gram(const IntMatrix& gram6);

  char type_letter() const { return type_letter_; }
  int rank() const { return static_cast<int>(gram6_.rows()); }
  bool irreducible() const { return components_.size() == 1; }

  const IntMatrix& gram6() const { return gram6_; }
  /// cartan(i-1, k-1) = <alpha_i^vee, alpha_k> = 2 (alpha_i, alpha_k) / (alpha_i, alpha_i).
  const IntMatrix& cartan() const { return cartan_; }

  Rational simple_root_length(int node) const { return Rational(gram6_(node - 1, node - 1), 6); }

  const std::vector<RootVec>& roots() const { return roots_; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }

  const RootVec& theta() const;
  RootVec marks() const { return theta(); }

  bool is_root(const RootVec& v) const { return index_.count(v) != 0; }
  bool is_positive_root(const RootVec& v) const { return is_root(v) && (v.array() >= 0).all(); }
  /// Node i when v == alpha_i.
  std::optional<int> simple_index(const RootVec& v) const;

  int inner6(const RootVec& a, const RootVec& b) const { return a.dot(gram6_ * b); }
  Rational inner(const RootVec& a, const RootVec& b) const { return Rational(inner6(a, b), 6); }
  /// <v, alpha_i^vee>.
  int pairing(const RootVec& v, int node) const { return cartan_.row(node - 1).dot(v); }
  static int height(const RootVec& v) { return v.sum(); }
  bool is_long(const RootVec& alpha) const;

  /// a_i^vee(alpha) = a_i(alpha) d_alpha / d_{alpha_i}; alpha must be a root.
  int comark(int node, const RootVec& alpha) const;
  /// All comarks at once: h_alpha = sum_i result(i-1) h_i.
  RootVec coroot_expansion(const RootVec& alpha) const;

  RootVec reflect(int node, const RootVec& v) const;
  RootVec apply_word(const WeylWord& w, RootVec v) const;
  /// Reduced word for the longest element of the parabolic subgroup <s_i : i in J>.
  WeylWord longest_parabolic_word(std::span<const int> nodes) const;

  /// Dimension of the irreducible module with highest weight given by Dynkin labels
  /// lambda(h_i); multiplicative over simple components.
  BigInt weyl_dim(std::span<const int> dynkin_labels) const;

  /// Connected components of the Dynkin diagram as sorted 1-based node lists.
  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  RootSystem() = default;
  void close_roots();

  char type_letter_ = '?';
  IntMatrix gram6_;
  IntMatrix cartan_;
  std::vector<RootVec> positive_;
  std::vector<RootVec> roots_;
  std::map<RootVec, int, LexLess> index_;
  std::optional<RootVec> theta_;
  std::vector<std::vector<int>> components_;
};

/// Number of roots of a simple type, e.g. 2n^2 for B_n.
std::size_t classical_root_count(char type_letter, int rank);

/// Whether (letter, rank) names a simple type accepted by RootSystem::build.
bool valid_simple_type(char type_letter, int rank);

/// Identifies each Dynkin component by matching its Cartan matrix against type
/// templates up to relabelling of nodes. Preference A, B, C, D, E, F, G with
/// B2 over C2 and A3 over D3.
std::vector<SimpleType> classify_components(const RootSystem& rs);

/// Whether two Cartan matrices agree after some permutation of nodes.
bool cartan_isomorphic(const IntMatrix& a, const IntMatrix& b);

/// "alpha2 + 2*alpha3" style rendering of a lattice vector.
std::string format_root(const RootVec& v, std::string_view symbol = "alpha");

}  // namespace bdsweyl
