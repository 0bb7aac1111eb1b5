#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdsweyl/bdspair.hpp"

namespace bdsweyl {

/// A g_0-dominant integral weight, stored by its values lambda(h_i) for
/// i in I(j) and lambda(h_0) (key 0). Missing keys read as zero.
class Weight0 {
 public:
  Weight0() = default;
  /// All keys must lie in I(j) u {0} and all values must be >= 0.
  Weight0(const BdsPair& pair, std::map<int, int> values);

  static Weight0 zero(const BdsPair& pair) { return Weight0(pair, {}); }

  int operator[](int i) const;
  int h0() const { return (*this)[0]; }
  const std::map<int, int>& values() const { return values_; }
  bool is_zero() const;
  std::string to_string() const;

 private:
  std::map<int, int> values_;
};

/// The variable P_{i,r}; its t-degree is a_j * r.
struct SRVariable {
  int node = 0;
  int level = 0;
  int degree = 0;

  std::string name() const;
  auto operator<=>(const SRVariable& o) const { return std::pair(node, level) <=> std::pair(o.node, o.level); }
  bool operator==(const SRVariable& o) const { return node == o.node && level == o.level; }
};

/// Sorted indices into SRPresentation::variables.
using Face = std::vector<int>;

enum class Koszul { yes, unknown };

/// Presentation C[P_{i,r}] / (squarefree monomials) of the reduced algebra.
///
/// Only surviving variables are stored: the relations P_{i,s}, s > lambda(h_i), and
/// the single-variable monomials with a_i^vee(alpha_0) s > lambda(h_0) become level
/// caps. The remaining relations are the divisibility-minimal monomials
/// P_{i_1,r_1}...P_{i_m,r_m} (distinct nodes) whose weighted level sum exceeds
/// lambda(h_0).
struct SRPresentation {
  int rank = 0;
  int node = 0;
  int mark = 0;
  std::vector<int> comarks;      ///< a_i^vee(alpha_0), index i-1
  std::vector<int> marks_alpha0; ///< a_i(alpha_0), index i-1
  Weight0 lambda;
  std::vector<int> caps;         ///< highest surviving level per node, index i-1
  std::vector<SRVariable> variables;
  std::vector<Face> generators;

  bool jac_zero = false;
  bool two_support_nodes = false;

  int index_of(int node, int level) const;
  /// The weighted bound only involves nodes with a_i^vee(alpha_0) > 0.
  bool constrained(int node) const { return comarks[node - 1] > 0; }
  /// "C[P_{2,1}, P_{3,1}]/(P_{2,1}P_{3,1})".
  std::string to_string() const;
  std::string monomial_string(const Face& f) const;
};

SRPresentation presentation(const BdsPair& pair, const Weight0& lambda);

/// Level caps alone (no enumeration), in node order.
std::vector<int> variable_caps(const BdsPair& pair, const Weight0& lambda);

/// sum_i a_i^vee(alpha_0) * (top level of sigma at node i) <= lambda(h_0).
/// Throws if sigma references an index outside the variable list.
bool face_predicate(const SRPresentation& pres, const Face& sigma);

struct SimplicialComplex {
  std::vector<SRVariable> vertices;
  std::vector<Face> facets;

  bool pure() const;
  std::size_t max_facet_size() const;
};

/// Facets in lexicographic order of the top-level tuple on constrained nodes.
SimplicialComplex facets(const SRPresentation& pres);

/// Max facet size; when a_j^vee(alpha_0) = 1 also checks it equals
/// lambda(h_0) + sum over a_i(alpha_0) = 0 of lambda(h_i).
int krull_dim(const SRPresentation& pres);
int krull_closed_form(const SRPresentation& pres);

struct HilbertSeries {
  int truncation_degree = 0;
  std::vector<std::int64_t> coefficients;

  /// numerator / prod (1 - t^d) over denominator_degrees.
  struct ClosedForm {
    std::vector<std::int64_t> numerator;
    std::vector<int> denominator_degrees;
  };
  std::optional<ClosedForm> closed_form;
};

inline constexpr int kDefaultHilbertDegree = 24;

/// Truncated series by a DP over the weighted budget. The closed form is attached
/// when a_j^vee(alpha_0) = 1.
HilbertSeries hilbert_series(const SRPresentation& pres, int degree = kDefaultHilbertDegree);

/// Coefficients of the series only, without the closed form.
std::vector<std::int64_t> hilbert_coefficients(const SRPresentation& pres, int degree);

/// Expands numerator / denominator up to the given degree.
std::vector<std::int64_t> expand_closed_form(const HilbertSeries::ClosedForm& cf, int degree);

/// Facet order F_0..F_m with F_r = free variables u P_{j,1..lambda(h_0)-r} u P_{s,1..r}.
/// Requires a_j^vee(alpha_0) = 1 and support(alpha_0) = {s, j}.
std::vector<Face> canonical_shelling(const SRPresentation& pres);

/// Literal shelling test: for r >= 1 the maximal faces of
/// (F_0 u ... u F_{r-1}) n F_r all have |F_r| - 1 elements.
/// Throws if `order` is not a permutation of the facets.
bool verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order);

/// Backtracking search for a shelling order; nullopt if none was found within
/// `step_limit` extension attempts.
std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& complex, long step_limit = 200000);

struct SRFlags {
  bool jac_zero = false;
  Koszul koszul = Koszul::unknown;
  bool pure = false;
  bool cohen_macaulay_certified = false;
  bool two_support_nodes = false;
  /// "canonical", "search" or "none".
  std::string shelling_source = "none";
};

SRFlags flags(const SRPresentation& pres);

std::string to_string(Koszul k);

}  // namespace bdsweyl
