#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdsweyl/srring.hpp"

namespace bdsweyl {

/// A weight of g by its values lambda(h_i), i in I (index i-1). The value at j may
/// be negative when the weight comes from a g_0-dominant one.
struct DeltaWeight {
  std::vector<int> values;

  int operator[](int i) const { return values.at(i - 1); }
  bool dominant() const;
  std::string to_string() const;
};

/// lambda(h_j) = (lambda(h_0) - sum_{i != j} a_i^vee(alpha_0) lambda(h_i)) / a_j^vee(alpha_0).
/// Throws when the quotient is not an integer.
DeltaWeight weight_convert(const BdsPair& pair, const Weight0& lambda);

/// Restriction to g_0: lambda(h_0) = sum_i a_i^vee(alpha_0) lambda(h_i).
/// Throws when the restriction is not g_0-dominant.
Weight0 to_weight0(const BdsPair& pair, const DeltaWeight& lambda);

/// lambda(h_0) of a g-weight, which may be negative.
int h0_value(const BdsPair& pair, const DeltaWeight& lambda);

/// (i) lambda(h_i) > 0 only if a_i^vee(alpha_0) > 0, i in I(j);
/// (ii) lambda(h_0) < a_j^vee(alpha_0) and lambda(h_0) < a_i^vee(alpha_0) whenever lambda(h_i) > 0.
bool is_alambda_trivial(const BdsPair& pair, const Weight0& lambda);

/// lambda(h_0) = 0 and lambda(h_i) > 0 only if a_i(theta_{a_j-1}) = a_i(alpha_0).
bool is_global_weyl_irreducible(const BdsPair& pair, const Weight0& lambda);

struct EvalPoint {
  Rational z_power;  ///< z_s^{a_j}
  DeltaWeight lambda;
};

struct EvalParams {
  Weight0 mu;
  std::vector<EvalPoint> points;
};

/// Scalars pi_{i,r} from sum_r pi_{i,r} u^r = prod_s (1 - z_s^{a_j} u)^{lambda_s(h_i)}.
struct IdealPoint {
  Weight0 lambda;
  std::vector<std::vector<Rational>> pi;  ///< pi[i-1][r], r = 0..deg

  Rational value(int node, int level) const;
  int degree(int node) const { return static_cast<int>(pi.at(node - 1).size()) - 1; }
};

/// Validates the parameters, builds the point and checks it against every relation
/// of the presentation and the degree identity before returning.
IdealPoint ideal_point_from_params(const BdsPair& pair, const Weight0& lambda, const EvalParams& params);

/// Violations of the relations P_{i,s} = 0 (s > lambda(h_i), i in I(j)) and of the
/// weighted monomial relations, evaluated at the point. Empty when all hold.
std::vector<std::string> relation_violations(const BdsPair& pair, const IdealPoint& point);

/// deg prod_i pi_i(u)^{a_i^vee(alpha_0)} by explicit multiplication.
int weighted_product_degree(const BdsPair& pair, const IdealPoint& point);

struct LocalDimension {
  int n = 0;
  int fundamental = 0;  ///< i with lambda = r lambda_i; 0 means lambda_0
  int power = 0;        ///< r
  BigInt dimension;
  /// (sum_k binom(2n+1, i-2k))^r, the current-algebra local Weyl module of r omega_i
  /// (or (2^n)^r for i = 0).
  BigInt current_algebra_dim;
  /// (sum_{s=1}^i binom(2n, s))^r for i >= 1, (2^{n-1} + 2^{n-1})^r for i = 0.
  BigInt displayed_formula;
  bool discrepancy = false;
  /// i = n-1: lambda_{n-1} is a half-spin weight of D_n and W(r lambda_{n-1}) is
  /// irreducible, so the dimension is the Weyl dimension over g_0.
  bool spin_case = false;
};

/// Local Weyl module dimension for (B_n, j = n), n >= 3, lambda = r lambda_i.
LocalDimension local_weyl_dim_bn(const BdsPair& pair, int fundamental, int power);
LocalDimension local_weyl_dim_bn(const BdsPair& pair, const Weight0& lambda);

/// Fundamental B_n modules V(omega_{i-2k}) occurring in the current-algebra local Weyl
/// module of omega_i, as (index, dimension); index 0 is the trivial module.
std::vector<std::pair<int, BigInt>> bn_fundamental_decomposition(int n, int i);

/// Weakly increasing (r_1..r_k), 1 <= k <= m, r_k <= m - k, plus the empty sequence.
std::vector<std::vector<int>> sl2_local_weyl_basis(int m);

struct RecordedConstant {
  std::string key;
  long value = 0;
  bool computed = false;
  std::string note;
};

/// Regression constants for (B_3, j = 3, lambda = lambda_0 + lambda_2); keys
/// "B3/h1=0,h2=1,h0=1/generic-ideal" and ".../special-ideal".
const std::vector<RecordedConstant>& record_constants();
std::optional<RecordedConstant> lookup_constant(const std::string& key);

}  // namespace bdsweyl
