#pragma once

#include <map>
#include <string>
#include <vector>

#include "bdsweyl/bdspair.hpp"

namespace bdsweyl {

/// H[i,p] = h_i (x) t^{a_j p}. `side` separates the two tensor factors when a
/// coproduct is taken; ordinary polynomials live on side 0.
struct HGen {
  int node = 0;
  int power = 0;
  int side = 0;

  auto operator<=>(const HGen&) const = default;
};

/// Sorted (generator, exponent) list with positive exponents.
struct Monomial {
  std::vector<std::pair<HGen, int>> factors;

  int total_degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in the commuting H[i,p] with exact rational coefficients.
class HPoly {
 public:
  HPoly() = default;
  static HPoly constant(const Rational& c);
  static HPoly generator(const HGen& g);

  const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly operator+(const HPoly& o) const;
  HPoly operator-(const HPoly& o) const;
  HPoly operator*(const HPoly& o) const;
  HPoly operator*(const Rational& c) const;
  bool operator==(const HPoly& o) const { return terms_ == o.terms_; }

  /// Replaces every generator by the same generator on `side`.
  HPoly on_side(int side) const;
  /// Substitutes H -> H(side 0) + H(side 1).
  HPoly coproduct() const;
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational, MonomialLess> terms_;
};

/// Truncated series sum_{r <= N} coefficients[r] u^r.
struct HSeries {
  int order = 0;
  std::vector<HPoly> coefficients;
};

/// h_alpha (x) t^{a_j p} = sum_i a_i^vee(alpha) H[i,p].
HPoly h_alpha(const BdsPair& pair, const RootVec& alpha, int p);

/// P_{alpha,0} = 1, P_{alpha,r} = -(1/r) sum_{p=1}^r H_alpha[p] P_{alpha,r-p}.
HPoly p_element(const BdsPair& pair, const RootVec& alpha, int r);
std::vector<HPoly> p_elements(const BdsPair& pair, const RootVec& alpha, int max_r);

/// exp(-sum_{r>=1} H_alpha[r] u^r / r) truncated at u^N, via the exponential series.
HSeries exp_series(const BdsPair& pair, const RootVec& alpha, int order);

/// Outcome of an identity check; `detail` names the first differing coefficient.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// p_element(alpha, r) against exp_series coefficients for r <= N.
CheckResult exp_agreement_check(const BdsPair& pair, const RootVec& alpha, int order);
/// P_alpha(u) = prod_i P_{alpha_i}(u)^{a_i^vee(alpha)} to order N.
CheckResult product_formula_check(const BdsPair& pair, const RootVec& alpha, int order);
/// Delta(P_{alpha,r}) = sum_{s+t=r} P_{alpha,s} (x) P_{alpha,t} for r <= N.
CheckResult grouplike_check(const BdsPair& pair, const RootVec& alpha, int order);
/// r P_{alpha,r} + sum_{p=1}^r H_alpha[p] P_{alpha,r-p} = 0 for 1 <= r <= N.
CheckResult newton_check(const BdsPair& pair, const RootVec& alpha, int order);
/// Every monomial of P_{alpha,r} has t-degree a_j r.
CheckResult degree_check(const BdsPair& pair, const RootVec& alpha, int order);

}  // namespace bdsweyl
