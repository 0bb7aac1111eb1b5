#include "bdsweyl/weylcrit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bdsweyl {

namespace {

using RPoly = std::vector<Rational>;

RPoly poly_mul(const RPoly& a, const RPoly& b) {
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

void trim(RPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

void require_bn_top(const BdsPair& pair) {
  const RootSystem& g = pair.root_system();
  if (g.type_letter() != 'B' || g.rank() < 3 || pair.node() != g.rank())
    throw std::invalid_argument("local_weyl_dim_bn needs the pair (B_n, j = n) with n >= 3");
}

BigInt ipow(BigInt base, int e) {
  BigInt out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

}  // namespace

bool DeltaWeight::dominant() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v >= 0; });
}

std::string DeltaWeight::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << 'h' << k + 1 << '=' << values[k];
  return out.str();
}

DeltaWeight weight_convert(const BdsPair& pair, const Weight0& lambda) {
  const int j = pair.node();
  DeltaWeight out;
  out.values.assign(pair.rank(), 0);
  int rest = lambda.h0();
  for (int i : pair.complement()) {
    out.values[i - 1] = lambda[i];
    rest -= pair.comark0(i) * lambda[i];
  }
  const int cj = pair.comark0(j);
  if (rest % cj != 0) {
    std::ostringstream msg;
    msg << "lambda(h_" << j << ") = " << rest << "/" << cj << " is not an integer; the weight is not in the weight lattice of g";
    throw std::invalid_argument(msg.str());
  }
  out.values[j - 1] = rest / cj;
  return out;
}

int h0_value(const BdsPair& pair, const DeltaWeight& lambda) {
  if (static_cast<int>(lambda.values.size()) != pair.rank()) throw std::invalid_argument("weight has the wrong number of coordinates");
  int sum = 0;
  for (int i = 1; i <= pair.rank(); ++i) sum += pair.comark0(i) * lambda[i];
  return sum;
}

Weight0 to_weight0(const BdsPair& pair, const DeltaWeight& lambda) {
  std::map<int, int> values;
  for (int i : pair.complement()) values[i] = lambda[i];
  values[0] = h0_value(pair, lambda);
  for (const auto& [key, v] : values)
    if (v < 0) throw std::invalid_argument("restriction to g_0 is not dominant at h" + std::to_string(key));
  return Weight0(pair, values);
}

bool is_alambda_trivial(const BdsPair& pair, const Weight0& lambda) {
  const int l0 = lambda.h0();
  for (int i : pair.complement())
    if (lambda[i] > 0 && pair.comark0(i) == 0) return false;
  if (l0 >= pair.comark0(pair.node())) return false;
  for (int i : pair.complement())
    if (lambda[i] > 0 && l0 >= pair.comark0(i)) return false;
  return true;
}

bool is_global_weyl_irreducible(const BdsPair& pair, const Weight0& lambda) {
  if (lambda.h0() != 0) return false;
  const RootVec& top = pair.theta_k(pair.mark() - 1);
  for (int i : pair.complement())
    if (lambda[i] > 0 && top(i - 1) != pair.alpha0()(i - 1)) return false;
  return true;
}

Rational IdealPoint::value(int node, int level) const {
  const auto& p = pi.at(node - 1);
  if (level < 0 || level >= static_cast<int>(p.size())) return Rational(0);
  return p[level];
}

int weighted_product_degree(const BdsPair& pair, const IdealPoint& point) {
  RPoly prod{Rational(1)};
  for (int i = 1; i <= pair.rank(); ++i) {
    RPoly p = point.pi.at(i - 1);
    trim(p);
    for (int e = 0; e < pair.comark0(i); ++e) prod = poly_mul(prod, p);
  }
  trim(prod);
  return static_cast<int>(prod.size()) - 1;
}

std::vector<std::string> relation_violations(const BdsPair& pair, const IdealPoint& point) {
  std::vector<std::string> bad;
  const Weight0& lambda = point.lambda;
  std::vector<int> top(pair.rank(), 0);
  for (int i = 1; i <= pair.rank(); ++i) {
    const auto& p = point.pi.at(i - 1);
    if (p.empty() || p[0] != 1) bad.push_back("pi_{" + std::to_string(i) + ",0} != 1");
    for (int r = 1; r < static_cast<int>(p.size()); ++r) {
      if (p[r] == 0) continue;
      top[i - 1] = r;
      if (i != pair.node() && r > lambda[i])
        bad.push_back("pi_{" + std::to_string(i) + "," + std::to_string(r) + "} != 0 above lambda(h_" + std::to_string(i) + ")");
    }
  }
  // The monomial relations vanish at the point iff the largest weighted sum over
  // nonzero levels stays within lambda(h_0).
  long sum = 0;
  for (int i = 1; i <= pair.rank(); ++i) sum += static_cast<long>(pair.comark0(i)) * top[i - 1];
  if (sum > lambda.h0()) bad.push_back("a product of nonzero pi with weighted level sum " + std::to_string(sum) + " > lambda(h_0)");
  return bad;
}

IdealPoint ideal_point_from_params(const BdsPair& pair, const Weight0& lambda, const EvalParams& params) {
  const int n = pair.rank();
  std::set<Rational> seen;
  for (const auto& pt : params.points) {
    if (pt.z_power == 0) throw std::invalid_argument("evaluation parameter z^{a_j} must be nonzero");
    if (!seen.insert(pt.z_power).second)
      throw std::invalid_argument("evaluation parameters repeat z^{a_j} = " + to_fraction_string(pt.z_power));
    if (static_cast<int>(pt.lambda.values.size()) != n) throw std::invalid_argument("point weight has the wrong number of coordinates");
    if (!pt.lambda.dominant()) throw std::invalid_argument("point weight " + pt.lambda.to_string() + " is not dominant for g");
  }
  for (int i : pair.complement()) {
    int total = params.mu[i];
    for (const auto& pt : params.points) total += pt.lambda[i];
    if (total != lambda[i])
      throw std::invalid_argument("mu + sum lambda_s differs from lambda at h" + std::to_string(i));
  }
  {
    int total = params.mu.h0();
    for (const auto& pt : params.points) total += h0_value(pair, pt.lambda);
    if (total != lambda.h0()) throw std::invalid_argument("mu + sum lambda_s differs from lambda at h0");
  }

  IdealPoint point;
  point.lambda = lambda;
  for (int i = 1; i <= n; ++i) {
    RPoly p{Rational(1)};
    for (const auto& pt : params.points)
      for (int e = 0; e < pt.lambda[i]; ++e) p = poly_mul(p, RPoly{Rational(1), -pt.z_power});
    trim(p);
    point.pi.push_back(std::move(p));
  }

  auto bad = relation_violations(pair, point);
  if (!bad.empty()) throw std::logic_error("ideal point violates a relation: " + bad.front());
  if (weighted_product_degree(pair, point) != lambda.h0() - params.mu.h0())
    throw std::logic_error("degree identity for prod pi_i^{a_i^vee(alpha_0)} fails");
  return point;
}

std::vector<std::pair<int, BigInt>> bn_fundamental_decomposition(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("fundamental index must satisfy 1 <= i <= n-1");
  std::vector<std::pair<int, BigInt>> out;
  for (int k = i; k >= 0; k -= 2) out.push_back({k, binomial(2 * n + 1, k)});
  return out;
}

LocalDimension local_weyl_dim_bn(const BdsPair& pair, int fundamental, int power) {
  require_bn_top(pair);
  const int n = pair.rank();
  if (fundamental < 0 || fundamental > n - 1) throw std::invalid_argument("fundamental index must satisfy 0 <= i <= n-1");
  if (power < 0) throw std::invalid_argument("power must be >= 0");

  LocalDimension out;
  out.n = n;
  out.fundamental = fundamental;
  out.power = power;
  if (fundamental == 0) {
    out.current_algebra_dim = ipow(BigInt(1) << n, power);
    out.displayed_formula = ipow((BigInt(1) << (n - 1)) + (BigInt(1) << (n - 1)), power);
  } else {
    BigInt base = 0;
    for (const auto& [k, d] : bn_fundamental_decomposition(n, fundamental)) base += d;
    out.current_algebra_dim = ipow(base, power);
    BigInt shown = 0;
    for (int s = 1; s <= fundamental; ++s) shown += binomial(2 * n, s);
    out.displayed_formula = ipow(shown, power);
  }
  out.discrepancy = out.displayed_formula != out.current_algebra_dim;

  if (fundamental == n - 1) {
    out.spin_case = true;
    std::vector<int> labels(n, 0);
    labels[pair.g0_position(n - 1)] = power;
    out.dimension = pair.g0().weyl_dim(labels);
  } else {
    out.dimension = out.current_algebra_dim;
  }
  return out;
}

LocalDimension local_weyl_dim_bn(const BdsPair& pair, const Weight0& lambda) {
  require_bn_top(pair);
  int fundamental = -1, power = 0;
  for (const auto& [key, v] : lambda.values()) {
    if (v == 0) continue;
    if (fundamental >= 0) throw std::invalid_argument("weight is not a multiple of a single fundamental g_0-weight");
    fundamental = key;
    power = v;
  }
  if (fundamental < 0) fundamental = 0;
  return local_weyl_dim_bn(pair, fundamental, power);
}

std::vector<std::vector<int>> sl2_local_weyl_basis(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  std::vector<std::vector<int>> out{{}};
  std::vector<int> seq;
  // seq holds r_1 <= ... <= r_k; extend while r_k <= m - k stays possible.
  auto rec = [&](auto&& self, int k, int lo) -> void {
    for (int r = lo; r <= m - k; ++r) {
      seq.push_back(r);
      out.push_back(seq);
      if (k < m) self(self, k + 1, r);
      seq.pop_back();
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

const std::vector<RecordedConstant>& record_constants() {
  static const std::vector<RecordedConstant> table = {
      {"B3/h1=0,h2=1,h0=1/generic-ideal", 22, false,
       "dim W(lambda, I_(a,0)), a pullback of a current-algebra local Weyl module; recorded, not computed"},
      {"B3/h1=0,h2=1,h0=1/special-ideal", 32, false,
       "dim W(lambda, I_(0,b)); value taken from an external thesis, recorded, not computed"},
  };
  return table;
}

std::optional<RecordedConstant> lookup_constant(const std::string& key) {
  for (const auto& c : record_constants())
    if (c.key == key) return c;
  return std::nullopt;
}

}  // namespace bdsweyl
