#include "bdsweyl/garland.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bdsweyl {

namespace {

Monomial mul(const Monomial& a, const Monomial& b) {
  std::map<HGen, int> merged;
  for (const auto& [g, e] : a.factors) merged[g] += e;
  for (const auto& [g, e] : b.factors) merged[g] += e;
  return Monomial{{merged.begin(), merged.end()}};
}

void require_positive(const BdsPair& pair, const RootVec& alpha) {
  if (!pair.root_system().is_positive_root(alpha)) throw std::invalid_argument(format_root(alpha) + " is not a positive root");
}

std::vector<HPoly> series_mul(const std::vector<HPoly>& a, const std::vector<HPoly>& b, int order) {
  std::vector<HPoly> out(order + 1);
  for (int x = 0; x <= order && x < static_cast<int>(a.size()); ++x)
    for (int y = 0; x + y <= order && y < static_cast<int>(b.size()); ++y) out[x + y] += a[x] * b[y];
  return out;
}

CheckResult compare(const std::vector<HPoly>& lhs, const std::vector<HPoly>& rhs, const std::string& what) {
  for (std::size_t r = 0; r < std::max(lhs.size(), rhs.size()); ++r) {
    HPoly l = r < lhs.size() ? lhs[r] : HPoly();
    HPoly x = r < rhs.size() ? rhs[r] : HPoly();
    if (!(l == x)) {
      std::ostringstream msg;
      msg << what << " differs at u^" << r << ": " << l.to_string() << " vs " << x.to_string();
      return {false, msg.str()};
    }
  }
  return {};
}

}  // namespace

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [g, e] : factors) d += e;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.factors < b.factors;
}

HPoly HPoly::constant(const Rational& c) {
  HPoly p;
  p.add_term(Monomial{}, c);
  return p;
}

HPoly HPoly::generator(const HGen& g) {
  HPoly p;
  p.add_term(Monomial{{{g, 1}}}, Rational(1));
  return p;
}

void HPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HPoly& HPoly::operator+=(const HPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HPoly HPoly::operator+(const HPoly& o) const {
  HPoly out = *this;
  out += o;
  return out;
}

HPoly HPoly::operator-(const HPoly& o) const {
  HPoly out = *this;
  out -= o;
  return out;
}

HPoly HPoly::operator*(const HPoly& o) const {
  HPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(mul(ma, mb), ca * cb);
  return out;
}

HPoly HPoly::operator*(const Rational& c) const {
  HPoly out;
  for (const auto& [m, x] : terms_) out.add_term(m, x * c);
  return out;
}

HPoly HPoly::on_side(int side) const {
  HPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial moved;
    std::map<HGen, int> merged;
    for (auto [g, e] : m.factors) {
      g.side = side;
      merged[g] += e;
    }
    moved.factors.assign(merged.begin(), merged.end());
    out.add_term(moved, c);
  }
  return out;
}

HPoly HPoly::coproduct() const {
  HPoly out;
  for (const auto& [m, c] : terms_) {
    HPoly term = constant(c);
    for (const auto& [g, e] : m.factors) {
      HGen left = g, right = g;
      left.side = 0;
      right.side = 1;
      HPoly sum = generator(left) + generator(right);
      for (int k = 0; k < e; ++k) term = term * sum;
    }
    out += term;
  }
  return out;
}

std::string HPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out << (first ? "" : " + ") << '(' << c << ')';
    for (const auto& [g, e] : m.factors) {
      out << "*H" << (g.side ? "'" : "") << '[' << g.node << ',' << g.power << ']';
      if (e > 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

HPoly h_alpha(const BdsPair& pair, const RootVec& alpha, int p) {
  const RootVec c = pair.root_system().coroot_expansion(alpha);
  HPoly out;
  for (int i = 1; i <= pair.rank(); ++i)
    if (c(i - 1) != 0) out += HPoly::generator({i, p, 0}) * Rational(c(i - 1));
  return out;
}

std::vector<HPoly> p_elements(const BdsPair& pair, const RootVec& alpha, int max_r) {
  require_positive(pair, alpha);
  if (max_r < 0) throw std::invalid_argument("r must be >= 0");
  std::vector<HPoly> h(max_r + 1);
  for (int p = 1; p <= max_r; ++p) h[p] = h_alpha(pair, alpha, p);
  std::vector<HPoly> out{HPoly::constant(1)};
  for (int r = 1; r <= max_r; ++r) {
    HPoly acc;
    for (int p = 1; p <= r; ++p) acc += h[p] * out[r - p];
    out.push_back(acc * Rational(-1, r));
  }
  return out;
}

HPoly p_element(const BdsPair& pair, const RootVec& alpha, int r) {
  return p_elements(pair, alpha, r).back();
}

HSeries exp_series(const BdsPair& pair, const RootVec& alpha, int order) {
  require_positive(pair, alpha);
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  // X = -sum_r H_alpha[r] u^r / r; exp X = sum_k X^k / k!, X^k starts at u^k.
  std::vector<HPoly> x(order + 1);
  for (int r = 1; r <= order; ++r) x[r] = h_alpha(pair, alpha, r) * Rational(-1, r);
  std::vector<HPoly> power(order + 1);
  power[0] = HPoly::constant(1);
  HSeries out;
  out.order = order;
  out.coefficients.assign(order + 1, HPoly());
  Rational factorial = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      power = series_mul(power, x, order);
      factorial *= k;
    }
    for (int r = 0; r <= order; ++r) out.coefficients[r] += power[r] * Rational(1 / factorial);
  }
  return out;
}

CheckResult exp_agreement_check(const BdsPair& pair, const RootVec& alpha, int order) {
  return compare(p_elements(pair, alpha, order), exp_series(pair, alpha, order).coefficients, "P_{alpha,r} vs exp series");
}

CheckResult product_formula_check(const BdsPair& pair, const RootVec& alpha, int order) {
  const RootVec c = pair.root_system().coroot_expansion(alpha);
  std::vector<HPoly> prod(order + 1);
  prod[0] = HPoly::constant(1);
  for (int i = 1; i <= pair.rank(); ++i) {
    if (c(i - 1) == 0) continue;
    const HSeries si = exp_series(pair, unit_vector(pair.rank(), i), order);
    for (int e = 0; e < c(i - 1); ++e) prod = series_mul(prod, si.coefficients, order);
  }
  return compare(exp_series(pair, alpha, order).coefficients, prod, "product formula");
}

CheckResult grouplike_check(const BdsPair& pair, const RootVec& alpha, int order) {
  const std::vector<HPoly> p = p_elements(pair, alpha, order);
  std::vector<HPoly> lhs, rhs;
  for (int r = 0; r <= order; ++r) {
    lhs.push_back(p[r].coproduct());
    HPoly acc;
    for (int s = 0; s <= r; ++s) acc += p[s].on_side(0) * p[r - s].on_side(1);
    rhs.push_back(acc);
  }
  return compare(lhs, rhs, "coproduct");
}

CheckResult newton_check(const BdsPair& pair, const RootVec& alpha, int order) {
  const std::vector<HPoly> p = p_elements(pair, alpha, order);
  for (int r = 1; r <= order; ++r) {
    HPoly acc = p[r] * Rational(r);
    for (int q = 1; q <= r; ++q) acc += h_alpha(pair, alpha, q) * p[r - q];
    if (!acc.is_zero()) return {false, "Newton identity fails at r = " + std::to_string(r) + ": " + acc.to_string()};
  }
  return {};
}

CheckResult degree_check(const BdsPair& pair, const RootVec& alpha, int order) {
  const std::vector<HPoly> p = p_elements(pair, alpha, order);
  for (int r = 0; r <= order; ++r) {
    for (const auto& [m, c] : p[r].terms()) {
      int d = 0;
      for (const auto& [g, e] : m.factors) d += pair.mark() * g.power * e;
      if (d != pair.mark() * r)
        return {false, "P_{alpha," + std::to_string(r) + "} has a monomial of t-degree " + std::to_string(d)};
    }
  }
  return {};
}

}  // namespace bdsweyl
