#include "bdsweyl/srring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bdsweyl {

namespace {

using Series = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Hilbert coefficient exceeds 64 bits");
  return out;
}

// s <- s / (1 - t^d), truncated to the length of s.
void divide_one_minus(Series& s, int d) {
  for (std::size_t k = d; k < s.size(); ++k) s[k] = checked_add(s[k], s[k - d]);
}

// s <- s * (1 - t^d).
void multiply_one_minus(Series& s, int d) {
  for (std::size_t k = s.size(); k-- > static_cast<std::size_t>(d);) s[k] = checked_add(s[k], -s[k - d]);
}

std::vector<int> constrained_nodes(const SRPresentation& pres) {
  std::vector<int> out;
  for (int i = 1; i <= pres.rank; ++i)
    if (pres.constrained(i) && pres.caps[i - 1] > 0) out.push_back(i);
  return out;
}

Face face_from_tops(const SRPresentation& pres, const std::vector<int>& tops) {
  Face f;
  for (int i = 1; i <= pres.rank; ++i) {
    const int top = pres.constrained(i) ? tops[i - 1] : pres.caps[i - 1];
    for (int r = 1; r <= top; ++r) f.push_back(pres.index_of(i, r));
  }
  std::sort(f.begin(), f.end());
  return f;
}

bool contains(const Face& big, const Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool shelling_step_ok(const std::vector<Face>& previous, const Face& f) {
  std::vector<Face> inter;
  for (const auto& p : previous) {
    Face x;
    std::set_intersection(p.begin(), p.end(), f.begin(), f.end(), std::back_inserter(x));
    inter.push_back(std::move(x));
  }
  for (std::size_t a = 0; a < inter.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < inter.size() && maximal; ++b)
      if (inter[b].size() > inter[a].size() && contains(inter[b], inter[a])) maximal = false;
    if (maximal && inter[a].size() + 1 != f.size()) return false;
  }
  return true;
}

}  // namespace

Weight0::Weight0(const BdsPair& pair, std::map<int, int> values) {
  for (int i : pair.complement()) values_[i] = 0;
  values_[0] = 0;
  for (const auto& [key, value] : values) {
    if (!values_.count(key))
      throw std::invalid_argument("h" + std::to_string(key) + " is not a coordinate of g_0 (node j = " +
                                  std::to_string(pair.node()) + " is replaced by h0)");
    if (value < 0) throw std::invalid_argument("weight value at h" + std::to_string(key) + " is negative");
    values_[key] = value;
  }
}

int Weight0::operator[](int i) const {
  auto it = values_.find(i);
  if (it == values_.end()) throw std::out_of_range("h" + std::to_string(i) + " is not a coordinate of g_0");
  return it->second;
}

bool Weight0::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second == 0; });
}

std::string Weight0::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : values_) {
    if (key == 0) continue;
    out << (first ? "" : ",") << 'h' << key << '=' << value;
    first = false;
  }
  out << (first ? "" : ",") << "h0=" << h0();
  return out.str();
}

std::string SRVariable::name() const {
  return "P_{" + std::to_string(node) + "," + std::to_string(level) + "}";
}

int SRPresentation::index_of(int node_i, int level) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), SRVariable{node_i, level, 0});
  if (it == variables.end() || it->node != node_i || it->level != level)
    throw std::out_of_range("P_{" + std::to_string(node_i) + "," + std::to_string(level) + "} is not a surviving variable");
  return static_cast<int>(it - variables.begin());
}

std::string SRPresentation::monomial_string(const Face& f) const {
  if (f.empty()) return "1";
  std::string out;
  for (int v : f) out += variables.at(v).name();
  return out;
}

std::string SRPresentation::to_string() const {
  if (variables.empty()) return "C";
  std::string out = "C[";
  for (std::size_t k = 0; k < variables.size(); ++k) out += (k ? ", " : "") + variables[k].name();
  out += "]";
  if (!generators.empty()) {
    out += "/(";
    for (std::size_t k = 0; k < generators.size(); ++k) out += (k ? ", " : "") + monomial_string(generators[k]);
    out += ")";
  }
  return out;
}

std::vector<int> variable_caps(const BdsPair& pair, const Weight0& lambda) {
  std::vector<int> caps(pair.rank(), 0);
  const int l0 = lambda.h0();
  for (int i = 1; i <= pair.rank(); ++i) {
    const int c = pair.comark0(i);
    if (i == pair.node()) {
      caps[i - 1] = l0 / c;
    } else if (c == 0) {
      caps[i - 1] = lambda[i];
    } else {
      caps[i - 1] = std::min(lambda[i], l0 / c);
    }
  }
  return caps;
}

SRPresentation presentation(const BdsPair& pair, const Weight0& lambda) {
  SRPresentation pres;
  pres.rank = pair.rank();
  pres.node = pair.node();
  pres.mark = pair.mark();
  pres.comarks = to_std(pair.comarks_alpha0());
  pres.marks_alpha0 = to_std(pair.marks_alpha0());
  pres.lambda = lambda;
  pres.caps = variable_caps(pair, lambda);
  for (int i = 1; i <= pres.rank; ++i)
    for (int r = 1; r <= pres.caps[i - 1]; ++r) pres.variables.push_back({i, r, pres.mark * r});

  const int l0 = lambda.h0();
  const std::vector<int> nodes = constrained_nodes(pres);
  double tuples = 1;
  for (int i : nodes) tuples *= pres.caps[i - 1] + 1;
  if (tuples > 5e6) throw std::length_error("too many level tuples to enumerate generators");

  std::vector<int> levels(pres.rank, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int sum) {
    if (pos == nodes.size()) {
      if (sum <= l0) return;
      for (int i : nodes)
        if (levels[i - 1] > 0 && sum - pres.comarks[i - 1] * levels[i - 1] > l0) return;
      Face g;
      for (int i : nodes)
        if (levels[i - 1] > 0) g.push_back(pres.index_of(i, levels[i - 1]));
      pres.generators.push_back(std::move(g));
      return;
    }
    const int i = nodes[pos];
    for (int r = 0; r <= pres.caps[i - 1]; ++r) {
      levels[i - 1] = r;
      walk(pos + 1, sum + pres.comarks[i - 1] * r);
    }
    levels[i - 1] = 0;
  };
  walk(0, 0);
  std::sort(pres.generators.begin(), pres.generators.end());

  pres.jac_zero = pres.comarks[pres.node - 1] == 1;
  int support = 0;
  for (int m : pres.marks_alpha0) support += m > 0;
  pres.two_support_nodes = support == 2;
  return pres;
}

bool face_predicate(const SRPresentation& pres, const Face& sigma) {
  std::vector<int> top(pres.rank, 0);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(pres.variables.size()))
      throw std::out_of_range("face references a non-variable");
    const auto& var = pres.variables[v];
    top[var.node - 1] = std::max(top[var.node - 1], var.level);
  }
  long sum = 0;
  for (int i = 1; i <= pres.rank; ++i) sum += static_cast<long>(pres.comarks[i - 1]) * top[i - 1];
  return sum <= pres.lambda.h0();
}

bool SimplicialComplex::pure() const {
  for (const auto& f : facets)
    if (f.size() != facets.front().size()) return false;
  return true;
}

std::size_t SimplicialComplex::max_facet_size() const {
  std::size_t m = 0;
  for (const auto& f : facets) m = std::max(m, f.size());
  return m;
}

SimplicialComplex facets(const SRPresentation& pres) {
  SimplicialComplex out;
  out.vertices = pres.variables;
  const int l0 = pres.lambda.h0();
  const std::vector<int> nodes = constrained_nodes(pres);
  std::vector<int> tops(pres.rank, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int sum) {
    if (pos == nodes.size()) {
      for (int i : nodes)
        if (tops[i - 1] < pres.caps[i - 1] && sum + pres.comarks[i - 1] <= l0) return;
      out.facets.push_back(face_from_tops(pres, tops));
      return;
    }
    const int i = nodes[pos];
    const int c = pres.comarks[i - 1];
    for (int m = 0; m <= pres.caps[i - 1] && sum + c * m <= l0; ++m) {
      tops[i - 1] = m;
      walk(pos + 1, sum + c * m);
    }
    tops[i - 1] = 0;
  };
  walk(0, 0);
  return out;
}

int krull_closed_form(const SRPresentation& pres) {
  int d = pres.lambda.h0();
  for (int i = 1; i <= pres.rank; ++i)
    if (i != pres.node && pres.marks_alpha0[i - 1] == 0) d += pres.lambda[i];
  return d;
}

int krull_dim(const SRPresentation& pres) {
  const int d = static_cast<int>(facets(pres).max_facet_size());
  if (pres.jac_zero && d != krull_closed_form(pres))
    throw std::logic_error("max facet size differs from the closed-form Krull dimension");
  return d;
}

std::vector<std::int64_t> hilbert_coefficients(const SRPresentation& pres, int degree) {
  if (degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
  const std::size_t len = degree + 1;
  const int a = pres.mark;
  const int l0 = pres.lambda.h0();

  // dp[b]: series of all constrained-node profiles with weighted top-level sum b.
  std::vector<Series> dp(l0 + 1, Series(len, 0));
  dp[0][0] = 1;
  for (int i : constrained_nodes(pres)) {
    const int c = pres.comarks[i - 1];
    std::vector<Series> next(l0 + 1, Series(len, 0));
    for (int b = 0; b <= l0; ++b) {
      if (std::all_of(dp[b].begin(), dp[b].end(), [](std::int64_t x) { return x == 0; })) continue;
      for (int m = 0; m <= pres.caps[i - 1] && b + c * m <= l0; ++m) {
        // t^{am} / (1 - t^{am}) * prod_{r<m} 1/(1 - t^{ar}); m = 0 contributes 1.
        Series term(len, 0);
        const std::size_t shift = static_cast<std::size_t>(a) * m;
        for (std::size_t k = 0; k + shift < len; ++k) term[k + shift] = dp[b][k];
        for (int r = 1; r <= m; ++r) divide_one_minus(term, a * r);
        Series& target = next[b + c * m];
        for (std::size_t k = 0; k < len; ++k) target[k] = checked_add(target[k], term[k]);
      }
    }
    dp = std::move(next);
  }

  Series total(len, 0);
  for (const auto& s : dp)
    for (std::size_t k = 0; k < len; ++k) total[k] = checked_add(total[k], s[k]);
  for (int i = 1; i <= pres.rank; ++i)
    if (!pres.constrained(i))
      for (int r = 1; r <= pres.caps[i - 1]; ++r) divide_one_minus(total, a * r);
  return total;
}

std::vector<std::int64_t> expand_closed_form(const HilbertSeries::ClosedForm& cf, int degree) {
  Series s(degree + 1, 0);
  for (std::size_t k = 0; k < cf.numerator.size() && k < s.size(); ++k) s[k] = cf.numerator[k];
  for (int d : cf.denominator_degrees) divide_one_minus(s, d);
  return s;
}

HilbertSeries hilbert_series(const SRPresentation& pres, int degree) {
  HilbertSeries h;
  h.truncation_degree = degree;
  h.coefficients = hilbert_coefficients(pres, degree);
  if (pres.jac_zero) {
    try {
      HilbertSeries::ClosedForm cf;
      int total = 0;
      for (const auto& v : pres.variables) {
        cf.denominator_degrees.push_back(v.degree);
        total += v.degree;
      }
      Series num = hilbert_coefficients(pres, total);
      for (int d : cf.denominator_degrees) multiply_one_minus(num, d);
      while (num.size() > 1 && num.back() == 0) num.pop_back();
      cf.numerator = num;
      h.closed_form = std::move(cf);
    } catch (const std::overflow_error&) {
      h.closed_form.reset();
    }
  }
  return h;
}

std::vector<Face> canonical_shelling(const SRPresentation& pres) {
  const int j = pres.node;
  if (pres.comarks[j - 1] != 1) throw std::invalid_argument("canonical shelling needs a_j^vee(alpha_0) = 1");
  std::vector<int> support;
  for (int i = 1; i <= pres.rank; ++i)
    if (pres.marks_alpha0[i - 1] > 0) support.push_back(i);
  if (support.size() != 2) throw std::invalid_argument("canonical shelling needs alpha_0 supported on exactly two nodes {s, j}");
  const int s = support[0] == j ? support[1] : support[0];

  const int l0 = pres.lambda.h0();
  const int m = std::min(l0, pres.lambda[s]);
  std::vector<Face> order;
  for (int r = 0; r <= m; ++r) {
    std::vector<int> tops(pres.rank, 0);
    tops[j - 1] = l0 - r;
    tops[s - 1] = r;
    order.push_back(face_from_tops(pres, tops));
  }

  SimplicialComplex complex = facets(pres);
  std::vector<Face> a = order, b = complex.facets;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::logic_error("canonical facet list differs from the facets of the complex");
  if (!verify_shelling(complex, order)) throw std::logic_error("canonical facet order is not a shelling");
  return order;
}

bool verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order) {
  std::vector<Face> a = order, b = complex.facets;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("order is not a permutation of the facets");
  std::vector<Face> previous;
  for (const auto& f : order) {
    if (!previous.empty() && !shelling_step_ok(previous, f)) return false;
    previous.push_back(f);
  }
  return true;
}

std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& complex, long step_limit) {
  const std::size_t n = complex.facets.size();
  if (n == 0) return std::vector<Face>{};
  std::vector<bool> used(n, false);
  std::vector<Face> order;
  long steps = 0;
  std::function<bool()> extend = [&]() {
    if (order.size() == n) return true;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      if (++steps > step_limit) return false;
      if (!order.empty() && !shelling_step_ok(order, complex.facets[k])) continue;
      used[k] = true;
      order.push_back(complex.facets[k]);
      if (extend()) return true;
      order.pop_back();
      used[k] = false;
      if (steps > step_limit) return false;
    }
    return false;
  };
  if (extend()) return order;
  return std::nullopt;
}

SRFlags flags(const SRPresentation& pres) {
  SRFlags f;
  f.jac_zero = pres.jac_zero;
  f.two_support_nodes = pres.two_support_nodes;
  f.koszul = std::all_of(pres.generators.begin(), pres.generators.end(), [](const Face& g) { return g.size() == 2; })
                 ? Koszul::yes
                 : Koszul::unknown;
  SimplicialComplex complex = facets(pres);
  f.pure = complex.pure();
  bool shelled = false;
  if (pres.jac_zero && pres.two_support_nodes) {
    canonical_shelling(pres);
    shelled = true;
    f.shelling_source = "canonical";
  } else if (find_shelling(complex)) {
    shelled = true;
    f.shelling_source = "search";
  }
  f.cohen_macaulay_certified = f.pure && shelled;
  return f;
}

std::string to_string(Koszul k) { return k == Koszul::yes ? "yes" : "unknown"; }

}  // namespace bdsweyl
