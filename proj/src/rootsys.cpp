#include "bdsweyl/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bdsweyl {

namespace {

constexpr int kMaxClassicalRank = 12;

IntMatrix gram_template(char letter, int n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  auto link = [&g](int a, int b, int value) {
    g(a - 1, b - 1) = value;
    g(b - 1, a - 1) = value;
  };
  switch (letter) {
    case 'A':
      g.diagonal().setConstant(12);
      for (int i = 1; i < n; ++i) link(i, i + 1, -6);
      break;
    case 'B':
      g.diagonal().setConstant(12);
      g(n - 1, n - 1) = 6;
      for (int i = 1; i < n; ++i) link(i, i + 1, -6);
      break;
    case 'C':
      g.diagonal().setConstant(6);
      g(n - 1, n - 1) = 12;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -3);
      link(n - 1, n, -6);
      break;
    case 'D':
      g.diagonal().setConstant(12);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -6);
      link(n - 2, n, -6);
      break;
    case 'E':
      g.diagonal().setConstant(12);
      link(1, 3, -6);
      link(2, 4, -6);
      for (int i = 3; i < n; ++i) link(i, i + 1, -6);
      break;
    case 'F':
      g.diagonal() << 12, 12, 6, 6;
      link(1, 2, -6);
      link(2, 3, -6);
      link(3, 4, -3);
      break;
    case 'G':
      g.diagonal() << 4, 12;
      link(1, 2, -6);
      break;
    default:
      throw std::invalid_argument("unknown type letter");
  }
  return g;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed number");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool valid_simple_type(char letter, int n) {
  switch (letter) {
    case 'A': return n >= 1 && n <= kMaxClassicalRank;
    case 'B': return n >= 2 && n <= kMaxClassicalRank;
    case 'C': return n >= 2 && n <= kMaxClassicalRank;
    case 'D': return n >= 3 && n <= kMaxClassicalRank;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::size_t classical_root_count(char letter, int n) {
  switch (letter) {
    case 'A': return static_cast<std::size_t>(n * (n + 1));
    case 'B':
    case 'C': return static_cast<std::size_t>(2 * n * n);
    case 'D': return static_cast<std::size_t>(2 * n * (n - 1));
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: throw std::invalid_argument("unknown type letter");
  }
}

RootSystem RootSystem::build(char letter, int rank) {
  if (!valid_simple_type(letter, rank)) {
    std::ostringstream msg;
    msg << "invalid simple type " << letter << rank
        << " (A>=1, B>=2, C>=2, D>=3, classical rank <= " << kMaxClassicalRank
        << ", E6-E8, F4, G2)";
    throw std::invalid_argument(msg.str());
  }
  RootSystem rs = from_gram(gram_template(letter, rank));
  rs.type_letter_ = letter;
  return rs;
}

RootSystem RootSystem::from_gram(const IntMatrix& gram6) {
  const auto n = gram6.rows();
  if (n == 0 || gram6.cols() != n) throw std::invalid_argument("Gram matrix must be square and non-empty");
  if (gram6 != gram6.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");

  RootSystem rs;
  rs.gram6_ = gram6;
  rs.cartan_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (gram6(i, i) <= 0) throw std::invalid_argument("simple roots must have positive length");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (i != k && gram6(i, k) > 0) throw std::invalid_argument("simple roots must pair non-positively");
      if ((2 * gram6(i, k)) % gram6(i, i) != 0) throw std::invalid_argument("Cartan matrix is not integral");
      rs.cartan_(i, k) = 2 * gram6(i, k) / gram6(i, i);
    }
  }

  // Dynkin components via union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (gram6(i, k) != 0) parent[find(i)] = find(k);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i + 1);
  for (auto& [root, nodes] : groups) rs.components_.push_back(nodes);
  std::sort(rs.components_.begin(), rs.components_.end());

  rs.close_roots();
  return rs;
}

void RootSystem::close_roots() {
  const int n = rank();
  // A finite root system has at most 2 * 12^2 roots per component at our rank cap;
  // the guard catches non-finite-type Gram input.
  const std::size_t guard = 4096;
  std::map<RootVec, int, LexLess> seen;
  std::deque<RootVec> queue;
  for (int i = 1; i <= n; ++i) {
    RootVec e = unit_vector(n, i);
    seen.emplace(e, 0);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      RootVec image = reflect(i, beta);
      if (seen.emplace(image, 0).second) {
        if (seen.size() > guard) throw std::invalid_argument("root closure does not terminate (not of finite type)");
        queue.push_back(std::move(image));
      }
    }
  }

  positive_.clear();
  for (const auto& [v, unused] : seen) {
    bool nonneg = (v.array() >= 0).all();
    bool nonpos = (v.array() <= 0).all();
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign coordinates");
    if (nonneg) positive_.push_back(v);
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return LexLess{}(a, b);
  });
  roots_ = positive_;
  for (const auto& v : positive_) roots_.push_back(-v);
  index_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], static_cast<int>(k));

  theta_.reset();
  if (components_.size() == 1) {
    const RootVec& top = positive_.back();
    if (positive_.size() > 1 && height(positive_[positive_.size() - 2]) == height(top))
      throw std::logic_error("highest root is not unique");
    theta_ = top;
  }
}

const RootVec& RootSystem::theta() const {
  if (!theta_) throw std::logic_error("highest root is only defined for irreducible root systems");
  return *theta_;
}

std::optional<int> RootSystem::simple_index(const RootVec& v) const {
  if (v.sum() != 1 || (v.array() < 0).any()) return std::nullopt;
  for (int i = 0; i < v.size(); ++i)
    if (v(i) == 1) return i + 1;
  return std::nullopt;
}

bool RootSystem::is_long(const RootVec& alpha) const {
  return inner6(alpha, alpha) == gram6_.diagonal().maxCoeff();
}

int RootSystem::comark(int node, const RootVec& alpha) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("node out of range");
  if (!is_root(alpha)) throw std::invalid_argument("comark requested for a vector that is not a root");
  const int scaled = alpha(node - 1) * gram6_(node - 1, node - 1);
  const int length = inner6(alpha, alpha);
  if (scaled % length != 0) throw std::logic_error("non-integral comark");
  return scaled / length;
}

RootVec RootSystem::coroot_expansion(const RootVec& alpha) const {
  RootVec out(rank());
  for (int i = 1; i <= rank(); ++i) out(i - 1) = comark(i, alpha);
  return out;
}

RootVec RootSystem::reflect(int node, const RootVec& v) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("node out of range");
  RootVec out = v;
  out(node - 1) -= pairing(v, node);
  return out;
}

RootVec RootSystem::apply_word(const WeylWord& w, RootVec v) const {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = reflect(*it, v);
  return v;
}

WeylWord RootSystem::longest_parabolic_word(std::span<const int> nodes) const {
  std::vector<bool> in_j(rank() + 1, false);
  for (int i : nodes) {
    if (i < 1 || i > rank()) throw std::invalid_argument("node out of range");
    in_j[i] = true;
  }
  // 2 rho_J lies in the root lattice; walk it to -2 rho_J one descent at a time.
  RootVec v = RootVec::Zero(rank());
  for (const auto& alpha : positive_) {
    bool supported = true;
    for (int i = 1; i <= rank(); ++i)
      if (alpha(i - 1) != 0 && !in_j[i]) supported = false;
    if (supported) v += alpha;
  }
  std::vector<int> applied;
  for (;;) {
    int next = 0;
    for (int i = 1; i <= rank() && next == 0; ++i)
      if (in_j[i] && pairing(v, i) > 0) next = i;
    if (next == 0) break;
    v = reflect(next, v);
    applied.push_back(next);
  }
  // applied = (i_1, ..., i_m) with v_final = s_{i_m} ... s_{i_1} v.
  return WeylWord{{applied.rbegin(), applied.rend()}};
}

BigInt RootSystem::weyl_dim(std::span<const int> labels) const {
  if (static_cast<int>(labels.size()) != rank()) throw std::invalid_argument("weight has wrong number of labels");
  for (int x : labels)
    if (x < 0) throw std::invalid_argument("weight is not dominant");
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& alpha : positive_) {
    long long shifted = 0;
    long long base = 0;
    for (int k = 0; k < rank(); ++k) {
      shifted += static_cast<long long>(alpha(k)) * (labels[k] + 1) * gram6_(k, k);
      base += static_cast<long long>(alpha(k)) * gram6_(k, k);
    }
    num *= shifted;
    den *= base;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return num / den;
}

bool cartan_isomorphic(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.rows());
  if (b.rows() != n || a.cols() != n || b.cols() != n) return false;
  auto signature = [n](const IntMatrix& m, int k) {
    std::vector<int> row, col;
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      row.push_back(m(k, l));
      col.push_back(m(l, k));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    row.insert(row.end(), col.begin(), col.end());
    return row;
  };
  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int k = 0; k < n; ++k) {
    sig_a[k] = signature(a, k);
    sig_b[k] = signature(b, k);
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || sig_a[k] != sig_b[c]) continue;
      bool ok = a(k, k) == b(c, c);
      for (int l = 0; l < k && ok; ++l)
        ok = a(k, l) == b(c, image[l]) && a(l, k) == b(image[l], c);
      if (!ok) continue;
      image[k] = c;
      used[c] = true;
      if (self(self, k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<SimpleType> classify_components(const RootSystem& rs) {
  std::vector<SimpleType> out;
  for (const auto& nodes : rs.components()) {
    const int m = static_cast<int>(nodes.size());
    IntMatrix sub(m, m);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) sub(p, q) = rs.cartan()(nodes[p] - 1, nodes[q] - 1);
    std::optional<SimpleType> match;
    for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
      if (!valid_simple_type(letter, m)) continue;
      if (cartan_isomorphic(sub, RootSystem::build(letter, m).cartan())) {
        match = SimpleType{letter, m};
        break;
      }
    }
    if (!match) throw std::logic_error("Dynkin component matches no simple type");
    out.push_back(*match);
  }
  return out;
}

std::string format_root(const RootVec& v, std::string_view symbol) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < v.size(); ++i) {
    int c = v(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (std::abs(c) != 1) os << std::abs(c) << '*';
    os << symbol << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace bdsweyl
