#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace bdsweyl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer vector in the simple-root basis: v = sum_i v(i-1) * alpha_i.
using RootVec = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// Lexicographic order on lattice vectors, so they can key ordered containers.
struct LexLess {
  bool operator()(const RootVec& a, const RootVec& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

inline RootVec unit_vector(int rank, int node) {
  RootVec v = RootVec::Zero(rank);
  v(node - 1) = 1;
  return v;
}

inline std::vector<int> to_std(const RootVec& v) {
  return std::vector<int>(v.data(), v.data() + v.size());
}

/// Renders r as "p/q" (the denominator is always present, "3/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

BigInt binomial(int n, int k);

}  // namespace bdsweyl
