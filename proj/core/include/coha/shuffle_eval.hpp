#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "coha/shuffle.hpp"

namespace coha {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace modp {
inline constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= P ? s - P : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & P);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return add(lo, hi);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);  // a != 0
std::uint64_t from_rational(const Rational& q);
}  // namespace modp

// A point of the variety of a fixed dimension vector: values of t1, t2 and of
// x(i, 1..dim[i]) in F_P.
struct ShufflePoint {
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::vector<std::vector<std::uint64_t>> x;

  // Uniform values; entries within a vertex are pairwise distinct.
  static ShufflePoint random(const DimVector& dim, std::mt19937_64& rng);
};

std::uint64_t eval_mod(const MPoly& p, const ShufflePoint& pt);

// Evaluates shuffle-algebra expressions at a point without expanding them.
// A product at a point is the sum over subset choices of
// f(chosen) g(rest) kernel(chosen; rest), so nested brackets cost a sum over
// sub-points, memoized per node.
class ShuffleExprEval {
 public:
  explicit ShuffleExprEval(int K);

  int leaf(const ShuffleElem& e);
  int mul(int a, int b);
  int commutator(int a, int b);

  const DimVector& dim(int node) const { return nodes_[static_cast<std::size_t>(node)].dim; }
  // Upper bound on the total degree of the node as a polynomial.
  int degree_bound(int node) const { return nodes_[static_cast<std::size_t>(node)].degree; }

  std::uint64_t value(int node, const ShufflePoint& pt);

 private:
  enum class Op { Leaf, Mul, Commutator };
  struct Node {
    Op op = Op::Leaf;
    int a = -1;
    int b = -1;
    DimVector dim;
    int degree = 0;
    std::vector<std::pair<std::uint64_t, Monomial>> terms;  // leaves only
  };

  std::uint64_t value(int node, std::uint64_t mask);
  std::uint64_t product(int a, int b, std::uint64_t mask);
  std::uint64_t leaf_value(const Node& n, std::uint64_t mask) const;

  int K_;
  ShuffleKernel kernel_;
  std::vector<Node> nodes_;

  // Per-point state.
  std::vector<int> vertex_of_;
  std::vector<std::uint64_t> val_;
  std::vector<std::uint64_t> pair_;  // kernel factor for (z, w) = (var i, var j)
  std::uint64_t t1_ = 0, t2_ = 0;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo_;
};

}  // namespace coha
