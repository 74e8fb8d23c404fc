#include "coha/shuffle_eval.hpp"

#include <array>
#include <bit>

#include "coha/error.hpp"

namespace coha {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw InvalidArgument("inverse of zero mod p");
  return pow(a, P - 2);
}

std::uint64_t from_rational(const Rational& q) {
  auto reduce = [](const Integer& z) -> std::uint64_t { return mpz_fdiv_ui(z.get_mpz_t(), P); };
  std::uint64_t den = reduce(q.get_den());
  if (den == 0) throw InvalidArgument("denominator divisible by the modulus");
  return mul(reduce(q.get_num()), inv(den));
}

}  // namespace modp

ShufflePoint ShufflePoint::random(const DimVector& dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> u(0, modp::P - 1);
  ShufflePoint pt;
  pt.t1 = u(rng);
  pt.t2 = u(rng);
  for (int d : dim) {
    std::vector<std::uint64_t> xs;
    while (static_cast<int>(xs.size()) < d) {
      std::uint64_t v = u(rng);
      bool clash = false;
      for (auto y : xs) clash = clash || y == v;
      if (!clash) xs.push_back(v);
    }
    pt.x.push_back(std::move(xs));
  }
  return pt;
}

std::uint64_t eval_mod(const MPoly& p, const ShufflePoint& pt) {
  std::array<std::uint64_t, kMaxVars> v{};
  v[VarId::t1().index()] = pt.t1;
  v[VarId::t2().index()] = pt.t2;
  for (std::size_t i = 0; i < pt.x.size(); ++i)
    for (std::size_t n = 0; n < pt.x[i].size(); ++n)
      v[VarId::x(static_cast<int>(i), static_cast<int>(n + 1)).index()] = pt.x[i][n];
  std::uint64_t acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t t = modp::from_rational(c);
    for (int k = 0; k < kMaxVars; ++k)
      if (m.e[k]) {
        if (m.e[k] < 0) throw InvalidArgument("negative exponent in modular evaluation");
        t = modp::mul(t, modp::pow(v[k], static_cast<std::uint64_t>(m.e[k])));
      }
    acc = modp::add(acc, t);
  }
  return acc;
}

ShuffleExprEval::ShuffleExprEval(int K) : K_(K), kernel_(K) {}

int ShuffleExprEval::leaf(const ShuffleElem& e) {
  if (e.K != K_) throw DimensionMismatch("leaf for a different K");
  Node n;
  n.dim = e.dim;
  n.degree = e.poly.is_zero() ? 0 : e.poly.total_degree();
  for (const auto& [m, c] : e.poly.terms()) n.terms.emplace_back(modp::from_rational(c), m);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int ShuffleExprEval::mul(int a, int b) {
  Node n;
  n.op = Op::Mul;
  n.a = a;
  n.b = b;
  const Node& A = nodes_[static_cast<std::size_t>(a)];
  const Node& B = nodes_[static_cast<std::size_t>(b)];
  n.dim.resize(A.dim.size());
  n.degree = A.degree + B.degree;
  for (std::size_t i = 0; i < A.dim.size(); ++i) {
    n.dim[i] = A.dim[i] + B.dim[i];
    for (std::size_t j = 0; j < B.dim.size(); ++j) {
      int f = static_cast<int>(kernel_.shifts(static_cast<int>(i), static_cast<int>(j)).size());
      if (i == j) --f;
      n.degree += A.dim[i] * B.dim[j] * f;
    }
  }
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int ShuffleExprEval::commutator(int a, int b) {
  int m = mul(a, b);
  nodes_[static_cast<std::size_t>(m)].op = Op::Commutator;
  return m;
}

std::uint64_t ShuffleExprEval::value(int node, const ShufflePoint& pt) {
  const DimVector& d = dim(node);
  if (pt.x.size() != d.size()) throw DimensionMismatch("point has the wrong number of vertices");
  vertex_of_.clear();
  val_.clear();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (static_cast<int>(pt.x[i].size()) != d[i]) throw DimensionMismatch("point dimension differs from node");
    for (auto v : pt.x[i]) {
      vertex_of_.push_back(static_cast<int>(i));
      val_.push_back(v);
    }
  }
  const std::size_t n = val_.size();
  if (n > 64) throw InvalidArgument("more than 64 variables at one point");
  t1_ = pt.t1;
  t2_ = pt.t2;
  ShufflePoint params;
  params.t1 = t1_;
  params.t2 = t2_;
  pair_.assign(n * n, 1);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) {
      if (z == w) continue;
      std::uint64_t diff = modp::sub(val_[w], val_[z]);
      std::uint64_t f = 1;
      for (const auto& c : kernel_.shifts(vertex_of_[z], vertex_of_[w])) f = modp::mul(f, modp::add(diff, eval_mod(c, params)));
      if (vertex_of_[z] == vertex_of_[w]) f = modp::mul(f, modp::inv(diff));
      pair_[z * n + w] = f;
    }
  memo_.assign(nodes_.size(), {});
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return value(node, full);
}

std::uint64_t ShuffleExprEval::leaf_value(const Node& nd, std::uint64_t mask) const {
  std::array<std::uint64_t, kMaxVars> v{};
  v[VarId::t1().index()] = t1_;
  v[VarId::t2().index()] = t2_;
  std::vector<int> slot(static_cast<std::size_t>(K_ + 1), 0);
  for (std::uint64_t m = mask; m; m &= m - 1) {
    int k = std::countr_zero(m);
    int vert = vertex_of_[static_cast<std::size_t>(k)];
    v[VarId::x(vert, ++slot[static_cast<std::size_t>(vert)]).index()] = val_[static_cast<std::size_t>(k)];
  }
  std::uint64_t acc = 0;
  for (const auto& [c, mono] : nd.terms) {
    std::uint64_t t = c;
    for (int k = 0; k < kMaxVars; ++k)
      if (mono.e[k]) t = modp::mul(t, modp::pow(v[k], static_cast<std::uint64_t>(mono.e[k])));
    acc = modp::add(acc, t);
  }
  return acc;
}

std::uint64_t ShuffleExprEval::value(int node, std::uint64_t mask) {
  auto& memo = memo_[static_cast<std::size_t>(node)];
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  std::uint64_t r = 0;
  switch (nd.op) {
    case Op::Leaf:
      r = leaf_value(nd, mask);
      break;
    case Op::Mul:
      r = product(nd.a, nd.b, mask);
      break;
    case Op::Commutator:
      r = modp::sub(product(nd.a, nd.b, mask), product(nd.b, nd.a, mask));
      break;
  }
  memo.emplace(mask, r);
  return r;
}

std::uint64_t ShuffleExprEval::product(int a, int b, std::uint64_t mask) {
  const DimVector da = nodes_[static_cast<std::size_t>(a)].dim;
  const DimVector db = nodes_[static_cast<std::size_t>(b)].dim;
  const int N = K_ + 1;
  std::vector<std::vector<int>> vars(static_cast<std::size_t>(N));
  for (std::uint64_t m = mask; m; m &= m - 1) {
    int k = std::countr_zero(m);
    vars[static_cast<std::size_t>(vertex_of_[static_cast<std::size_t>(k)])].push_back(k);
  }
  // Per vertex, every da[v]-subset of that vertex's variables as a bitmask.
  std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) {
    const auto& vs = vars[static_cast<std::size_t>(v)];
    const int n = static_cast<int>(vs.size());
    const int k = da[static_cast<std::size_t>(v)];
    if (n != k + db[static_cast<std::size_t>(v)]) throw DimensionMismatch("sub-point does not match factor dimensions");
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (std::popcount(s) != k) continue;
      std::uint64_t bits = 0;
      for (int t = 0; t < n; ++t)
        if (s >> t & 1) bits |= std::uint64_t{1} << vs[static_cast<std::size_t>(t)];
      choices[static_cast<std::size_t>(v)].push_back(bits);
    }
  }
  const std::size_t n = val_.size();
  std::uint64_t total = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(N), 0);
  while (true) {
    std::uint64_t S = 0;
    for (int v = 0; v < N; ++v) S |= choices[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
    std::uint64_t T = mask & ~S;
    std::uint64_t term = modp::mul(value(a, S), value(b, T));
    if (term != 0)
      for (std::uint64_t s = S; s; s &= s - 1) {
        std::size_t z = static_cast<std::size_t>(std::countr_zero(s));
        for (std::uint64_t t = T; t; t &= t - 1) term = modp::mul(term, pair_[z * n + static_cast<std::size_t>(std::countr_zero(t))]);
      }
    total = modp::add(total, term);
    int v = 0;
    while (v < N && ++pick[static_cast<std::size_t>(v)] == choices[static_cast<std::size_t>(v)].size()) pick[static_cast<std::size_t>(v++)] = 0;
    if (v == N) break;
  }
  if (kernel_.sign(da, db) < 0) total = modp::sub(0, total);
  return total;
}

}  // namespace coha
