#include "coha/shuffle.hpp"

#include <numeric>
#include <unordered_map>

namespace coha {

namespace {

void check_same_K(const ShuffleElem& a, const ShuffleElem& b) {
  if (a.K != b.K) throw DimensionMismatch("shuffle elements for different K");
}

void check_dim_vector(int K, const DimVector& d) {
  if (static_cast<int>(d.size()) != K + 1)
    throw DimensionMismatch("dimension vector must have K+1 = " + std::to_string(K + 1) + " entries");
  for (int x : d) {
    if (x < 0) throw InvalidArgument("negative dimension");
    if (x > kMaxSlots) throw InvalidArgument("dimension exceeds supported slots per vertex");
  }
  if (K + 1 > kMaxVertices) throw InvalidArgument("K exceeds supported vertex count");
}

// Sparse accumulator used to sum many permuted copies of one polynomial.
class Accumulator {
 public:
  void add_permuted(const MPoly& p, const std::array<int, kMaxVars>& perm, int sign) {
    for (const auto& [m, c] : p.terms()) {
      Monomial n;
      for (int i = 0; i < kMaxVars; ++i)
        if (m.e[i] != 0) n.e[perm[i]] = m.e[i];
      auto [it, fresh] = acc_.try_emplace(n, c);
      if (fresh) {
        if (sign < 0) it->second = -it->second;
      } else if (sign < 0) {
        it->second -= c;
      } else {
        it->second += c;
      }
    }
  }

  MPoly finish() {
    std::vector<MPoly::Term> raw;
    raw.reserve(acc_.size());
    for (auto& kv : acc_)
      if (kv.second != 0) raw.emplace_back(kv.first, std::move(kv.second));
    acc_.clear();
    return MPoly::from_terms(std::move(raw));
  }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

// All size-k subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

MPoly vandermonde(int vertex, int first_slot, int count) {
  MPoly v(1);
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      v *= MPoly::x(vertex, first_slot + b) - MPoly::x(vertex, first_slot + a);
  return v;
}

}  // namespace

ShuffleElem ShuffleElem::zero(int K, DimVector dim) {
  check_dim_vector(K, dim);
  return ShuffleElem{K, std::move(dim), MPoly()};
}

ShuffleElem ShuffleElem::unit(int K) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  return ShuffleElem{K, DimVector(static_cast<std::size_t>(K + 1), 0), MPoly(1)};
}

int ShuffleElem::total_dim() const { return std::accumulate(dim.begin(), dim.end(), 0); }

std::vector<std::vector<VarId>> ShuffleElem::blocks() const {
  std::vector<std::vector<VarId>> out;
  for (int i = 0; i <= K; ++i) {
    std::vector<VarId> b;
    for (int n = 1; n <= dim[static_cast<std::size_t>(i)]; ++n) b.push_back(VarId::x(i, n));
    out.push_back(std::move(b));
  }
  return out;
}

bool ShuffleElem::is_valid() const {
  if (static_cast<int>(dim.size()) != K + 1) return false;
  for (const auto& [m, c] : poly.terms()) {
    for (int idx = kParamCount - 1; idx < kMaxVars; ++idx) {
      if (m.e[idx] == 0) continue;
      VarId v = VarId::from_index(idx);
      if (v.kind() != VarId::Kind::X) return false;
      if (v.vertex() > K || v.slot() > dim[v.vertex()]) return false;
    }
  }
  return poly.is_symmetric(blocks());
}

ShuffleElem& ShuffleElem::operator+=(const ShuffleElem& o) {
  check_same_K(*this, o);
  if (dim != o.dim) throw DimensionMismatch("adding shuffle elements of different dimension");
  poly += o.poly;
  return *this;
}

ShuffleElem& ShuffleElem::operator-=(const ShuffleElem& o) {
  check_same_K(*this, o);
  if (dim != o.dim) throw DimensionMismatch("subtracting shuffle elements of different dimension");
  poly -= o.poly;
  return *this;
}

nlohmann::json ShuffleElem::to_json() const { return {{"K", K}, {"dim", dim}, {"poly", poly.to_json()}}; }

ShuffleElem ShuffleElem::from_json(const nlohmann::json& j) {
  try {
    ShuffleElem e{j.at("K").get<int>(), j.at("dim").get<DimVector>(), MPoly::from_json(j.at("poly"))};
    check_dim_vector(e.K, e.dim);
    if (!e.is_valid()) throw InvalidArgument("shuffle element is not symmetric in its blocks");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed shuffle element JSON: ") + ex.what());
  }
}

ShuffleKernel::ShuffleKernel(int K) : K_(K), base_(Quiver::cyclic(K)) {
  const int N = K + 1;
  shifts_.assign(static_cast<std::size_t>(N * N), {});
  TripledQuiver tq = triple(base_);
  for (const auto& a : tq.quiver.arrows()) {
    MPoly c = Rational(a.w[0]) * MPoly::t1() + Rational(a.w[1]) * MPoly::t2();
    shifts_[idx(a.s, a.t)].push_back(c);
  }
}

MPoly ShuffleKernel::numerator(int i, int m, int j, int n) const {
  MPoly r(1);
  MPoly diff = MPoly::x(j, n) - MPoly::x(i, m);
  for (const auto& c : shifts(i, j)) r *= diff + c;
  return r;
}

int ShuffleKernel::sign(const DimVector& d1, const DimVector& d2) const { return sign_twist(base_, d1, d2); }

ShuffleElem shuffle_mul(const ShuffleElem& f, const ShuffleElem& g) {
  check_same_K(f, g);
  const int K = f.K;
  const int N = K + 1;
  DimVector d(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) d[i] = f.dim[i] + g.dim[i];
  check_dim_vector(K, d);

  if (f.total_dim() == 0 || g.total_dim() == 0) {
    // One shuffle and an empty kernel; g's slots shift past f's.
    std::vector<std::pair<VarId, VarId>> shift;
    for (int i = 0; i < N; ++i)
      for (int n = g.dim[i]; n >= 1; --n) shift.emplace_back(VarId::x(i, n), VarId::x(i, n + f.dim[i]));
    return ShuffleElem{K, d, f.poly * g.poly.rename(shift)};
  }

  ShuffleKernel kernel(K);

  // Identity layout: f on slots 1..d'_i, g on slots d'_i+1..d_i.
  std::vector<std::pair<VarId, VarId>> shift;
  for (int i = 0; i < N; ++i)
    for (int n = g.dim[i]; n >= 1; --n) shift.emplace_back(VarId::x(i, n), VarId::x(i, n + f.dim[i]));
  MPoly P = f.poly * g.poly.rename(shift);
  for (int i = 0; i < N; ++i) {
    P *= vandermonde(i, 1, f.dim[i]);
    P *= vandermonde(i, f.dim[i] + 1, g.dim[i]);
  }
  for (int i = 0; i < N; ++i)
    for (int m = 1; m <= f.dim[i]; ++m)
      for (int j = 0; j < N; ++j)
        for (int n = 1; n <= g.dim[j]; ++n) P *= kernel.numerator(i, m, j, f.dim[j] + n);

  // sum over shuffles of sgn(sigma) sigma(P); the result times V.
  std::vector<std::vector<std::vector<int>>> choices;
  for (int i = 0; i < N; ++i) choices.push_back(subsets(d[i], f.dim[i]));
  std::vector<std::size_t> pick(static_cast<std::size_t>(N), 0);
  Accumulator acc;
  while (true) {
    std::array<int, kMaxVars> perm;
    std::iota(perm.begin(), perm.end(), 0);
    int inversions = 0;
    for (int i = 0; i < N; ++i) {
      const auto& S = choices[i][pick[i]];
      std::vector<bool> inS(static_cast<std::size_t>(d[i] + 1), false);
      for (int s : S) inS[static_cast<std::size_t>(s)] = true;
      int a = 0, b = f.dim[i];
      for (int slot = 1; slot <= d[i]; ++slot) {
        int from = inS[static_cast<std::size_t>(slot)] ? ++a : ++b;
        perm[VarId::x(i, from).index()] = VarId::x(i, slot).index();
        if (inS[static_cast<std::size_t>(slot)]) inversions += b - f.dim[i];
      }
    }
    acc.add_permuted(P, perm, inversions % 2 == 0 ? 1 : -1);
    int i = 0;
    while (i < N && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == N) break;
  }
  MPoly numer = acc.finish();
  for (int i = 0; i < N; ++i)
    for (int m = 1; m <= d[i]; ++m)
      for (int n = m + 1; n <= d[i]; ++n) numer = numer.exact_div_linear(VarId::x(i, n), VarId::x(i, m));
  if (kernel.sign(f.dim, g.dim) < 0) numer = -numer;
  return ShuffleElem{K, d, std::move(numer)};
}

ShuffleElem shuffle_commutator(const ShuffleElem& f, const ShuffleElem& g) {
  return shuffle_mul(f, g) - shuffle_mul(g, f);
}

ShuffleElem u_act(const ShuffleElem& f, unsigned k) {
  MPoly s;
  for (int i = 0; i <= f.K; ++i)
    for (int n = 1; n <= f.dim[static_cast<std::size_t>(i)]; ++n) s += MPoly::x(i, n);
  return ShuffleElem{f.K, f.dim, f.poly * s.pow(k)};
}

ShuffleElem alpha(int K, int i, unsigned r) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  if (i < 0 || i > K) throw InvalidArgument("vertex " + std::to_string(i) + " outside 0..K");
  DimVector d(static_cast<std::size_t>(K + 1), 0);
  d[static_cast<std::size_t>(i)] = 1;
  check_dim_vector(K, d);
  return ShuffleElem{K, d, MPoly::x(i, 1).pow(r)};
}

namespace {

MPoly first_slot_sum(int K) {
  MPoly s;
  for (int i = 0; i <= K; ++i) s += MPoly::x(i, 1);
  return s;
}

}  // namespace

ShuffleElem gamma_delta(int K, unsigned r) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  DimVector d(static_cast<std::size_t>(K + 1), 1);
  check_dim_vector(K, d);
  return ShuffleElem{K, d, (MPoly::t1() + MPoly::t2()).pow(static_cast<unsigned>(K)) * first_slot_sum(K).pow(r)};
}

ShuffleElem e_delta(int K) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  DimVector d(static_cast<std::size_t>(K + 1), 1);
  check_dim_vector(K, d);
  return ShuffleElem{K, d, first_slot_sum(K)};
}

ShuffleElem one_delta(int K) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  DimVector d(static_cast<std::size_t>(K + 1), 1);
  check_dim_vector(K, d);
  return ShuffleElem{K, d, MPoly(1)};
}

YZPair yz_elements(int K) {
  if (K < 2) throw InvalidArgument("Y and Z are defined for K >= 2");
  const int N = K + 1;
  auto a = [&](int i, unsigned r) { return alpha(K, ((i % N) + N) % N, r); };
  // [a_{from}, [..., [a_{to-1}, a_{to}]]] with the given exponent override.
  auto nested = [&](int from, int to, int special, unsigned special_r) {
    ShuffleElem acc = a(to, to == special ? special_r : 0);
    for (int k = to - 1; k >= from; --k) acc = shuffle_commutator(a(k, k == special ? special_r : 0), acc);
    return acc;
  };
  YZPair out{ShuffleElem::zero(K, DimVector(static_cast<std::size_t>(N), 1)),
             ShuffleElem::zero(K, DimVector(static_cast<std::size_t>(N), 1))};
  for (int i = 0; i < N; ++i) {
    out.Y += shuffle_mul(a(i, 0), nested(i + 1, i + K, -1, 0));
    out.Z += nested(i, i + K, i + 1, 1);
  }
  return out;
}

std::vector<ShuffleElem> L_sequence(int K, int n) {
  if (n < 1) throw InvalidArgument("L_n needs n >= 1");
  std::vector<ShuffleElem> out{one_delta(K)};
  ShuffleElem e = e_delta(K);
  for (int k = 2; k <= n; ++k) out.push_back(shuffle_commutator(e, out.back()));
  return out;
}

ShuffleElem L_element(int K, int n) { return L_sequence(K, n).back(); }

}  // namespace coha
