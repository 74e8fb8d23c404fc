#include "coha/quiver.hpp"

#include <algorithm>

#include "coha/error.hpp"

namespace coha {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 0) throw InvalidArgument("negative vertex count");
  for (const auto& a : arrows_) {
    if (a.s < 0 || a.s >= n_ || a.t < 0 || a.t >= n_)
      throw InvalidArgument("arrow endpoint outside 0.." + std::to_string(n_ - 1));
    if (a.w.size() != arrows_[0].w.size()) throw InvalidArgument("arrow weights differ in length");
  }
}

Quiver Quiver::cyclic(int K) {
  if (K < 1) throw InvalidArgument("cyclic quiver needs K >= 1");
  std::vector<Arrow> arrows;
  for (int i = 0; i <= K; ++i) arrows.push_back({i, (i + 1) % (K + 1), {}});
  return Quiver(K + 1, std::move(arrows));
}

Quiver Quiver::jordan() { return Quiver(1, {{0, 0, {}}}); }

Quiver Quiver::builtin(const std::string& spec) {
  if (spec == "jordan") return jordan();
  if (spec.rfind("cyclic:", 0) == 0) {
    std::size_t pos = 0;
    int K = 0;
    try {
      K = std::stoi(spec.substr(7), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != spec.size() - 7) throw InvalidArgument("malformed quiver name '" + spec + "'");
    return cyclic(K);
  }
  throw InvalidArgument("unknown quiver '" + spec + "' (expected cyclic:K or jordan)");
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  try {
    int n = j.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      Arrow ar{a.at("s").get<int>(), a.at("t").get<int>(), {}};
      if (a.contains("w")) ar.w = a.at("w").get<std::vector<int>>();
      arrows.push_back(std::move(ar));
    }
    return Quiver(n, std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed quiver JSON: ") + e.what());
  }
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : arrows_) arrows.push_back({{"s", a.s}, {"t", a.t}, {"w", a.w}});
  return {{"vertices", n_}, {"arrows", arrows}};
}

void check_dim(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.size()) != q.vertex_count())
    throw DimensionMismatch("dimension vector has length " + std::to_string(d.size()) + ", quiver has " +
                            std::to_string(q.vertex_count()) + " vertices");
  for (int x : d)
    if (x < 0) throw InvalidArgument("dimension vector entries must be nonnegative");
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_dim(q, d);
  check_dim(q, e);
  long r = 0;
  for (int i = 0; i < q.vertex_count(); ++i) r += long(d[i]) * e[i];
  for (const auto& a : q.arrows()) r -= long(d[a.s]) * e[a.t];
  return r;
}

int sign_twist(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) % 2 == 0 ? 1 : -1;
}

TripledQuiver triple(const Quiver& q) {
  TripledQuiver t;
  const int m = static_cast<int>(q.arrows().size());
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.s, a.t, {1, 0}});
  for (const auto& a : q.arrows()) arrows.push_back({a.t, a.s, {0, 1}});
  for (int v = 0; v < q.vertex_count(); ++v) arrows.push_back({v, v, {-1, -1}});
  t.quiver = Quiver(q.vertex_count(), std::move(arrows));
  t.original_arrows = m;
  for (int a = 0; a < m; ++a) {
    const auto& ar = q.arrows()[static_cast<std::size_t>(a)];
    t.potential.push_back({+1, {t.loop(ar.s), t.star(a), a}});
    t.potential.push_back({-1, {t.loop(ar.t), a, t.star(a)}});
  }
  return t;
}

QMatrix cartan_matrix_A(int K) {
  if (K < 1) throw InvalidArgument("Cartan matrix needs K >= 1");
  QMatrix c(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K), 0));
  for (int i = 0; i < K; ++i) {
    c[i][i] = 2;
    if (i > 0) c[i][i - 1] = -1;
    if (i + 1 < K) c[i][i + 1] = -1;
  }
  return c;
}

bool cartan_inverse_identity(int K) {
  QMatrix a = matrix_inverse_Q(cartan_matrix_A(K));
  for (int k = 1; k <= K; ++k)
    for (int j = 1; j <= K; ++j)
      if (a[k - 1][j - 1] != Rational(std::min(k, j)) - frac(k * j, K + 1)) return false;
  for (int j = 1; j <= K; ++j) {
    Rational s = 0;
    for (int k = 1; k <= K; ++k) s += a[k - 1][j - 1];
    if (s != frac(j * (K + 1 - j), 2)) return false;
  }
  return true;
}

Report verify_cartan(int k_max) {
  Report rep;
  for (int K = 1; K <= k_max; ++K) {
    CheckResult c;
    c.relation = "cartan_inverse";
    c.params = {{"K", K}};
    c.pass = cartan_inverse_identity(K);
    if (!c.pass) {
      nlohmann::json inv = nlohmann::json::array();
      for (const auto& row : matrix_inverse_Q(cartan_matrix_A(K))) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(rational_to_string(x));
        inv.push_back(r);
      }
      c.residual = inv;
    }
    rep.add(std::move(c));
  }
  return rep;
}

std::vector<RealRoot> real_roots_cyclic(int K, int bound) {
  if (K < 1) throw InvalidArgument("real_roots_cyclic needs K >= 1");
  std::vector<RealRoot> out;
  const int N = K + 1;
  for (int n = 0; n * N + 1 <= bound; ++n) {
    for (int length = 1; length <= K && n * N + length <= bound; ++length) {
      for (int start = 0; start < N; ++start) {
        RealRoot r;
        r.d.assign(static_cast<std::size_t>(N), n);
        for (int k = 0; k < length; ++k) r.d[static_cast<std::size_t>((start + k) % N)] += 1;
        r.n = n;
        r.start = start;
        r.length = length;
        if (start == 0) {
          r.nij = std::array<int, 3>{n, length, 0};
        } else if (start + length > N) {
          int j = N - start;
          r.nij = std::array<int, 3>{n, length - j, j};
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

DimVector nij_vector(int K, int n, int i, int j) {
  if (i < 1 || j < 0 || i + j > K) throw InvalidArgument("(n,i,j) needs i >= 1, j >= 0, i + j <= K");
  DimVector d(static_cast<std::size_t>(K + 1), n);
  for (int k = 0; k < i; ++k) d[static_cast<std::size_t>(k)] += 1;
  for (int k = K + 1 - j; k <= K; ++k) d[static_cast<std::size_t>(k)] += 1;
  return d;
}

Rational slope_value(const SlopeData& s, const DimVector& d) {
  if (s.zeta.size() != d.size()) throw DimensionMismatch("slope data and dimension vector differ in length");
  Rational v = 0;
  for (std::size_t k = 1; k < d.size(); ++k) v += s.zeta[k] * (d[k] - d[0]);
  if (s.mu) v += Rational(d[0]) / *s.mu;
  return v;
}

std::vector<std::array<int, 3>> slope_solutions(int K, const SlopeData& s, int bound) {
  if (static_cast<int>(s.zeta.size()) != K + 1) throw DimensionMismatch("zeta must have K+1 entries");
  if (s.mu && *s.mu == 0) throw InvalidArgument("mu must be nonzero");
  Rational sum = 0;
  for (int k = 1; k <= K; ++k) {
    if (s.zeta[static_cast<std::size_t>(k)] <= 0) throw InvalidArgument("zeta_k must be positive for k >= 1");
    sum += s.zeta[static_cast<std::size_t>(k)];
  }
  Rational expected0 = (s.mu ? 1 / *s.mu : Rational(0)) - sum;
  if (s.zeta[0] != expected0)
    throw InvalidArgument("zeta_0 must equal 1/mu - (zeta_1 + ... + zeta_K) = " + rational_to_string(expected0));
  std::vector<std::array<int, 3>> out;
  for (int n = 0; n * (K + 1) + 1 <= bound; ++n)
    for (int i = 1; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) {
        if (n * (K + 1) + i + j > bound) continue;
        if (slope_value(s, nij_vector(K, n, i, j)) == 0) out.push_back({n, i, j});
      }
  return out;
}

}  // namespace coha
