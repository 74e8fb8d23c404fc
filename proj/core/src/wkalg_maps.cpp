#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>

#include "coha/wkalg.hpp"

namespace coha {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Rational pow_int(long base, int e) {
  Integer r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return Rational(r);
}

template <class E, class Br>
E nested(const std::vector<E>& xs, Br br) {
  E acc = xs.back();
  for (auto it = xs.rbegin() + 1; it != xs.rend(); ++it) acc = br(*it, acc);
  return acc;
}

// Rational c with a = c * b, if one exists and b != 0.
std::optional<Rational> ratio(const WTildeElem& a, const WTildeElem& b) {
  if (b.is_zero()) return std::nullopt;
  Rational c;
  bool have = false;
  auto probe = [&](const Rational& x, const Rational& y) {
    if (!have && y != 0) {
      c = x / y;
      have = true;
    }
  };
  for (const auto& [k, v] : b.scalar) probe(a.scalar.count(k) ? a.scalar.at(k) : Rational(0), v);
  for (const auto& [k, v] : b.matrix) probe(a.matrix.count(k) ? a.matrix.at(k) : Rational(0), v);
  if (!have || a - c * b != WTildeElem{a.K, {}, {}}) return std::nullopt;
  return c;
}

std::optional<Rational> ratio(const WElem& a, const WElem& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [k0, v0] = *b.terms().begin();
  const HPoly& top = v0;
  const int e = top.max_exponent();
  Rational c = a.coeff(k0).coeff(e) / top.coeff(e);
  if (!(a - HPoly(c) * b).is_zero()) return std::nullopt;
  return c;
}

template <class E>
CheckResult compare(const std::string& rel, std::map<std::string, long> params, const E& lhs, const E& rhs) {
  E diff = lhs - rhs;
  CheckResult c;
  c.relation = rel;
  c.params = std::move(params);
  c.pass = diff.is_zero();
  if (!c.pass) {
    c.residual = diff.to_json();
    if (auto k = ratio(lhs, rhs)) c.note = "lhs = (" + rational_to_string(*k) + ") * rhs";
  }
  return c;
}

// scale * z^m (D + shift hbar)^r E_{row,col}
WElem shifted_power(int K, int m, const Rational& shift, int r, int row, int col, const Rational& scale) {
  WElem out(K);
  for (int k = 0; k <= r; ++k) {
    Rational c = scale * Rational(binomial(static_cast<unsigned>(r), static_cast<unsigned>(k)));
    Rational s = 1;
    for (int e = 0; e < r - k; ++e) s *= shift;
    c *= s;
    if (c != 0) out.add_term({m, k, row, col}, HPoly::monomial(r - k, c));
  }
  return out;
}

WTildeElem wt_nested(const std::vector<WTildeElem>& xs) { return nested(xs, wt_bracket); }
WElem w_nested(const std::vector<WElem>& xs) { return nested(xs, w_bracket); }

}  // namespace

// ------------------------------------------------ imaginary generator map

WTildeElem F_image(const ImGen& g, int K) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  const int N = K + 1;
  if (g.kind == ImGen::Kind::Alpha) {
    if (g.i < 0 || g.i > K) throw InvalidArgument("vertex out of range");
    if (g.i == 0) return WTildeElem::T(N, 1, 0, N, 1, -1);
    return WTildeElem::T(N, 0, 0, g.i, g.i + 1);
  }
  if (g.n < 1) throw InvalidArgument("gamma index must be positive");
  const Rational sign = g.n % 2 == 0 ? 1 : -1;
  if (g.r == 0)
    return WTildeElem::t(N, g.n, 0, sign * Rational(factorial(static_cast<unsigned>(g.n - 1))) * pow_int(N, g.n));
  if (g.r == 1) {
    WTildeElem e = WTildeElem::t(N, g.n, 1, N) - WTildeElem::T(N, g.n, 0, H_matrix(N));
    e *= sign * Rational(factorial(static_cast<unsigned>(g.n))) * pow_int(N, g.n - 1);
    return e;
  }
  throw InvalidArgument("gamma generators carry r = 0 or r = 1");
}

WTildeElem F_hat_gamma(int K, int n, int r) {
  WTildeElem e = F_image(ImGen::gamma(n, 0), K);
  for (int k = 0; k < r; ++k) e = heis_p(e);
  return e;
}

Report verify_theorem1(int K, int n_max) {
  if (K < 1 || n_max < 1) throw InvalidArgument("need K >= 1 and n_max >= 1");
  const int N = K + 1;
  Report rep;
  auto g0 = [&](int n) { return F_image(ImGen::gamma(n, 0), K); };
  auto g1 = [&](int n) { return F_image(ImGen::gamma(n, 1), K); };
  auto al = [&](int i) { return F_image(ImGen::alpha(i), K); };

  for (int n = 1; n <= n_max; ++n) {
    rep.add(compare("heis_p", {{"n", n}}, heis_p(g0(n)), g1(n)));
    // q lowers by the central charge, which is the total dimension n(K+1).
    rep.add(compare("heis_q", {{"n", n}}, heis_q(g1(n)), Rational(n * N) * g0(n)));
    rep.add(compare("imaginary_commute", {{"n", n}}, wt_bracket(g0(1), g0(n)), WTildeElem{N, {}, {}}));
    rep.add(compare("imaginary_raise", {{"n", n}}, wt_bracket(g1(1), g0(n)), g0(n + 1)));
    rep.add(compare("imaginary_raise_reversed", {{"n", n}}, wt_bracket(g1(n), g0(1)), g0(n + 1)));
    rep.add(compare("imaginary_degree_one", {{"n", n}}, wt_bracket(g1(1), g1(n)),
                    frac(n - 1, n + 1) * g1(n + 1)));
    rep.add(compare("imaginary_degree_two", {{"n", n}}, wt_bracket(F_hat_gamma(K, 1, 2), g0(n)),
                    frac(2, n + 1) * g1(n + 1)));
    for (int i = 0; i <= K; ++i)
      rep.add(compare("imaginary_real_commute", {{"n", n}, {"i", i}}, wt_bracket(g0(n), al(i)), WTildeElem{N, {}, {}}));
  }

  {
    WTildeElem expect = WTildeElem::t(N, 1, 2, -N) + Rational(2) * WTildeElem::T(N, 1, 1, H_matrix(N));
    rep.add(compare("gamma2_image", {}, F_hat_gamma(K, 1, 2), expect));
  }

  // [F(gamma^(1)), F(alpha_i)] = c_i [alpha_i, B_i] with the chain
  // alpha_i, alpha_i, ..., alpha_K, alpha_{i-1}, ..., alpha_0 (i >= 1) or
  // alpha_0, alpha_0, alpha_1, ..., alpha_K (i = 0).
  for (int i = 0; i <= K; ++i) {
    std::vector<WTildeElem> chain;
    Rational c;
    if (i == 0) {
      chain.push_back(al(0));
      for (int j = 0; j <= K; ++j) chain.push_back(al(j));
      c = frac((K + 1) % 2 == 0 ? 1 : -1, 2);
    } else {
      chain.push_back(al(i));
      for (int j = i; j <= K; ++j) chain.push_back(al(j));
      for (int j = i - 1; j >= 0; --j) chain.push_back(al(j));
      c = frac((K - i) % 2 == 0 ? 1 : -1, 2);
    }
    rep.add(compare("real_imaginary_chain", {{"i", i}}, wt_bracket(g1(1), al(i)), c * wt_nested(chain)));
  }
  return rep;
}

// ---------------------------------------------------------------- map G

WElem P_element(int K) {
  const int N = K + 1;
  QMatrix Hp(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
  QMatrix Hpp = Hp;
  // mu_i - mu_{i+1} = 1 - i/N, sum mu_i = 0
  std::vector<Rational> nu(static_cast<std::size_t>(N) + 1);
  for (int i = N - 1; i >= 1; --i)
    nu[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i) + 1] + frac(N - i, N);
  Rational mean = 0;
  for (int i = 1; i <= N; ++i) mean += nu[static_cast<std::size_t>(i)];
  mean /= N;
  for (int i = 1; i <= N; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    Hp[ii][ii] = frac(2 * K + 3 - 2 * i, 2);
    Hpp[ii][ii] = nu[static_cast<std::size_t>(i)] - mean;
  }
  WElem P = WElem::t(N, 0, 2) * HPoly(frac(N * N, 2));
  P += WElem::T(N, 0, 1, Hp) * HPoly(N);
  P += WElem::T(N, 0, 0, Hpp) * HPoly::monomial(1, N);
  return P;
}

WElem G_image(int i, int r, int K) {
  if (K < 1 || i < 0 || i > K || r < 0) throw InvalidArgument("bad G generator");
  const int N = K + 1;
  WElem e = i == 0 ? WElem::T(N, 1, 0, N, 1) : WElem::T(N, 0, 0, i, i + 1);
  const WElem P = P_element(K);
  for (int k = 0; k < r; ++k) e = w_bracket(P, e);
  return e;
}

WElem G_kappa(int r, int K) {
  const int N = K + 1;
  WElem e = WElem::t(N, 1, 0);
  const WElem P = P_element(K);
  for (int k = 0; k < r; ++k) e = w_bracket(P, e);
  return e;
}

WElem G_closed_form(int i, int r, int K) {
  const int N = K + 1;
  const Rational scale = pow_int(N, r);
  // D^r z = z (D + hbar)^r
  if (i == 0) return shifted_power(N, 1, 1, r, N, 1, scale);
  return shifted_power(N, 0, frac(N - i, N), r, i, i + 1, scale);
}

Report verify_S_relations(int K, int r_max, int s_max) {
  if (K < 2) throw InvalidArgument("the positive-degree map is stated for K >= 2");
  const int N = K + 1;
  const int top = std::max(r_max, s_max) + 1;
  std::vector<std::vector<WElem>> X(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    for (int r = 0; r <= top; ++r) X[static_cast<std::size_t>(i)].push_back(G_image(i, r, K));
  auto x = [&](int i, int r) -> const WElem& { return X[static_cast<std::size_t>(mod(i, N))][static_cast<std::size_t>(r)]; };
  const HPoly h = HPoly::hbar();
  const WElem zero(N);
  Report rep;

  for (int i = 0; i < N; ++i)
    for (int r = 0; r <= top; ++r)
      rep.add(compare("closed_form", {{"i", i}, {"r", r}}, x(i, r), G_closed_form(i, r, K)));

  for (int i = 0; i < N; ++i)
    for (int r = 0; r <= r_max; ++r)
      for (int s = 0; s <= s_max; ++s) {
        std::map<std::string, long> p{{"i", i}, {"r", r}, {"s", s}};
        rep.add(compare("adjacent_up", p, w_bracket(x(i, r + 1), x(i + 1, s)) - w_bracket(x(i, r), x(i + 1, s + 1)),
                        h * w_bracket(x(i, r), x(i + 1, s))));
        rep.add(compare("adjacent_down", p, w_bracket(x(i, r + 1), x(i - 1, s)) - w_bracket(x(i, r), x(i - 1, s + 1)),
                        -h * w_bracket(x(i, r), x(i - 1, s))));
        rep.add(compare("same_vertex", p, w_bracket(x(i, r + 1), x(i, s)) - w_bracket(x(i, r), x(i, s + 1)), zero));
        for (int j = 0; j < N; ++j) {
          const int d = mod(i - j, N);
          if (d <= 1 || d >= N - 1) continue;
          rep.add(compare("distant_commute", {{"i", i}, {"j", j}, {"r", r}, {"s", s}}, w_bracket(x(i, r), x(j, s)), zero));
        }
      }

  for (int i = 0; i < N; ++i)
    for (int r1 = 0; r1 <= r_max; ++r1)
      for (int r2 = r1; r2 <= r_max; ++r2)
        for (int s = 0; s <= s_max; ++s) {
          WElem lhs = w_bracket(x(i, r1), w_bracket(x(i, r2), x(i + 1, s))) +
                      w_bracket(x(i, r2), w_bracket(x(i, r1), x(i + 1, s)));
          rep.add(compare("serre", {{"i", i}, {"r1", r1}, {"r2", r2}, {"s", s}}, lhs, zero));
        }

  // hbar^2 K^(r) = T^r(Z), Z = sum_i [X_{i,0}, [X_{i+1,1}, [X_{i+2,0}, ...]]]
  for (int r = 0; r <= r_max; ++r) {
    WElem tz(N);
    for (int i = 0; i < N; ++i)
      for (const auto& [k, c] : weak_compositions(r, N)) {
        std::vector<WElem> fac;
        for (int j = 0; j < N; ++j) fac.push_back(x(i + j, (j == 1 ? 1 : 0) + k[static_cast<std::size_t>(j)]));
        tz += w_nested(fac) * HPoly(Rational(c));
      }
    rep.add(compare("kappa", {{"r", r}}, h * h * G_kappa(r, K), tz));
  }
  return rep;
}

// ---------------------------------------------------------------- loop model

WElem psi_image(const LoopGen& g, int n) {
  if (n < 3) throw InvalidArgument("the loop model needs n >= 3");
  if (g.i < 0 || g.i >= n || g.r < 0) throw InvalidArgument("bad loop generator");
  const Rational scale = pow_int(n, g.r);
  const int i = g.i;
  const Rational shift = frac(n - i, n);
  switch (g.kind) {
    case LoopGen::Kind::XPlus:
      if (i == 0) return shifted_power(n, 1, 1, g.r, n, 1, scale);
      return shifted_power(n, 0, shift, g.r, i, i + 1, scale);
    case LoopGen::Kind::XMinus:
      if (i == 0) return shifted_power(n, -1, 0, g.r, 1, n, scale);
      return shifted_power(n, 0, shift, g.r, i + 1, i, scale);
    case LoopGen::Kind::H:
      if (i == 0) return shifted_power(n, 0, 0, g.r, n, n, scale) - shifted_power(n, 0, 1, g.r, 1, 1, scale);
      return shifted_power(n, 0, shift, g.r, i, i, scale) - shifted_power(n, 0, shift, g.r, i + 1, i + 1, scale);
    case LoopGen::Kind::KPlus:
    case LoopGen::Kind::KMinus: {
      if (g.r != 0) throw InvalidArgument("only the degree-zero K generators have a stated image");
      if (g.kind == LoopGen::Kind::KPlus) return WElem::t(n, 1, 0);
      return -WElem::t(n, -1, 0);
    }
  }
  throw InvalidArgument("bad loop generator");
}

Report verify_loop_relations(int n, int r_max, int s_max) {
  if (n < 3) throw InvalidArgument("the loop model needs n >= 3");
  using K = LoopGen::Kind;
  std::map<std::tuple<int, int, int>, WElem> cache;
  auto img = [&](K kind, int i, int r) -> const WElem& {
    auto key = std::tuple{static_cast<int>(kind), mod(i, n), r};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, psi_image({kind, mod(i, n), r}, n)).first;
    return it->second;
  };
  auto mij = [&](int i, int j) { return (mod(i + 1, n) == mod(j, n) ? -1 : 0) + (mod(i, n) == mod(j + 1, n) ? 1 : 0); };
  auto aij = [&](int i, int j) {
    return (mod(i, n) == mod(j, n) ? 2 : 0) - (mod(i, n) == mod(j + 1, n) ? 1 : 0) - (mod(i, n) == mod(j - 1, n) ? 1 : 0);
  };
  const HPoly h = HPoly::hbar();
  const WElem zero(n);
  Report rep;

  for (int sgn : {+1, -1}) {
    const K X = sgn > 0 ? K::XPlus : K::XMinus;
    const std::string tag = sgn > 0 ? "+" : "-";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int r = 0; r <= r_max; ++r)
          for (int s = 0; s <= s_max; ++s) {
            std::map<std::string, long> p{{"i", i}, {"j", j}, {"r", r}, {"s", s}};
            const HPoly m = h * Rational(-mij(i, j));
            rep.add(compare("xx_shift" + tag, p,
                            w_bracket(img(X, i, r + 1), img(X, j, s)) - w_bracket(img(X, i, r), img(X, j, s + 1)),
                            m * w_bracket(img(X, i, r), img(X, j, s))));
            rep.add(compare("hx_shift" + tag, p,
                            w_bracket(img(K::H, i, r + 1), img(X, j, s)) - w_bracket(img(K::H, i, r), img(X, j, s + 1)),
                            m * w_bracket(img(K::H, i, r), img(X, j, s))));
            const int d = mod(i - j, n);
            if (d > 1 && d < n - 1) rep.add(compare("distant_commute" + tag, p, w_bracket(img(X, i, r), img(X, j, s)), zero));
          }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s <= s_max; ++s)
          rep.add(compare("cartan_weight" + tag, {{"i", i}, {"j", j}, {"s", s}}, w_bracket(img(K::H, i, 0), img(X, j, s)),
                          img(X, j, s) * HPoly(sgn * aij(i, j))));
    for (int i = 0; i < n; ++i)
      for (int r1 = 0; r1 <= r_max; ++r1)
        for (int r2 = r1; r2 <= r_max; ++r2)
          for (int s = 0; s <= s_max; ++s) {
            const WElem& a = img(X, i, r1);
            const WElem& b = img(X, i, r2);
            const WElem& c = img(X, i + sgn, s);
            rep.add(compare("serre" + tag, {{"i", i}, {"r1", r1}, {"r2", r2}, {"s", s}},
                            w_bracket(a, w_bracket(b, c)) + w_bracket(b, w_bracket(a, c)), zero));
          }
    // hbar^2 K^(0) = sum_i [X_{i,0}, [X_{i+1,1}, [X_{i+2,0}, ...]]]
    WElem z(n);
    for (int i = 0; i < n; ++i) {
      std::vector<WElem> fac;
      for (int j = 0; j < n; ++j) fac.push_back(img(X, i + j, j == 1 ? 1 : 0));
      z += w_nested(fac);
    }
    rep.add(compare("kappa" + tag, {}, h * h * psi_image({sgn > 0 ? K::KPlus : K::KMinus, 0, 0}, n), z));
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r <= r_max; ++r)
        for (int s = 0; s <= s_max; ++s) {
          std::map<std::string, long> p{{"i", i}, {"j", j}, {"r", r}, {"s", s}};
          rep.add(compare("x_plus_minus", p, w_bracket(img(K::XPlus, i, r), img(K::XMinus, j, s)),
                          i == j ? img(K::H, i, r + s) : zero));
          rep.add(compare("h_commute", p, w_bracket(img(K::H, i, r), img(K::H, j, s)), zero));
        }

  WElem c(n);
  for (int i = 0; i < n; ++i) c += img(K::H, i, 0);
  rep.add(compare("central_element", {}, c, zero));
  return rep;
}

// ---------------------------------------------------------------- subalgebras

bool ws_membership(const WTildeElem& e, int K) {
  if (e.K != K + 1) throw DimensionMismatch("expected (K+1) x (K+1) matrices");
  if (!e.traceless()) return false;
  for (const auto& kv : e.scalar)
    if (kv.first.first < 1) return false;
  for (const auto& kv : e.matrix)
    if (kv.first.m < 1 || kv.first.row != kv.first.col) return false;
  return true;
}

std::vector<WTildeElem> womega_basis(int K, const SlopeData& s, int bound, int a_max) {
  const int N = K + 1;
  std::vector<WTildeElem> out;
  for (const auto& nij : slope_solutions(K, s, bound)) {
    const int n = nij[0];
    const int i = nij[1];
    const int j = nij[2];
    for (int a = 0; a <= a_max; ++a) {
      if (j > 0)
        out.push_back(WTildeElem::T(N, n + 1, a, K + 2 - j, i + 1));
      else
        out.push_back(WTildeElem::T(N, n, a, 1, i + 1));
    }
  }
  return out;
}

}  // namespace coha
