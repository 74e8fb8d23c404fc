#include "coha/shuffle_verify.hpp"

#include <map>
#include <random>
#include <string>
#include <tuple>

#include "coha/error.hpp"
#include "coha/shuffle_eval.hpp"

namespace coha {

namespace {

int wrap(int i, int N) { return ((i % N) + N) % N; }

class AlphaCache {
 public:
  explicit AlphaCache(int K) : K_(K), N_(K + 1) {}

  const ShuffleElem& x(int i, int r) {
    auto key = std::make_pair(wrap(i, N_), r);
    auto it = alpha_.find(key);
    if (it == alpha_.end()) it = alpha_.emplace(key, alpha(K_, key.first, static_cast<unsigned>(r))).first;
    return it->second;
  }

  const ShuffleElem& mul(int i, int r, int j, int s) {
    auto key = std::make_tuple(wrap(i, N_), r, wrap(j, N_), s);
    auto it = prod_.find(key);
    if (it == prod_.end()) it = prod_.emplace(key, shuffle_mul(x(i, r), x(j, s))).first;
    return it->second;
  }

  ShuffleElem bracket(int i, int r, int j, int s) { return mul(i, r, j, s) - mul(j, s, i, r); }
  ShuffleElem anti(int i, int r, int j, int s) { return mul(i, r, j, s) + mul(j, s, i, r); }

 private:
  int K_, N_;
  std::map<std::pair<int, int>, ShuffleElem> alpha_;
  std::map<std::tuple<int, int, int, int>, ShuffleElem> prod_;
};

CheckResult compare(const std::string& rel, std::map<std::string, long> params, const ShuffleElem& lhs,
                    const ShuffleElem& rhs) {
  CheckResult c;
  c.relation = rel;
  c.params = std::move(params);
  MPoly diff = lhs.poly - rhs.poly;
  c.pass = lhs.dim == rhs.dim && diff.is_zero();
  if (!c.pass) c.residual = ShuffleElem{lhs.K, lhs.dim, diff}.to_json();
  return c;
}

// Shift relation between X_i and X_j:
// [X_{i,r+1}, X_{j,s}] - [X_{i,r}, X_{j,s+1}] = c_comm [X_{i,r}, X_{j,s}] + c_anti {X_{i,r}, X_{j,s}}
CheckResult shift_relation(AlphaCache& A, const std::string& rel, int i, int j, int r, int s, const MPoly& c_comm,
                           const MPoly& c_anti) {
  ShuffleElem lhs = A.bracket(i, r + 1, j, s) - A.bracket(i, r, j, s + 1);
  ShuffleElem rhs = c_comm * A.bracket(i, r, j, s) + c_anti * A.anti(i, r, j, s);
  return compare(rel, {{"i", i}, {"j", wrap(j, static_cast<int>(lhs.dim.size()))}, {"r", r}, {"s", s}}, lhs, rhs);
}

CheckResult serre(AlphaCache& A, int i, int j, int r1, int r2, int s) {
  auto inner = [&](int ra) { return A.bracket(i, ra, j, s); };
  ShuffleElem lhs = shuffle_commutator(A.x(i, r1), inner(r2)) + shuffle_commutator(A.x(i, r2), inner(r1));
  return compare("serre", {{"i", i}, {"j", j}, {"r1", r1}, {"r2", r2}, {"s", s}}, lhs,
                 ShuffleElem::zero(lhs.K, lhs.dim));
}

// Cyclic distance between vertices.
int cyc_dist(int i, int j, int N) {
  int d = wrap(i - j, N);
  return std::min(d, N - d);
}

void check_yangian_K(int K) {
  if (K < 2) throw InvalidArgument("the Yangian presentation needs K >= 2");
}

MPoly half(const MPoly& p) { return p * frac(1, 2); }

// [a_0, [a_1, ..., a_{n-1}]] for vertices from..from+n-1 with the given exponents.
ShuffleElem nested_alpha(int K, int from, const std::vector<int>& exps) {
  const int N = K + 1;
  const int n = static_cast<int>(exps.size());
  ShuffleElem acc = alpha(K, wrap(from + n - 1, N), static_cast<unsigned>(exps.back()));
  for (int k = n - 2; k >= 0; --k) acc = shuffle_commutator(alpha(K, wrap(from + k, N), static_cast<unsigned>(exps[static_cast<std::size_t>(k)])), acc);
  return acc;
}

}  // namespace

Report verify_yangian_shuffle(int K, int r_max, int s_max) {
  check_yangian_K(K);
  const int N = K + 1;
  AlphaCache A(K);
  const MPoly h1 = -MPoly::t2();
  const MPoly h2 = MPoly::t1() + MPoly::t2();
  const MPoly up = h1 + half(h2);
  Report rep;
  for (int i = 0; i < N; ++i)
    for (int r = 0; r <= r_max; ++r)
      for (int s = 0; s <= s_max; ++s) {
        rep.add(shift_relation(A, "adjacent_up", i, i + 1, r, s, up, -half(h2)));
        rep.add(shift_relation(A, "adjacent_down", i, i - 1, r, s, -up, -half(h2)));
        rep.add(shift_relation(A, "same_vertex", i, i, r, s, MPoly(), h2));
        for (int j = 0; j < N; ++j)
          if (cyc_dist(i, j, N) > 1)
            rep.add(compare("distant_commute", {{"i", i}, {"j", j}, {"r", r}, {"s", s}}, A.bracket(i, r, j, s),
                            ShuffleElem::zero(K, A.bracket(i, r, j, s).dim)));
      }
  for (int i = 0; i < N; ++i)
    for (int r1 = 0; r1 <= r_max; ++r1)
      for (int r2 = r1; r2 <= r_max; ++r2)
        for (int s = 0; s <= s_max; ++s) rep.add(serre(A, i, wrap(i + 1, N), r1, r2, s));
  return rep;
}

ShuffleElem T_power_Z(int K, int r) {
  check_yangian_K(K);
  const int N = K + 1;
  ShuffleElem out = ShuffleElem::zero(K, DimVector(static_cast<std::size_t>(N), 1));
  for (const auto& [parts, mult] : weak_compositions(r, N)) {
    std::vector<int> exps = parts;
    exps[1] += 1;
    for (int i = 0; i < N; ++i) out += MPoly(Rational(mult)) * nested_alpha(K, i, exps);
  }
  return out;
}

ShuffleElem T_power_Y(int K, int r) {
  check_yangian_K(K);
  const int N = K + 1;
  ShuffleElem out = ShuffleElem::zero(K, DimVector(static_cast<std::size_t>(N), 1));
  for (const auto& [parts, mult] : weak_compositions(r, N)) {
    std::vector<int> rest(parts.begin() + 1, parts.end());
    for (int i = 0; i < N; ++i)
      out += MPoly(Rational(mult)) *
             shuffle_mul(alpha(K, i, static_cast<unsigned>(parts[0])), nested_alpha(K, i + 1, rest));
  }
  return out;
}

Report verify_yangian_deformed(int K, int r_max, int s_max, int kappa_r_max) {
  check_yangian_K(K);
  const int N = K + 1;
  AlphaCache A(K);
  const MPoly h1 = -MPoly::t2();
  const MPoly h2 = MPoly::t1() + MPoly::t2();
  auto delta = [&](int a, int b) { return wrap(a, N) == wrap(b, N) ? 1 : 0; };
  Report rep;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int m = -delta(i + 1, j) + delta(i, j + 1);
      const int a = 2 * delta(i, j) - delta(i, j + 1) - delta(i, j - 1);
      for (int r = 0; r <= r_max; ++r)
        for (int s = 0; s <= s_max; ++s) {
          rep.add(shift_relation(A, "shift", i, j, r, s, Rational(-m) * (h1 + half(h2)), Rational(a) * half(h2)));
          if (cyc_dist(i, j, N) > 1)
            rep.add(compare("distant_commute", {{"i", i}, {"j", j}, {"r", r}, {"s", s}}, A.bracket(i, r, j, s),
                            ShuffleElem::zero(K, A.bracket(i, r, j, s).dim)));
        }
    }
  for (int i = 0; i < N; ++i)
    for (int r1 = 0; r1 <= r_max; ++r1)
      for (int r2 = r1; r2 <= r_max; ++r2)
        for (int s = 0; s <= s_max; ++s) rep.add(serre(A, i, wrap(i + 1, N), r1, r2, s));

  for (int r = 0; r <= kappa_r_max; ++r) {
    ShuffleElem lhs = (h1 * (h1 + h2)) * gamma_delta(K, static_cast<unsigned>(r));
    ShuffleElem rhs = T_power_Z(K, r) - h2 * T_power_Y(K, r);
    CheckResult c = compare("kappa", {{"r", r}}, lhs, rhs);
    if (!c.pass) {
      // Measure rhs / lhs when it is a rational multiple.
      const auto& lt = lhs.poly.terms();
      if (!lt.empty()) {
        Rational k = rhs.poly.coefficient(lt.front().first) / lt.front().second;
        if (rhs.poly == lhs.poly * k) c.note = "rhs = (" + rational_to_string(k) + ") * lhs";
      }
    }
    rep.add(c);
  }
  return rep;
}

Report verify_yzk_identity(int K) {
  YZPair yz = yz_elements(K);
  const MPoly s = MPoly::t1() + MPoly::t2();
  ShuffleElem lhs = s * yz.Y - yz.Z;
  ShuffleElem rhs{K, lhs.dim, MPoly::t1() * MPoly::t2() * s.pow(static_cast<unsigned>(K))};
  CheckResult c = compare("yzk_identity", {{"K", K}}, lhs, rhs);
  if (!c.pass && !lhs.poly.is_zero()) {
    const auto& [m, coeff] = rhs.poly.terms().front();
    Rational k = lhs.poly.coefficient(m) / coeff;
    if (lhs.poly == rhs.poly * k) c.note = "lhs = (" + rational_to_string(k) + ") * t1 t2 (t1+t2)^K";
  }
  Report rep;
  rep.add(std::move(c));
  return rep;
}

Report verify_ln_commute(int K, int max_total, const LnCommuteOptions& opts) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  Report rep;
  const int n_max = max_total - 1;
  if (n_max < 2) return rep;

  std::vector<ShuffleElem> symbolic;
  if (opts.symbolic_max_total >= 3) symbolic = L_sequence(K, std::min(n_max, opts.symbolic_max_total - 1));

  ShuffleExprEval ev(K);
  const int e = ev.leaf(e_delta(K));
  std::vector<int> L{ev.leaf(one_delta(K))};
  for (int k = 2; k <= n_max; ++k) L.push_back(ev.commutator(e, L.back()));

  std::mt19937_64 rng(opts.seed);
  for (int m = 1; m <= n_max; ++m)
    for (int n = m + 1; m + n <= max_total; ++n) {
      CheckResult c;
      c.relation = "ln_commute";
      c.params = {{"m", m}, {"n", n}};
      if (m + n <= opts.symbolic_max_total) {
        ShuffleElem b = shuffle_commutator(symbolic[static_cast<std::size_t>(m - 1)], symbolic[static_cast<std::size_t>(n - 1)]);
        c.pass = b.is_zero();
        if (!c.pass) c.residual = b.to_json();
      } else {
        const int node = ev.commutator(L[static_cast<std::size_t>(m - 1)], L[static_cast<std::size_t>(n - 1)]);
        int nonzero = 0;
        for (int p = 0; p < opts.random_points; ++p) {
          ShufflePoint pt = ShufflePoint::random(ev.dim(node), rng);
          if (ev.value(node, pt) != 0) ++nonzero;
        }
        c.pass = nonzero == 0;
        c.note = "evaluated at " + std::to_string(opts.random_points) + " random points mod 2^61-1, degree <= " +
                 std::to_string(ev.degree_bound(node)) + (c.pass ? "" : ", nonzero at " + std::to_string(nonzero));
        if (!c.pass) c.residual = nlohmann::json{{"nonzero_points", nonzero}};
      }
      rep.add(std::move(c));
    }
  return rep;
}

}  // namespace coha
