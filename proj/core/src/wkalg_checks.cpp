#include <string>
#include <vector>

#include "coha/error.hpp"
#include "coha/wkalg.hpp"

namespace coha {

namespace {

struct GridElem {
  WElem w;
  // Label parts: m, a, row, col with row = col = 0 meaning the scalar t.
  long m, a, row, col;
};

std::vector<GridElem> closure_grid(int K, int mrange, int arange) {
  std::vector<GridElem> out;
  for (int m = -mrange; m <= mrange; ++m)
    for (int a = 0; a <= arange; ++a) {
      out.push_back({WElem::t(K, m, a), m, a, 0, 0});
      for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) out.push_back({WElem::T(K, m, a, i, j), m, a, i, j});
    }
  return out;
}

}  // namespace

Report verify_wk_closure(int K, int mrange, int arange) {
  if (K < 1 || mrange < 0 || arange < 0) throw InvalidArgument("wk closure needs K >= 1 and nonnegative ranges");
  const auto grid = closure_grid(K, mrange, arange);
  Report rep;
  std::size_t checked = 0;
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t y = x + 1; y < grid.size(); ++y) {
      WElem br = w_bracket(grid[x].w, grid[y].w);
      ++checked;
      if (in_integral_form(br)) continue;
      CheckResult c;
      c.relation = "integral_closure";
      c.params = {{"m", grid[x].m}, {"a", grid[x].a}, {"i", grid[x].row}, {"j", grid[x].col},
                  {"n", grid[y].m}, {"b", grid[y].a}, {"k", grid[y].row}, {"l", grid[y].col}};
      c.pass = false;
      c.residual = br.to_json();
      rep.add(std::move(c));
    }
  // Passing pairs are summarized in one record to keep reports small.
  CheckResult s;
  s.relation = "integral_closure_grid";
  s.params = {{"K", K}, {"mrange", mrange}, {"arange", arange}, {"pairs", static_cast<long>(checked)}};
  s.pass = rep.checks.empty();
  if (!s.pass) s.note = std::to_string(rep.checks.size()) + " brackets left the integral form";
  rep.checks.insert(rep.checks.begin(), std::move(s));
  return rep;
}

Report verify_classical_limit(int K, int mrange, int arange) {
  if (K < 2 || mrange < 0 || arange < 0) throw InvalidArgument("classical limit check needs K >= 2 and nonnegative ranges");
  // Traceless test matrices: off-diagonal units and the simple coroots.
  std::vector<std::pair<QMatrix, std::pair<long, long>>> mats;
  for (int i = 1; i <= K; ++i)
    for (int j = 1; j <= K; ++j) {
      if (i == j) continue;
      QMatrix X(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K)));
      X[i - 1][j - 1] = 1;
      mats.push_back({X, {i, j}});
    }
  for (int i = 1; i < K; ++i) {
    QMatrix X(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K)));
    X[i - 1][i - 1] = 1;
    X[i][i] = -1;
    mats.push_back({X, {i, -i}});
  }

  auto record = [&](Report& rep, const char* rel, std::map<std::string, long> params, const WTildeElem& lhs,
                    const WTildeElem& rhs) {
    CheckResult c;
    c.relation = rel;
    c.params = std::move(params);
    WTildeElem diff = lhs - rhs;
    c.pass = diff.is_zero();
    if (!c.pass) c.residual = diff.to_json();
    rep.add(std::move(c));
  };

  Report rep;
  for (int m = -mrange; m <= mrange; ++m)
    for (int a = 0; a <= arange; ++a)
      for (int n = -mrange; n <= mrange; ++n)
        for (int b = 0; b <= arange; ++b) {
          const long c = static_cast<long>(n) * a - static_cast<long>(m) * b;
          const int top = a + b - 1;
          {
            WTildeElem lhs = classical_limit(w_bracket(WElem::t(K, m, a), WElem::t(K, n, b)));
            WTildeElem rhs{K, {}, {}};
            if (c != 0) rhs = WTildeElem::t(K, m + n, top, Rational(c));
            record(rep, "tt", {{"m", m}, {"a", a}, {"n", n}, {"b", b}}, lhs, rhs);
          }
          for (const auto& [X, lab] : mats) {
            WTildeElem lhs = classical_limit(w_bracket(WElem::t(K, m, a), WElem::T(K, n, b, X)));
            WTildeElem rhs{K, {}, {}};
            if (c != 0) rhs = Rational(c) * WTildeElem::T(K, m + n, top, X);
            record(rep, "tT", {{"m", m}, {"a", a}, {"n", n}, {"b", b}, {"i", lab.first}, {"j", lab.second}}, lhs, rhs);
          }
        }
  return rep;
}

}  // namespace coha
