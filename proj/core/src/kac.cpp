#include "coha/kac.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "coha/error.hpp"
#include "coha/linalg.hpp"
#include "coha/prime_field.hpp"

namespace coha {

std::uint64_t kac_budget_from_env() {
  if (const char* s = std::getenv("COHA_KAC_BUDGET")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("COHA_KAC_BUDGET is not a number: ") + s);
    }
  }
  return 10'000'000;
}

namespace {

using Mat = std::vector<std::vector<std::uint32_t>>;

Mat mat_mul(const Mat& a, const Mat& b, std::uint32_t q) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, std::vector<std::uint32_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (!a[i][l]) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = static_cast<std::uint32_t>((c[i][j] + std::uint64_t(a[i][l]) * b[l][j]) % q);
    }
  return c;
}

Mat identity(int n) {
  Mat m(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

bool invertible(const Mat& m, std::uint32_t q) { return m.empty() || rank_mod_p(m, q) == m.size(); }

// Generators of GL_d: a vertex, a matrix and its inverse.
struct Gen {
  int vertex;
  Mat g, ginv;
};

std::vector<Gen> gl_generators(const DimVector& d, std::uint32_t q) {
  std::vector<Gen> gens;
  for (std::size_t v = 0; v < d.size(); ++v) {
    const int n = d[v];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Gen t{static_cast<int>(v), identity(n), identity(n)};
        t.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        t.ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q - 1;
        gens.push_back(std::move(t));
      }
    if (n > 0)
      for (std::uint32_t c = 2; c < q; ++c) {
        Gen s{static_cast<int>(v), identity(n), identity(n)};
        s.g[0][0] = c;
        s.ginv[0][0] = Fp(c, q).inverse().value();
        gens.push_back(std::move(s));
      }
  }
  return gens;
}

Integer gl_order(int n, std::uint32_t q) {
  Integer r = 1, qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) {
    Integer qi;
    mpz_ui_pow_ui(qi.get_mpz_t(), q, static_cast<unsigned long>(i));
    r *= qn - qi;
  }
  return r;
}

class Encoder {
 public:
  Encoder(const Quiver& Q, const DimVector& d, std::uint32_t q) : Q_(Q), d_(d), q_(q) {
    for (const auto& a : Q.arrows()) entries_ += static_cast<std::size_t>(d[static_cast<std::size_t>(a.t)] * d[static_cast<std::size_t>(a.s)]);
  }
  std::size_t entries() const { return entries_; }

  RepPoint decode(std::uint64_t code) const {
    RepPoint p;
    for (const auto& a : Q_.arrows()) {
      const int rows = d_[static_cast<std::size_t>(a.t)], cols = d_[static_cast<std::size_t>(a.s)];
      Mat m(static_cast<std::size_t>(rows), std::vector<std::uint32_t>(static_cast<std::size_t>(cols)));
      for (auto& row : m)
        for (auto& e : row) {
          e = static_cast<std::uint32_t>(code % q_);
          code /= q_;
        }
      p.maps.push_back(std::move(m));
    }
    return p;
  }

  std::uint64_t encode(const RepPoint& p) const {
    std::uint64_t code = 0, scale = 1;
    for (const auto& m : p.maps)
      for (const auto& row : m)
        for (auto e : row) {
          code += e * scale;
          scale *= q_;
        }
    return code;
  }

 private:
  const Quiver& Q_;
  DimVector d_;
  std::uint32_t q_;
  std::size_t entries_ = 0;
};

struct EndInfo {
  bool abs_indecomposable = false;
  Integer units;
};

// Unknowns: the entries of phi_v for every vertex, vertex-major, row-major.
EndInfo analyze_end(const Quiver& Q, const DimVector& d, const RepPoint& p, std::uint32_t q, std::uint64_t budget) {
  std::vector<std::size_t> offset(d.size() + 1, 0);
  for (std::size_t v = 0; v < d.size(); ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(d[v] * d[v]);
  const std::size_t n = offset.back();
  auto var = [&](int v, int i, int j) { return offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(i * d[static_cast<std::size_t>(v)] + j); };

  // phi_t rho_a - rho_a phi_s = 0, one row per entry.
  ModMatrix sys;
  for (std::size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    const Mat& rho = p.maps[ai];
    const int rt = d[static_cast<std::size_t>(a.t)], cs = d[static_cast<std::size_t>(a.s)];
    for (int i = 0; i < rt; ++i)
      for (int j = 0; j < cs; ++j) {
        std::vector<std::uint32_t> row(n, 0);
        for (int k = 0; k < rt; ++k) {
          auto& e = row[var(a.t, i, k)];
          e = static_cast<std::uint32_t>((e + rho[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) % q);
        }
        for (int k = 0; k < cs; ++k) {
          auto& e = row[var(a.s, k, j)];
          e = static_cast<std::uint32_t>((e + q - rho[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) % q);
        }
        sys.push_back(std::move(row));
      }
  }
  ModMatrix basis = sys.empty() ? ModMatrix{} : nullspace_mod_p(sys, n, q);
  if (sys.empty())
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::uint32_t> e(n, 0);
      e[k] = 1;
      basis.push_back(std::move(e));
    }
  const std::size_t dim = basis.size();
  double est = 1;
  for (std::size_t k = 0; k < dim; ++k) est *= q;
  if (est > static_cast<double>(budget))
    throw BudgetExceeded("endomorphism algebra too large to enumerate", est);

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= q;
  ModMatrix nonunits;
  std::uint64_t nonunit_count = 0;
  std::vector<std::uint32_t> coords(dim, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t c = idx;
    for (auto& x : coords) {
      x = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    std::vector<std::uint32_t> phi(n, 0);
    for (std::size_t k = 0; k < dim; ++k)
      if (coords[k])
        for (std::size_t u = 0; u < n; ++u) phi[u] = static_cast<std::uint32_t>((phi[u] + std::uint64_t(coords[k]) * basis[k][u]) % q);
    bool unit = true;
    for (std::size_t v = 0; v < d.size() && unit; ++v) {
      const int m = d[v];
      Mat block(static_cast<std::size_t>(m), std::vector<std::uint32_t>(static_cast<std::size_t>(m)));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = phi[var(static_cast<int>(v), i, j)];
      unit = invertible(block, q);
    }
    if (!unit) {
      ++nonunit_count;
      nonunits.push_back(coords);
    }
  }
  EndInfo info;
  info.units = Integer(std::to_string(total - nonunit_count));
  const std::size_t r = nonunits.empty() ? 0 : rank_mod_p(nonunits, q);
  std::uint64_t span = 1;
  for (std::size_t k = 0; k < r; ++k) span *= q;
  const bool local = span == nonunit_count;
  info.abs_indecomposable = local && dim == r + 1;
  return info;
}

}  // namespace

KacCount count_abs_indec_detail(const Quiver& Q, const DimVector& d, std::uint32_t q, std::uint64_t budget) {
  check_dim(Q, d);
  if (!is_prime(q)) throw InvalidArgument("q must be prime");
  KacCount out;
  if (std::accumulate(d.begin(), d.end(), 0) == 0) {
    out.burnside_ok = true;
    return out;
  }
  Encoder enc(Q, d, q);
  double est = 1;
  for (std::size_t k = 0; k < enc.entries(); ++k) est *= q;
  if (est > static_cast<double>(budget)) throw BudgetExceeded("representation space exceeds the enumeration budget", est);
  const std::uint64_t points = static_cast<std::uint64_t>(est);
  out.points = points;

  Integer group = 1;
  for (int n : d) group *= gl_order(n, q);

  const auto gens = gl_generators(d, q);
  std::vector<bool> seen(points, false);
  Integer burnside = 0;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < points; ++start) {
    if (seen[start]) continue;
    ++out.orbits;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      RepPoint p = enc.decode(queue[h]);
      for (const auto& g : gens) {
        RepPoint r = p;
        for (std::size_t ai = 0; ai < Q.arrows().size(); ++ai) {
          const auto& a = Q.arrows()[ai];
          if (a.t == g.vertex) r.maps[ai] = mat_mul(g.g, r.maps[ai], q);
          if (a.s == g.vertex) r.maps[ai] = mat_mul(r.maps[ai], g.ginv, q);
        }
        std::uint64_t c = enc.encode(r);
        if (!seen[c]) {
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
    EndInfo info = analyze_end(Q, d, enc.decode(start), q, budget);
    if (info.abs_indecomposable) ++out.abs_indecomposable;
    // |orbit| = |G| / |Aut|, Aut being the units of End.
    if (group % info.units != 0 || group / info.units != Integer(std::to_string(queue.size())))
      throw InternalError("orbit size disagrees with |GL_d| / |Aut|");
    burnside += group / info.units;
  }
  out.burnside_ok = burnside == Integer(std::to_string(points));
  return out;
}

long count_abs_indec(const Quiver& Q, const DimVector& d, std::uint32_t q, std::uint64_t budget) {
  return count_abs_indec_detail(Q, d, q, budget).abs_indecomposable;
}

KacFit kac_fit(const Quiver& Q, const DimVector& d, const std::vector<std::uint32_t>& qs, std::uint64_t budget) {
  KacFit fit;
  fit.expected_degree = static_cast<int>(1 - euler_form(Q, d, d));
  if (fit.expected_degree < 0) throw InvalidArgument("d is not a root: 1 - <d,d> < 0");
  const std::size_t need = static_cast<std::size_t>(fit.expected_degree) + 1;
  if (qs.size() < need) throw InvalidArgument("need at least " + std::to_string(need) + " primes");
  for (auto q : qs) fit.counts.push_back(count_abs_indec(Q, d, q, budget));

  // Newton form through the first `need` points, then expanded.
  std::vector<Rational> xs, coef;
  for (std::size_t k = 0; k < need; ++k) {
    xs.emplace_back(qs[k]);
    coef.emplace_back(fit.counts[k]);
  }
  for (std::size_t j = 1; j < need; ++j)
    for (std::size_t k = need - 1; k >= j; --k) coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - j]);
  std::vector<Rational> poly{coef[need - 1]};
  for (std::size_t k = need - 1; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[k];
    }
    next[0] += coef[k];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  fit.coeffs = poly;

  auto eval = [&](std::uint32_t q) {
    Rational v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * q + poly[i];
    return v;
  };
  for (std::size_t k = need; k < qs.size(); ++k) {
    fit.held_out_checked = true;
    if (eval(qs[k]) != Rational(fit.counts[k])) {
      fit.consistent = false;
      fit.problem = "count at q = " + std::to_string(qs[k]) + " disagrees with the interpolant";
      return fit;
    }
  }
  if (static_cast<int>(poly.size()) - 1 != fit.expected_degree) {
    fit.consistent = false;
    fit.problem = "interpolant degree " + std::to_string(poly.size() - 1) + " differs from 1 - <d,d> = " +
                  std::to_string(fit.expected_degree);
  }
  return fit;
}

}  // namespace coha
