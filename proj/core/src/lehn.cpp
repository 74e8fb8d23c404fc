#include "coha/lehn.hpp"

#include <optional>
#include <sstream>

#include "coha/error.hpp"
#include "coha/wkalg.hpp"

namespace coha {

int CohClass::product(int a, int b) {
  if (a == unit) return b;
  if (b == unit) return a;
  return -1;
}

std::string CohClass::name(int basis) { return basis == unit ? "unit" : "r" + std::to_string(basis - 1); }

LehnElem LehnElem::p(int K, int n, int a, int basis, const Rational& c) {
  LehnElem e(K);
  e.add_term({n, a, basis}, c);
  return e;
}

void LehnElem::add_term(const LehnKey& k, const Rational& c) {
  const auto& [n, a, basis] = k;
  if (n < 1) throw InvalidArgument("only raising operators (n >= 1) are modeled");
  if (a < 0) throw InvalidArgument("negative Lehn degree");
  if (basis < 0 || basis > K_ + 1) throw InvalidArgument("cohomology basis index out of range");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LehnElem::coeff(const LehnKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

LehnElem& LehnElem::operator+=(const LehnElem& o) {
  if (o.K_ != K_) throw DimensionMismatch("Lehn elements for different K");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LehnElem& LehnElem::operator-=(const LehnElem& o) {
  if (o.K_ != K_) throw DimensionMismatch("Lehn elements for different K");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LehnElem& LehnElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

nlohmann::json LehnElem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    const auto& [n, a, basis] = k;
    arr.push_back({{"n", n}, {"a", a}, {"class", CohClass::name(basis)}, {"coeff", rational_to_string(c)}});
  }
  return arr;
}

std::string LehnElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto& [n, a, basis] = k;
    os << (first ? "" : " + ") << rational_to_string(c) << "*p_" << n << "^" << a << "(" << CohClass::name(basis) << ")";
    first = false;
  }
  return os.str();
}

namespace {

Rational ipow(long b, int e) {
  Rational r = 1;
  if (e >= 0) {
    for (int k = 0; k < e; ++k) r *= b;
  } else {
    for (int k = 0; k < -e; ++k) r /= b;
  }
  return r;
}

}  // namespace

LehnElem lehn_bracket(const LehnElem& x, const LehnElem& y) {
  if (x.K() != y.K()) throw DimensionMismatch("Lehn elements for different K");
  LehnElem out(x.K());
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) {
      const auto& [n1, a1, b1] = k1;
      const auto& [n2, a2, b2] = k2;
      const int cls = CohClass::product(b1, b2);
      if (cls < 0) continue;
      const long lin = static_cast<long>(a2) * n1 - static_cast<long>(n2) * a1;
      if (lin == 0) continue;
      const int a = a1 + a2 - 1;
      if (a < 0) throw InternalError("Lehn bracket reached a negative degree with nonzero coefficient");
      Rational c = ipow(n1, a1) * ipow(n2, a2) * Rational(lin) * ipow(n1 + n2, -a) * c1 * c2;
      out.add_term({n1 + n2, a, cls}, c);
    }
  return out;
}

LehnElem gamma_op(int K, int m, int n) {
  if (K < 1) throw InvalidArgument("K must be at least 1");
  if (m < 1) throw InvalidArgument("gamma_op needs m >= 1");
  if (n < 0) throw InvalidArgument("gamma_op needs n >= 0");
  LehnElem e = LehnElem::p(K, m, n, CohClass::unit, K + 1);
  if (n >= 1)
    for (int i = 0; i <= K; ++i) e.add_term({m, n - 1, CohClass::r(i)}, Rational(m) * n);
  return e;
}

Rational gamma_scale(int K, int m) {
  if (m < 1) throw InvalidArgument("gamma_scale needs m >= 1");
  Rational c = 1;
  for (int k = 1; k < m; ++k) c *= Rational(-k * (K + 1));
  return c;
}

namespace {

std::optional<Rational> ratio(const LehnElem& a, const LehnElem& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [k, v] = *b.terms().begin();
  Rational c = a.coeff(k) / v;
  if (!(a - c * b).is_zero()) return std::nullopt;
  return c;
}

std::optional<Rational> ratio(const WTildeElem& a, const WTildeElem& b) {
  if (b.is_zero()) return std::nullopt;
  Rational c;
  if (!b.scalar.empty()) {
    const auto& [k, v] = *b.scalar.begin();
    c = (a.scalar.count(k) ? a.scalar.at(k) : Rational(0)) / v;
  } else {
    const auto& [k, v] = *b.matrix.begin();
    c = (a.matrix.count(k) ? a.matrix.at(k) : Rational(0)) / v;
  }
  if (!(a - c * b).is_zero()) return std::nullopt;
  return c;
}

std::string show(const std::optional<Rational>& r) { return r ? rational_to_string(*r) : "none"; }

}  // namespace

Report verify_lehn_recursion(int K, int m_max) {
  Report rep;
  const LehnElem g1 = gamma_op(K, 1, 1);
  LehnElem acc = gamma_op(K, 1, 0);
  for (int m = 1; m < m_max; ++m) {
    // One ad step against the closed form, and the accumulated recursion.
    CheckResult step;
    step.relation = "ad_step";
    step.params = {{"K", K}, {"m", m}};
    LehnElem lhs = lehn_bracket(g1, gamma_op(K, m, 0));
    LehnElem rhs = Rational(-m * (K + 1)) * gamma_op(K, m + 1, 0);
    step.pass = lhs == rhs;
    if (!step.pass) step.residual = (lhs - rhs).to_json();
    rep.add(std::move(step));

    acc = lehn_bracket(g1, acc);
    CheckResult rec;
    rec.relation = "ad_recursion";
    rec.params = {{"K", K}, {"m", m + 1}};
    LehnElem expect = gamma_scale(K, m + 1) * gamma_op(K, m + 1, 0);
    rec.pass = acc == expect;
    if (!rec.pass) rec.residual = (acc - expect).to_json();
    rep.add(std::move(rec));
  }
  return rep;
}

Report cross_check_wkalg(int K, int n_max) {
  if (n_max < 2) throw InvalidArgument("cross_check_wkalg needs n_max >= 2");
  Report rep;
  auto L = [&](int m, int a) { return gamma_scale(K, m) * gamma_op(K, m, a); };
  auto W = [&](int m, int a) { return F_image(ImGen::gamma(m, a), K); };
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int m = 1; m < n_max; ++m)
        for (int n = 1; m + n <= n_max; ++n) {
          CheckResult c;
          c.relation = "structure_constant";
          c.params = {{"a", a}, {"b", b}, {"m", m}, {"n", n}};
          LehnElem lb = lehn_bracket(L(m, a), L(n, b));
          WTildeElem wb = wt_bracket(W(m, a), W(n, b));
          const int d = a + b - 1;
          if (d < 0) {
            c.pass = lb.is_zero() && wb.is_zero();
            if (!c.pass) c.residual = nlohmann::json{{"lehn", lb.to_json()}, {"w", wb.to_json()}};
          } else {
            auto rl = ratio(lb, L(m + n, d));
            auto rw = ratio(wb, W(m + n, d));
            c.pass = rl && rw && *rl == *rw;
            if (!c.pass) c.residual = nlohmann::json{{"lehn_ratio", show(rl)}, {"w_ratio", show(rw)}};
            else c.note = "ratio " + rational_to_string(*rl);
          }
          rep.add(std::move(c));
        }
  return rep;
}

}  // namespace coha
