#include "coha/wkalg.hpp"

#include <sstream>

namespace coha {

// ---------------------------------------------------------------- HPoly

HPoly::HPoly(const Rational& c) {
  if (c != 0) c_[0] = c;
}

HPoly HPoly::monomial(int exponent, const Rational& c) {
  HPoly h;
  if (c != 0) h.c_[exponent] = c;
  return h;
}

int HPoly::min_exponent() const {
  if (c_.empty()) throw InvalidArgument("min_exponent of zero");
  return c_.begin()->first;
}

int HPoly::max_exponent() const {
  if (c_.empty()) throw InvalidArgument("max_exponent of zero");
  return c_.rbegin()->first;
}

Rational HPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? Rational(0) : it->second;
}

HPoly HPoly::operator-() const {
  HPoly r = *this;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly& HPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& kv : c_) kv.second *= s;
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r += HPoly::monomial(ea + eb, ca * cb);
  return r;
}

HPoly HPoly::pow(unsigned n) const {
  HPoly r(1);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

MPoly HPoly::to_mpoly() const {
  MPoly r = MPoly(0).with_laurent(true);
  for (const auto& [e, c] : c_) {
    Monomial m;
    m.e[static_cast<std::size_t>(VarId::hbar().index())] = static_cast<std::int8_t>(e);
    r += MPoly::monomial(m, c, true);
  }
  return r;
}

HPoly HPoly::from_mpoly(const MPoly& p) {
  HPoly r;
  const int h = VarId::hbar().index();
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != h && m.e[static_cast<std::size_t>(i)] != 0)
        throw InvalidArgument("W coefficient may only involve hbar");
    r += monomial(m.e[static_cast<std::size_t>(h)], c);
  }
  return r;
}

std::string HPoly::to_string() const { return to_mpoly().to_string(); }

// ---------------------------------------------------------------- WElem

namespace {

void check_index(int K, int row, int col) {
  if (K < 1) throw InvalidArgument("matrix size must be positive");
  if (row < 1 || row > K || col < 1 || col > K) throw InvalidArgument("matrix index out of range");
}

void check_same(int a, int b) {
  if (a != b) throw DimensionMismatch("W elements for different matrix sizes");
}

}  // namespace

WElem WElem::T(int K, int m, int a, int row, int col, const HPoly& c) {
  check_index(K, row, col);
  if (a < 0) throw InvalidArgument("negative D power");
  WElem e(K);
  e.add_term({m, a, row, col}, c);
  return e;
}

WElem WElem::T(int K, int m, int a, const QMatrix& X) {
  if (static_cast<int>(X.size()) != K) throw DimensionMismatch("matrix size mismatch");
  WElem e(K);
  for (int i = 0; i < K; ++i) {
    if (static_cast<int>(X[static_cast<std::size_t>(i)].size()) != K) throw DimensionMismatch("matrix not square");
    for (int j = 0; j < K; ++j) {
      const Rational& c = X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0) e.add_term({m, a, i + 1, j + 1}, HPoly(c));
    }
  }
  return e;
}

WElem WElem::t(int K, int m, int a) {
  WElem e(K);
  for (int i = 1; i <= K; ++i) e.add_term({m, a, i, i}, HPoly::hbar(-1));
  return e;
}

void WElem::add_term(const WKey& k, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HPoly WElem::coeff(const WKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? HPoly() : it->second;
}

WElem WElem::operator-() const {
  WElem r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

WElem& WElem::operator+=(const WElem& o) {
  check_same(K_, o.K_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WElem& WElem::operator-=(const WElem& o) { return *this += -o; }

WElem& WElem::operator*=(const HPoly& c) {
  std::map<WKey, HPoly> out;
  for (auto& [k, v] : terms_) {
    HPoly p = v * c;
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

nlohmann::json WElem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    arr.push_back({{"m", k.m}, {"a", k.a}, {"row", k.row}, {"col", k.col}, {"coeff", c.to_mpoly().to_json()}});
  return arr;
}

WElem WElem::from_json(int K, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("W element JSON must be an array");
  WElem e(K);
  for (const auto& t : j) {
    WKey k{t.at("m").get<int>(), t.at("a").get<int>(), t.at("row").get<int>(), t.at("col").get<int>()};
    check_index(K, k.row, k.col);
    if (k.a < 0) throw InvalidArgument("negative D power");
    e.add_term(k, HPoly::from_mpoly(MPoly::from_json(t.at("coeff"))));
  }
  return e;
}

std::string WElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*z^" << k.m << "*D^" << k.a << "*E" << k.row << "," << k.col;
  }
  return os.str();
}

WElem w_mul(const WElem& a, const WElem& b) {
  check_same(a.K(), b.K());
  WElem out(a.K());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.col != kb.row) continue;
      // z^m D^a z^n D^b = z^{m+n} (D + n hbar)^a D^b
      const HPoly c = ca * cb;
      for (int k = 0; k <= ka.a; ++k) {
        Rational coef(binomial(static_cast<unsigned>(ka.a), static_cast<unsigned>(k)));
        Integer np = 1;
        for (int e = 0; e < ka.a - k; ++e) np *= kb.m;
        coef *= Rational(np);
        if (coef == 0) continue;
        out.add_term({ka.m + kb.m, k + kb.a, ka.row, kb.col}, c * HPoly::monomial(ka.a - k, coef));
      }
    }
  }
  return out;
}

WElem w_bracket(const WElem& a, const WElem& b) { return w_mul(a, b) - w_mul(b, a); }

WElem normal_order(int K, const std::vector<WLetter>& word) {
  WElem acc = WElem::T(K, 0, 0, identity_matrix(static_cast<std::size_t>(K)));
  for (const auto& l : word) {
    WElem g(K);
    switch (l.kind) {
      case WLetterKind::Z: g = WElem::T(K, 1, 0, identity_matrix(static_cast<std::size_t>(K))); break;
      case WLetterKind::ZInv: g = WElem::T(K, -1, 0, identity_matrix(static_cast<std::size_t>(K))); break;
      case WLetterKind::D: g = WElem::T(K, 0, 1, identity_matrix(static_cast<std::size_t>(K))); break;
      case WLetterKind::Mat: g = WElem::T(K, 0, 0, l.row, l.col); break;
    }
    acc = w_mul(acc, g);
  }
  return acc;
}

namespace {

// Slices of e by (m, a), as K x K matrices of HPoly.
using Slice = std::vector<std::vector<HPoly>>;

std::map<std::pair<int, int>, Slice> slices(const WElem& e) {
  std::map<std::pair<int, int>, Slice> out;
  const auto K = static_cast<std::size_t>(e.K());
  for (const auto& [k, c] : e.terms()) {
    auto [it, fresh] = out.try_emplace({k.m, k.a}, Slice(K, std::vector<HPoly>(K)));
    it->second[static_cast<std::size_t>(k.row - 1)][static_cast<std::size_t>(k.col - 1)] = c;
  }
  return out;
}

HPoly scalar_part(const Slice& s) {
  HPoly tr;
  for (std::size_t i = 0; i < s.size(); ++i) tr += s[i][i];
  return tr * Rational(1, static_cast<long>(s.size()));
}

}  // namespace

bool in_integral_form(const WElem& e) {
  for (const auto& [mk, s] : slices(e)) {
    const HPoly sc = scalar_part(s);
    if (!sc.is_zero() && sc.min_exponent() < -1) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        HPoly tl = i == j ? s[i][j] - sc : s[i][j];
        if (!tl.is_zero() && tl.min_exponent() < 0) return false;
      }
  }
  return true;
}

bool in_positive_half(const WElem& e) {
  if (!in_integral_form(e)) throw InvalidArgument("element is not in integral form");
  for (const auto& [mk, s] : slices(e)) {
    const int m = mk.first;
    if (m >= 1) continue;
    if (m < 0) return false;
    if (!scalar_part(s).is_zero()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!s[i][j].is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- WTildeElem

WTildeElem WTildeElem::t(int K, int m, int a, const Rational& c) {
  WTildeElem e;
  e.K = K;
  if (c != 0) e.scalar[{m, a}] = c;
  return e;
}

WTildeElem WTildeElem::T(int K, int m, int a, int row, int col, const Rational& c) {
  check_index(K, row, col);
  WTildeElem e;
  e.K = K;
  if (c != 0) e.matrix[{m, a, row, col}] = c;
  return e;
}

WTildeElem WTildeElem::T(int K, int m, int a, const QMatrix& X) {
  if (static_cast<int>(X.size()) != K) throw DimensionMismatch("matrix size mismatch");
  WTildeElem e;
  e.K = K;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      const Rational& c = X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0) e.matrix[{m, a, i + 1, j + 1}] = c;
    }
  if (!e.traceless()) throw InvalidArgument("matrix part must be traceless");
  return e;
}

bool WTildeElem::traceless() const {
  std::map<std::pair<int, int>, Rational> tr;
  for (const auto& [k, c] : matrix)
    if (k.row == k.col) tr[{k.m, k.a}] += c;
  for (const auto& kv : tr)
    if (kv.second != 0) return false;
  return true;
}

namespace {

template <class Map, class Key>
void add_into(Map& m, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

WTildeElem& WTildeElem::operator+=(const WTildeElem& o) {
  check_same(K, o.K);
  for (const auto& [k, c] : o.scalar) add_into(scalar, k, c);
  for (const auto& [k, c] : o.matrix) add_into(matrix, k, c);
  return *this;
}

WTildeElem& WTildeElem::operator-=(const WTildeElem& o) {
  WTildeElem n = o;
  n *= -1;
  return *this += n;
}

WTildeElem& WTildeElem::operator*=(const Rational& c) {
  if (c == 0) {
    scalar.clear();
    matrix.clear();
    return *this;
  }
  for (auto& kv : scalar) kv.second *= c;
  for (auto& kv : matrix) kv.second *= c;
  return *this;
}

nlohmann::json WTildeElem::to_json() const {
  nlohmann::json j;
  j["K"] = K;
  j["scalar"] = nlohmann::json::array();
  for (const auto& [k, c] : scalar)
    j["scalar"].push_back({{"m", k.first}, {"a", k.second}, {"coeff", rational_to_string(c)}});
  j["matrix"] = nlohmann::json::array();
  for (const auto& [k, c] : matrix)
    j["matrix"].push_back({{"m", k.m}, {"a", k.a}, {"row", k.row}, {"col", k.col}, {"coeff", rational_to_string(c)}});
  return j;
}

std::string WTildeElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : scalar) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c) << "*t" << k.first << "," << k.second;
  }
  for (const auto& [k, c] : matrix) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c) << "*T" << k.m << "," << k.a << "(E" << k.row << "," << k.col << ")";
  }
  return os.str();
}

WTildeElem classical_limit(const WElem& e) {
  if (!in_integral_form(e)) throw InvalidArgument("element is not in integral form");
  WTildeElem out;
  out.K = e.K();
  for (const auto& [mk, s] : slices(e)) {
    const HPoly sc = scalar_part(s);
    add_into(out.scalar, mk, sc.coeff(-1));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        HPoly tl = i == j ? s[i][j] - sc : s[i][j];
        add_into(out.matrix, WKey{mk.first, mk.second, static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                 tl.coeff(0));
      }
  }
  return out;
}

WElem lift(const WTildeElem& e) {
  WElem out(e.K);
  for (const auto& [k, c] : e.scalar)
    for (int i = 1; i <= e.K; ++i) out.add_term({k.first, k.second, i, i}, HPoly::monomial(-1, c));
  for (const auto& [k, c] : e.matrix) out.add_term(k, HPoly(c));
  return out;
}

WTildeElem wt_bracket(const WTildeElem& a, const WTildeElem& b) {
  check_same(a.K, b.K);
  WTildeElem out;
  out.K = a.K;
  // [t_{m,a}, t_{n,b}] = (na - mb) t_{m+n, a+b-1}
  for (const auto& [ka, ca] : a.scalar)
    for (const auto& [kb, cb] : b.scalar) {
      const long f = static_cast<long>(kb.first) * ka.second - static_cast<long>(ka.first) * kb.second;
      if (f != 0) add_into(out.scalar, std::pair{ka.first + kb.first, ka.second + kb.second - 1}, ca * cb * f);
    }
  // [t_{m,a}, T_{n,b}(X)] = (na - mb) T_{m+n, a+b-1}(X), and the mirrored case.
  auto mixed = [&](const auto& sc, const auto& mat, int sign) {
    for (const auto& [ks, cs] : sc)
      for (const auto& [km, cm] : mat) {
        const long f = static_cast<long>(km.m) * ks.second - static_cast<long>(ks.first) * km.a;
        if (f != 0)
          add_into(out.matrix, WKey{ks.first + km.m, ks.second + km.a - 1, km.row, km.col}, cs * cm * (f * sign));
      }
  };
  mixed(a.scalar, b.matrix, 1);
  mixed(b.scalar, a.matrix, -1);
  // [T_{m,a}(X), T_{n,b}(Y)] = T_{m+n, a+b}([X, Y])
  for (const auto& [ka, ca] : a.matrix)
    for (const auto& [kb, cb] : b.matrix) {
      const int m = ka.m + kb.m;
      const int d = ka.a + kb.a;
      if (ka.col == kb.row) add_into(out.matrix, WKey{m, d, ka.row, kb.col}, ca * cb);
      if (kb.col == ka.row) add_into(out.matrix, WKey{m, d, kb.row, ka.col}, -(ca * cb));
    }
  return out;
}

bool in_positive_half(const WTildeElem& e) {
  for (const auto& kv : e.scalar)
    if (kv.first.first < 1) return false;
  for (const auto& kv : e.matrix) {
    const WKey& k = kv.first;
    if (k.m >= 1) continue;
    if (k.m < 0 || k.row >= k.col) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Heis

QMatrix H_matrix(int K) {
  QMatrix h(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K)));
  for (int i = 1; i <= K; ++i)
    h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = frac(2 * i - 1 - K, 2);
  return h;
}

WElem heis_p(const WElem& e) {
  const int K = e.K();
  WElem P = WElem::t(K, 0, 2) * HPoly(frac(1, 2)) - WElem::T(K, 0, 1, H_matrix(K)) * HPoly(frac(1, K));
  return w_bracket(P, e);
}

WElem heis_q(const WElem& e) {
  WElem out(e.K());
  for (const auto& [k, c] : e.terms())
    if (k.a > 0) out.add_term({k.m, k.a - 1, k.row, k.col}, c * Rational(static_cast<long>(k.a) * e.K()));
  return out;
}

WTildeElem heis_p(const WTildeElem& e) {
  const int K = e.K;
  WTildeElem P = WTildeElem::t(K, 0, 2, frac(1, 2)) - frac(1, K) * WTildeElem::T(K, 0, 1, H_matrix(K));
  return wt_bracket(P, e);
}

WTildeElem heis_q(const WTildeElem& e) {
  WTildeElem out;
  out.K = e.K;
  for (const auto& [k, c] : e.scalar)
    if (k.second > 0) add_into(out.scalar, std::pair{k.first, k.second - 1}, c * (static_cast<long>(k.second) * e.K));
  for (const auto& [k, c] : e.matrix)
    if (k.a > 0) add_into(out.matrix, WKey{k.m, k.a - 1, k.row, k.col}, c * (static_cast<long>(k.a) * e.K));
  return out;
}

}  // namespace coha
