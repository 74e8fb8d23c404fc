#include "coha/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace coha {

namespace {

constexpr int kHbar = 2;

void check_exponents(const Monomial& m, bool laurent) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (m.e[i] < 0 && !(i == kHbar && laurent))
      throw InvalidArgument("negative exponent on " + VarId::from_index(i).name() +
                            (i == kHbar ? " without the Laurent flag" : ""));
  }
}

std::string display_name(int index) {
  VarId v = VarId::from_index(index);
  if (v.kind() == VarId::Kind::X)
    return "x(" + std::to_string(v.vertex()) + "," + std::to_string(v.slot()) + ")";
  return v.name();
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  bool overflow = false;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = int(e[i]) + int(o.e[i]);
    overflow |= (s > 127 || s < -128);
    r.e[i] = static_cast<std::int8_t>(s);
  }
  if (overflow) throw Error("monomial exponent overflow (limit 127)");
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t w[kMaxVars / 8];
  std::memcpy(w, m.e.data(), kMaxVars);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

NonExactDivision::NonExactDivision(const MPoly& remainder)
    : Error("non-exact division, remainder " + remainder.to_string()),
      remainder_(std::make_shared<MPoly>(remainder)) {}

const MPoly& NonExactDivision::remainder() const { return *remainder_; }

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(VarId v, int exponent) {
  Monomial m;
  m.e[v.index()] = static_cast<std::int8_t>(exponent);
  return monomial(m, 1, exponent < 0);
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c, bool laurent) {
  check_exponents(m, laurent);
  MPoly p;
  p.laurent_ = laurent;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms, bool laurent) {
  MPoly p;
  p.laurent_ = laurent;
  for (const auto& t : terms) check_exponents(t.first, laurent);
  p.normalize(std::move(terms));
  return p;
}

void MPoly::normalize(std::vector<Term>&& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  terms_.clear();
  terms_.reserve(raw.size());
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
}

MPoly MPoly::with_laurent(bool on) const {
  MPoly p = *this;
  if (!on) {
    for (const auto& t : terms_) check_exponents(t.first, false);
  }
  p.laurent_ = on;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
    return grlex_greater(t.first, k);
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

int MPoly::degree_in(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.first.e[v.index()];
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int MPoly::min_degree_in(VarId v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.first.e[v.index()];
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

bool MPoly::involves(VarId v) const {
  for (const auto& t : terms_)
    if (t.first.e[v.index()] != 0) return true;
  return false;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) {
    laurent_ |= o.laurent_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && grlex_greater(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || grlex_greater(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  laurent_ |= o.laurent_;
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.laurent_ = a.laurent_ || b.laurent_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a monomial preserves the order of the other factor.
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    r.terms_.reserve(many.size());
    for (const auto& t : many) r.terms_.emplace_back(t.first * single.first, t.second * single.second);
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 22));
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.second.get_mpq_t(), y.second.get_mpq_t());
      auto [it, fresh] = acc.try_emplace(x.first * y.first, prod);
      if (!fresh) it->second += prod;
    }
  }
  std::vector<MPoly::Term> raw;
  raw.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) raw.emplace_back(kv.first, std::move(kv.second));
  r.normalize(std::move(raw));
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1);
  result.laurent_ = laurent_;
  MPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

MPoly MPoly::substitute(const Substitution& map) const {
  if (map.empty()) return *this;
  std::vector<int> mapped;
  for (const auto& kv : map) mapped.push_back(kv.first.index());

  std::map<std::pair<int, int>, MPoly> power_cache;
  auto image_power = [&](int index, int e) -> const MPoly& {
    auto key = std::make_pair(index, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    const MPoly& img = map.at(VarId::from_index(index));
    MPoly p;
    if (e >= 0) {
      p = img.pow(static_cast<unsigned>(e));
    } else {
      if (img.terms_.size() != 1) throw Error("non-invertible Laurent substitution");
      const auto& [m, c] = img.terms_[0];
      Monomial inv;
      for (int i = 0; i < kMaxVars; ++i) {
        if (i != kHbar && m.e[i] != 0) throw Error("non-invertible Laurent substitution");
        inv.e[i] = static_cast<std::int8_t>(-m.e[i]);
      }
      p = MPoly::monomial(inv, 1 / c, true).pow(static_cast<unsigned>(-e));
    }
    return power_cache.emplace(key, std::move(p)).first->second;
  };

  MPoly out;
  out.laurent_ = laurent_;
  for (const auto& kv : map) out.laurent_ |= kv.second.laurent_;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    for (int idx : mapped) rest.e[idx] = 0;
    MPoly term = MPoly::monomial(rest, c, laurent_);
    for (int idx : mapped)
      if (m.e[idx] != 0) term *= image_power(idx, m.e[idx]);
    out += term;
  }
  return out;
}

MPoly MPoly::specialize(VarId v, const Rational& value) const {
  return substitute({{v, MPoly(value)}});
}

MPoly MPoly::rename(const std::vector<std::pair<VarId, VarId>>& pairs) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (const auto& [src, dst] : pairs) n.e[src.index()] = 0;
    for (const auto& [src, dst] : pairs) {
      int s = int(n.e[dst.index()]) + int(m.e[src.index()]);
      if (s > 127 || s < -128) throw Error("monomial exponent overflow (limit 127)");
      n.e[dst.index()] = static_cast<std::int8_t>(s);
    }
    raw.emplace_back(n, c);
  }
  MPoly p;
  p.laurent_ = laurent_;
  p.normalize(std::move(raw));
  return p;
}

std::map<int, MPoly> MPoly::collect(VarId v) const {
  std::map<int, std::vector<Term>> buckets;
  int idx = v.index();
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest.e[idx];
    rest.e[idx] = 0;
    buckets[e].emplace_back(rest, c);
  }
  std::map<int, MPoly> out;
  for (auto& [e, ts] : buckets) {
    MPoly p;
    p.laurent_ = laurent_;
    p.normalize(std::move(ts));
    out.emplace(e, std::move(p));
  }
  return out;
}

MPoly MPoly::exact_div_linear(VarId a, VarId b) const {
  if (a == b) throw InvalidArgument("exact_div_linear: divisor x_a - x_b is zero");
  if (terms_.empty()) return *this;
  auto coeffs = collect(a);
  if (coeffs.begin()->first < 0) throw InvalidArgument("exact_div_linear: negative exponent");
  int n = coeffs.rbegin()->first;
  MPoly xb = var(b);
  // Synthetic division by (a - b) in the variable a.
  std::vector<MPoly> q(static_cast<std::size_t>(std::max(n, 1)));
  MPoly carry;
  for (int k = n; k >= 1; --k) {
    auto it = coeffs.find(k);
    MPoly ck = it == coeffs.end() ? MPoly() : it->second;
    carry = ck + xb * carry;
    q[static_cast<std::size_t>(k - 1)] = carry;
  }
  auto it0 = coeffs.find(0);
  MPoly remainder = (it0 == coeffs.end() ? MPoly() : it0->second) + xb * carry;
  if (!remainder.is_zero()) throw NonExactDivision(remainder);
  MPoly out;
  out.laurent_ = laurent_;
  std::vector<Term> raw;
  for (int k = 0; k < n; ++k) {
    for (const auto& [m, c] : q[static_cast<std::size_t>(k)].terms_) {
      Monomial mm = m;
      mm.e[a.index()] = static_cast<std::int8_t>(k);
      raw.emplace_back(mm, c);
    }
  }
  out.normalize(std::move(raw));
  return out;
}

bool MPoly::is_symmetric(const std::vector<std::vector<VarId>>& blocks) const {
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      if (rename({{block[i], block[i + 1]}, {block[i + 1], block[i]}}) != *this) return false;
    }
  }
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = m.is_one();
    if (mag != 1 || one) {
      os << mag.get_str();
      if (!one) os << "*";
    }
    bool sep = false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.e[i] == 0) continue;
      if (sep) os << "*";
      os << display_name(i);
      if (m.e[i] != 1) os << "^" << int(m.e[i]);
      sep = true;
    }
  }
  return os.str();
}

nlohmann::json MPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e[i] != 0) exps[VarId::from_index(i).name()] = int(m.e[i]);
    arr.push_back({{"coeff", rational_to_string(c)}, {"exps", exps}});
  }
  return arr;
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array of terms");
  std::vector<Term> raw;
  bool laurent = false;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t["coeff"].is_string() ||
        !t["exps"].is_object())
      throw InvalidArgument("polynomial term must be {\"coeff\": string, \"exps\": object}");
    Monomial m;
    for (const auto& [name, e] : t["exps"].items()) {
      if (!e.is_number_integer()) throw InvalidArgument("exponent of " + name + " is not an integer");
      long v = e.get<long>();
      if (v < -128 || v > 127) throw InvalidArgument("exponent of " + name + " out of range");
      m.e[VarId::parse(name).index()] = static_cast<std::int8_t>(v);
      if (v < 0) laurent = true;
    }
    raw.emplace_back(m, rational_from_string(t["coeff"].get<std::string>()));
  }
  return from_terms(std::move(raw), laurent);
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

}  // namespace coha
