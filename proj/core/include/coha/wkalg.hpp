#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "coha/linalg.hpp"
#include "coha/mpoly.hpp"
#include "coha/quiver.hpp"
#include "coha/rational.hpp"
#include "coha/report.hpp"

namespace coha {

// Laurent polynomial in hbar over Q, stored as exponent -> coefficient.
class HPoly {
 public:
  HPoly() = default;
  HPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  HPoly(long c) : HPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  HPoly(int c) : HPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static HPoly monomial(int exponent, const Rational& c = 1);
  static HPoly hbar(int exponent = 1) { return monomial(exponent); }

  const std::map<int, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;
  Rational coeff(int exponent) const;

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const Rational& s);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(HPoly a, const Rational& s) { return a *= s; }
  friend HPoly operator*(const Rational& s, HPoly a) { return a *= s; }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }

  HPoly pow(unsigned n) const;
  MPoly to_mpoly() const;
  // Accepts only polynomials in hbar.
  static HPoly from_mpoly(const MPoly& p);
  std::string to_string() const;

 private:
  std::map<int, Rational> c_;
};

// z^m D^a (x) E_{row,col}, rows and columns 1-based.
struct WKey {
  int m = 0;
  int a = 0;
  int row = 1;
  int col = 1;
  auto operator<=>(const WKey&) const = default;
};

// Element of D_hbar(C*) (x) gl_K in normal order (z left of D), coefficients
// Laurent in hbar.
class WElem {
 public:
  explicit WElem(int K = 1) : K_(K) {}

  // c * z^m D^a E_{row,col}
  static WElem T(int K, int m, int a, int row, int col, const HPoly& c = 1);
  // z^m D^a X
  static WElem T(int K, int m, int a, const QMatrix& X);
  // z^m D^a (x) 1 / hbar
  static WElem t(int K, int m, int a);

  int K() const { return K_; }
  const std::map<WKey, HPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const WKey& k, const HPoly& c);
  HPoly coeff(const WKey& k) const;

  WElem operator-() const;
  WElem& operator+=(const WElem& o);
  WElem& operator-=(const WElem& o);
  WElem& operator*=(const HPoly& c);
  friend WElem operator+(WElem a, const WElem& b) { return a += b; }
  friend WElem operator-(WElem a, const WElem& b) { return a -= b; }
  friend WElem operator*(const HPoly& c, WElem a) { return a *= c; }
  friend WElem operator*(WElem a, const HPoly& c) { return a *= c; }
  friend bool operator==(const WElem& a, const WElem& b) { return a.K_ == b.K_ && a.terms_ == b.terms_; }

  nlohmann::json to_json() const;
  static WElem from_json(int K, const nlohmann::json& j);
  std::string to_string() const;

 private:
  int K_;
  std::map<WKey, HPoly> terms_;
};

enum class WLetterKind { Z, ZInv, D, Mat };
struct WLetter {
  WLetterKind kind = WLetterKind::Z;
  int row = 0;
  int col = 0;
};

// Product of the letters left to right, rewritten with D z = z (D + hbar).
WElem normal_order(int K, const std::vector<WLetter>& word);

WElem w_mul(const WElem& a, const WElem& b);
WElem w_bracket(const WElem& a, const WElem& b);

// Per (m, a) slice: traceless part has hbar-polynomial entries and the
// scalar part lies in hbar^{-1} Q[hbar].
bool in_integral_form(const WElem& e);
// Throws InvalidArgument when e is not in integral form.
bool in_positive_half(const WElem& e);

// Element of the hbar = 0 algebra: scalar part sum c t_{m,a}, matrix part
// sum c T_{m,a}(E_{row,col}) with each (m, a) slice traceless.
struct WTildeElem {
  int K = 1;
  std::map<std::pair<int, int>, Rational> scalar;
  std::map<WKey, Rational> matrix;

  static WTildeElem t(int K, int m, int a, const Rational& c = 1);
  // c * T_{m,a}(E_{row,col}); row != col unless combined with other terms.
  static WTildeElem T(int K, int m, int a, int row, int col, const Rational& c = 1);
  static WTildeElem T(int K, int m, int a, const QMatrix& X);

  bool is_zero() const { return scalar.empty() && matrix.empty(); }
  bool traceless() const;
  WTildeElem& operator+=(const WTildeElem& o);
  WTildeElem& operator-=(const WTildeElem& o);
  WTildeElem& operator*=(const Rational& c);
  friend WTildeElem operator+(WTildeElem a, const WTildeElem& b) { return a += b; }
  friend WTildeElem operator-(WTildeElem a, const WTildeElem& b) { return a -= b; }
  friend WTildeElem operator*(const Rational& c, WTildeElem a) { return a *= c; }
  friend bool operator==(const WTildeElem& a, const WTildeElem& b) {
    return a.K == b.K && a.scalar == b.scalar && a.matrix == b.matrix;
  }

  nlohmann::json to_json() const;
  std::string to_string() const;
};

// Throws InvalidArgument when e is not in integral form.
WTildeElem classical_limit(const WElem& e);
// t_{m,a} -> z^m D^a / hbar, T_{m,a}(X) -> z^m D^a X.
WElem lift(const WTildeElem& e);
// Bracket of the hbar = 0 algebra from its defining relations.
WTildeElem wt_bracket(const WTildeElem& a, const WTildeElem& b);
bool in_positive_half(const WTildeElem& e);

// sum_i (i - 1/2 - K/2) E_ii
QMatrix H_matrix(int K);
// p = [t_{0,2}/2 - T_{0,1}(H_K)/K, -], q = d/dD scaled by K.
WElem heis_p(const WElem& e);
WElem heis_q(const WElem& e);
WTildeElem heis_p(const WTildeElem& e);
WTildeElem heis_q(const WTildeElem& e);

// Every bracket of two spanning elements t_{m,a}, T_{m,a}(E_ij) with
// |m| <= mrange, 0 <= a <= arange stays in the integral form.
Report verify_wk_closure(int K, int mrange, int arange);
// hbar -> 0 limits of [t, t] and [t, T(X)] against (na - mb) times the
// element of degree (m + n, a + b - 1), X traceless.
Report verify_classical_limit(int K, int mrange, int arange);

// ---- Imaginary generator map into the classical algebra on (K+1) x (K+1) matrices.

struct ImGen {
  enum class Kind { Gamma, Alpha };
  Kind kind = Kind::Gamma;
  int n = 1;  // gamma: multiple of delta
  int r = 0;  // gamma: 0 or 1
  int i = 0;  // alpha: vertex
  static ImGen gamma(int n, int r) { return {Kind::Gamma, n, r, 0}; }
  static ImGen alpha(int i) { return {Kind::Alpha, 0, 0, i}; }
};

WTildeElem F_image(const ImGen& g, int K);
// p^r applied to the image of gamma_{n delta}^{(0)}: the Heis extension.
WTildeElem F_hat_gamma(int K, int n, int r);
Report verify_theorem1(int K, int n_max);

// ---- Positive-degree map into W_{K+1} (with hbar).

WElem P_element(int K);
WElem G_image(int i, int r, int K);
WElem G_kappa(int r, int K);
// (K+1)^r D^r z E_{K+1,1} for i = 0, (K+1)^r (D + (1 - i/(K+1)) hbar)^r E_{i,i+1} otherwise.
WElem G_closed_form(int i, int r, int K);
Report verify_S_relations(int K, int r_max, int s_max);

// ---- Loop model on n x n matrices.

struct LoopGen {
  enum class Kind { XPlus, XMinus, H, KPlus, KMinus };
  Kind kind = Kind::XPlus;
  int i = 0;
  int r = 0;
};

WElem psi_image(const LoopGen& g, int n);
Report verify_loop_relations(int n, int r_max, int s_max);

// ---- Subalgebras attached to the surface, inside the classical algebra on
// (K+1) x (K+1) matrices.

bool ws_membership(const WTildeElem& e, int K);
// T_{n+1,a}(E_{K+2-j, i+1}) for slope solutions with j > 0 and
// T_{n,a}(E_{1, i+1}) for j = 0, with 0 <= a <= a_max.
std::vector<WTildeElem> womega_basis(int K, const SlopeData& s, int bound, int a_max);

}  // namespace coha
