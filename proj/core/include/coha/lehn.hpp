#pragma once

#include <map>
#include <string>
#include <tuple>

#include <nlohmann/json.hpp>

#include "coha/rational.hpp"
#include "coha/report.hpp"

namespace coha {

// Cohomology of the surface in the basis {unit, r_0, ..., r_K}: index 0 is the
// unit, index i+1 is r_i. Products: unit * x = x, r_i * r_j = 0.
struct CohClass {
  static constexpr int unit = 0;
  static int r(int i) { return i + 1; }
  // Index of the product, or -1 when it vanishes.
  static int product(int a, int b);
  static std::string name(int basis);
};

// Key (n, a, basis) of the operator p_n^a(class).
using LehnKey = std::tuple<int, int, int>;

class LehnElem {
 public:
  explicit LehnElem(int K = 1) : K_(K) {}
  static LehnElem p(int K, int n, int a, int basis, const Rational& c = 1);

  int K() const { return K_; }
  const std::map<LehnKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const LehnKey& k, const Rational& c);
  Rational coeff(const LehnKey& k) const;

  LehnElem& operator+=(const LehnElem& o);
  LehnElem& operator-=(const LehnElem& o);
  LehnElem& operator*=(const Rational& c);
  friend LehnElem operator+(LehnElem a, const LehnElem& b) { return a += b; }
  friend LehnElem operator-(LehnElem a, const LehnElem& b) { return a -= b; }
  friend LehnElem operator*(const Rational& c, LehnElem a) { return a *= c; }
  friend bool operator==(const LehnElem& a, const LehnElem& b) { return a.K_ == b.K_ && a.terms_ == b.terms_; }

  nlohmann::json to_json() const;
  std::string to_string() const;

 private:
  int K_;
  std::map<LehnKey, Rational> terms_;
};

// [p^{a1}_{n1}(x), p^{a2}_{n2}(y)] =
//   n1^a1 n2^a2 (a2 n1 - n2 a1) / (n1+n2)^(a1+a2-1) p^{a1+a2-1}_{n1+n2}(xy)
LehnElem lehn_bracket(const LehnElem& a, const LehnElem& b);

// (K+1) p_m^n(unit) + m n sum_{i=0}^{K} p_m^{n-1}(r_i)
LehnElem gamma_op(int K, int m, int n);

// Normalization of the imaginary elements reached by the ad-recursion from
// gamma_op(K, 1, 0): c_1 = 1, c_{m+1} = -m (K+1) c_m.
Rational gamma_scale(int K, int m);

// The ad-recursion against the closed form, and every bracket among the
// imaginary elements of cohomological degree 0 and 1 with total index <= n_max
// compared against the same bracket of the matrix-algebra images.
Report verify_lehn_recursion(int K, int m_max);
Report cross_check_wkalg(int K, int n_max);

}  // namespace coha
