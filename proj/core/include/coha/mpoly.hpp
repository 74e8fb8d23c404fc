#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "coha/error.hpp"
#include "coha/rational.hpp"
#include "coha/var.hpp"

namespace coha {

struct Monomial {
  std::array<std::int8_t, kMaxVars> e{};

  int degree() const;
  bool is_one() const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
  }
  // Throws Error if an exponent leaves the int8 range.
  Monomial operator*(const Monomial& o) const;
};

// Graded lexicographic: total degree first, then exponents in VarId order.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class MPoly;

class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(const MPoly& remainder);
  const MPoly& remainder() const;

 private:
  std::shared_ptr<const MPoly> remainder_;
};

// Sparse polynomial over Q in t1, t2, hbar and x(i, n). Terms are kept in
// descending graded-lex order with no zero coefficients, so equality is
// structural. Negative exponents are allowed on hbar only, and only when the
// Laurent flag is set.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;
  using Substitution = std::map<VarId, MPoly>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(VarId v, int exponent = 1);
  static MPoly t1() { return var(VarId::t1()); }
  static MPoly t2() { return var(VarId::t2()); }
  static MPoly hbar() { return var(VarId::hbar()); }
  static MPoly x(int vertex, int slot) { return var(VarId::x(vertex, slot)); }
  static MPoly monomial(const Monomial& m, const Rational& c, bool laurent = false);
  // Builds from unsorted terms; duplicates are merged and zeros dropped.
  static MPoly from_terms(std::vector<Term> terms, bool laurent = false);

  bool laurent() const { return laurent_; }
  MPoly with_laurent(bool on) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const;
  int degree_in(VarId v) const;
  int min_degree_in(VarId v) const;
  bool involves(VarId v) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned n) const;

  // Replaces each mapped variable by its image. A negative hbar exponent is
  // only substituted when the image is c * hbar^k.
  MPoly substitute(const Substitution& map) const;
  // Specializes a single variable to a rational value.
  MPoly specialize(VarId v, const Rational& value) const;
  // Applies an exponent permutation: variable src[i] is renamed to dst[i].
  MPoly rename(const std::vector<std::pair<VarId, VarId>>& pairs) const;

  // q with q * (x_a - x_b) == *this; throws NonExactDivision otherwise.
  MPoly exact_div_linear(VarId a, VarId b) const;

  // Invariance under adjacent transpositions inside each block.
  bool is_symmetric(const std::vector<std::vector<VarId>>& blocks) const;

  // Coefficient of v^k as a polynomial in the remaining variables.
  std::map<int, MPoly> collect(VarId v) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static MPoly from_json(const nlohmann::json& j);

 private:
  void normalize(std::vector<Term>&& raw);

  std::vector<Term> terms_;
  bool laurent_ = false;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace coha
