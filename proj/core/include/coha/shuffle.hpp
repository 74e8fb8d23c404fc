#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coha/mpoly.hpp"
#include "coha/quiver.hpp"

namespace coha {

// Symmetric polynomial in x(i, n), 0 <= i <= K, 1 <= n <= dim[i], with
// coefficients in Q[t1, t2]: a class of the shuffle algebra of the tripled
// cyclic quiver with K+1 vertices.
struct ShuffleElem {
  int K = 1;
  DimVector dim;
  MPoly poly;

  static ShuffleElem zero(int K, DimVector dim);
  static ShuffleElem unit(int K);

  int total_dim() const;
  bool is_zero() const { return poly.is_zero(); }
  // x(i, 1..dim[i]) for each vertex.
  std::vector<std::vector<VarId>> blocks() const;
  // Symmetry within blocks, no hbar, no variables outside the blocks.
  bool is_valid() const;

  ShuffleElem& operator+=(const ShuffleElem& o);
  ShuffleElem& operator-=(const ShuffleElem& o);
  friend ShuffleElem operator+(ShuffleElem a, const ShuffleElem& b) { return a += b; }
  friend ShuffleElem operator-(ShuffleElem a, const ShuffleElem& b) { return a -= b; }
  friend ShuffleElem operator*(const MPoly& c, ShuffleElem a) {
    a.poly = c * a.poly;
    return a;
  }
  friend bool operator==(const ShuffleElem& a, const ShuffleElem& b) {
    return a.K == b.K && a.dim == b.dim && a.poly == b.poly;
  }

  nlohmann::json to_json() const;
  static ShuffleElem from_json(const nlohmann::json& j);
};

// Kernel data of the tripled cyclic quiver: for an ordered vertex pair (i, j),
// the shifts c with a factor (w - z + c) in the numerator, and whether the
// pair carries the denominator (w - z).
class ShuffleKernel {
 public:
  explicit ShuffleKernel(int K);

  int K() const { return K_; }
  const std::vector<MPoly>& shifts(int i, int j) const { return shifts_[idx(i, j)]; }
  bool has_pole(int i, int j) const { return i == j; }
  // Numerator factors for z = x(i, m) on the left and w = x(j, n) on the right.
  MPoly numerator(int i, int m, int j, int n) const;
  // (-1)^chi(d', d'') for the untripled cyclic quiver.
  int sign(const DimVector& d1, const DimVector& d2) const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * (K_ + 1) + j); }

  int K_;
  Quiver base_;
  std::vector<std::vector<MPoly>> shifts_;
};

// sum over shuffles of sigma(f(x') g(x'') kernel(x'; x'')), twisted by the
// sign of the Euler form. Terms are put over the block Vandermonde
// denominator, summed, and divided out with exact_div_linear.
ShuffleElem shuffle_mul(const ShuffleElem& f, const ShuffleElem& g);
ShuffleElem shuffle_commutator(const ShuffleElem& f, const ShuffleElem& g);

// f times (sum of all x(i, n))^k.
ShuffleElem u_act(const ShuffleElem& f, unsigned k);

// x(i,1)^r at dimension delta_i.
ShuffleElem alpha(int K, int i, unsigned r);
// (t1+t2)^K (x(0,1) + ... + x(K,1))^r at dimension delta.
ShuffleElem gamma_delta(int K, unsigned r);
// sum_i x(i,1) at dimension delta.
ShuffleElem e_delta(int K);
// The dimension-delta element with polynomial 1.
ShuffleElem one_delta(int K);

// Y = sum_i alpha_{i,0} * [alpha_{i+1,0}, [..., alpha_{i+K,0}]] and
// Z = sum_i [alpha_{i,0}, [alpha_{i+1,1}, [alpha_{i+2,0}, ..., alpha_{i+K,0}]]].
struct YZPair {
  ShuffleElem Y;
  ShuffleElem Z;
};
YZPair yz_elements(int K);

// L_1 = one_delta, L_n = [e_delta, L_{n-1}].
ShuffleElem L_element(int K, int n);
// L_1..L_n in one pass.
std::vector<ShuffleElem> L_sequence(int K, int n);

}  // namespace coha
