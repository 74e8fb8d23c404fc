#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coha/linalg.hpp"
#include "coha/rational.hpp"
#include "coha/report.hpp"

namespace coha {

using DimVector = std::vector<int>;

struct Arrow {
  int s = 0;
  int t = 0;
  std::vector<int> w;  // torus weight
};

class Quiver {
 public:
  Quiver() = default;
  // Validates endpoints and that all weights share one length.
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  // Vertices 0..K with arrows i -> i+1 mod K+1 (K >= 1).
  static Quiver cyclic(int K);
  static Quiver jordan();
  // "cyclic:K" or "jordan".
  static Quiver builtin(const std::string& spec);
  static Quiver from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int torus_rank() const { return arrows_.empty() ? 0 : static_cast<int>(arrows_[0].w.size()); }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

void check_dim(const Quiver& q, const DimVector& d);

// sum d_i e_i - sum over arrows d_s e_t
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// (-1)^euler_form(q, d, e)
int sign_twist(const Quiver& q, const DimVector& d, const DimVector& e);

// One summand of a potential: sign times the product of arrows, left to right.
struct CyclicWord {
  int sign = 1;
  std::vector<int> arrows;  // indices into the tripled quiver's arrow list
};

struct TripledQuiver {
  Quiver quiver;
  int original_arrows = 0;  // arrows [0, m) are a, [m, 2m) are a*, then loops
  std::vector<CyclicWord> potential;

  int star(int a) const { return original_arrows + a; }
  int loop(int vertex) const { return 2 * original_arrows + vertex; }
};

// Doubles every arrow and adds a loop per vertex. Weights: a -> (1,0),
// a* -> (0,1), loop -> (-1,-1). The potential is (sum of loops) times
// (sum of [a, a*]), expanded into the words that close up.
TripledQuiver triple(const Quiver& q);

// Tridiagonal (-1, 2, -1) Cartan matrix of finite type A_K.
QMatrix cartan_matrix_A(int K);

// Inverts the A_K Cartan matrix exactly and checks both
// A_kj = min(k,j) - kj/(K+1) and sum_k A_kj = j(K+1-j)/2.
bool cartan_inverse_identity(int K);
// cartan_inverse_identity for K = 1..k_max, one record per K.
Report verify_cartan(int k_max);

// Positive real root of affine A_K written n*delta + [start, start+length)
// with the interval read cyclically on vertices 0..K.
struct RealRoot {
  DimVector d;
  int n = 0;
  int start = 0;
  int length = 0;
  // (n, i, j) when the interval consists of vertices 0..i-1 and K+1-j..K, i >= 1.
  std::optional<std::array<int, 3>> nij;
};

std::vector<RealRoot> real_roots_cyclic(int K, int bound);

struct SlopeData {
  std::vector<Rational> zeta;  // zeta_0..zeta_K
  std::optional<Rational> mu;  // nullopt means mu = infinity
};

// Dimension vector n*delta + ones at vertices 0..i-1 and K+1-j..K.
DimVector nij_vector(int K, int n, int i, int j);

// sum_{k>=1} zeta_k (d_k - d_0) + d_0 / mu
Rational slope_value(const SlopeData& s, const DimVector& d);

// All (n, i, j) with i >= 1, i + j <= K and |nij_vector| <= bound solving
// slope_value == 0. Checks zeta_0 = 1/mu - sum zeta_k (or -sum when mu is
// infinite) and zeta_k > 0 for k >= 1; throws InvalidArgument otherwise.
std::vector<std::array<int, 3>> slope_solutions(int K, const SlopeData& s, int bound);

}  // namespace coha
