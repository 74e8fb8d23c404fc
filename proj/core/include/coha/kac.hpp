#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coha/quiver.hpp"
#include "coha/rational.hpp"

namespace coha {

// Representation over F_q: one d_t x d_s matrix per arrow, entries in [0, q).
struct RepPoint {
  std::vector<std::vector<std::vector<std::uint32_t>>> maps;
};

// Work cap for the enumerator: number of points of Rep_d and elements of any
// one endomorphism algebra. Read from COHA_KAC_BUDGET, default 10^7.
std::uint64_t kac_budget_from_env();

struct KacCount {
  long abs_indecomposable = 0;
  long orbits = 0;
  std::uint64_t points = 0;
  // sum over orbits of |GL_d| / |Aut| equals the number of points.
  bool burnside_ok = false;
};

// Orbits of GL_d(F_q) on Rep_d(F_q) by breadth-first search over generators;
// End of a representative is the intertwiner null space, enumerated to test
// locality and End/rad = F_q. Throws BudgetExceeded.
KacCount count_abs_indec_detail(const Quiver& Q, const DimVector& d, std::uint32_t q, std::uint64_t budget);
long count_abs_indec(const Quiver& Q, const DimVector& d, std::uint32_t q, std::uint64_t budget);

struct KacFit {
  std::vector<Rational> coeffs;  // constant term first
  std::vector<long> counts;      // per q, in input order
  int expected_degree = 0;       // 1 - <d, d>
  bool held_out_checked = false;
  // False when a held-out count misses the interpolant or the degree is off.
  bool consistent = true;
  std::string problem;
};

// Interpolates through the first expected_degree + 1 primes and checks the
// rest, recording any disagreement in `consistent`. Throws InvalidArgument
// when d is not a root or too few primes are given.
KacFit kac_fit(const Quiver& Q, const DimVector& d, const std::vector<std::uint32_t>& qs, std::uint64_t budget);

}  // namespace coha
