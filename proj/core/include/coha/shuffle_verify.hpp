#pragma once

#include <cstdint>

#include "coha/report.hpp"
#include "coha/shuffle.hpp"

namespace coha {

// Affine Yangian relations (hbar1, hbar2) = (-t2, t1 + t2) under
// X_{i,s} -> x(i,1)^s: the adjacent shifts in both directions, the
// same-vertex shift, distant commutation and the cubic Serre relation with
// i+1, for all i, j and r, s <= bounds. K >= 2.
Report verify_yangian_shuffle(int K, int r_max, int s_max);

// The presentation with m_ij = -delta_{i+1,j} + delta_{i,j+1} and Cartan
// entries a_ij for every ordered pair, Serre with i+1 and i-1, and the
// 𝔎 relation hbar1 (hbar1 + hbar2) 𝔎^(r) = T^r(Z - hbar2 Y) with
// 𝔎^(r) -> gamma_delta(K, r), for r <= kappa_r_max. T is expanded as a formal
// derivation on the bracket templates. K >= 2.
Report verify_yangian_deformed(int K, int r_max, int s_max, int kappa_r_max);

// (t1+t2) Y - Z == t1 t2 (t1+t2)^K. On failure the note carries the measured
// multiple when the difference is proportional to the target.
Report verify_yzk_identity(int K);

// T^r applied to Z (resp. Y) through the template expansion.
ShuffleElem T_power_Z(int K, int r);
ShuffleElem T_power_Y(int K, int r);

struct LnCommuteOptions {
  // Pairs with m + n up to this are expanded symbolically; larger ones are
  // checked by exact evaluation mod 2^61 - 1 at random points.
  int symbolic_max_total = 0;
  int random_points = 32;
  std::uint64_t seed = 20240601;
};

// [L_m, L_n] = 0 for 1 <= m < n, m + n <= max_total.
Report verify_ln_commute(int K, int max_total, const LnCommuteOptions& opts = {});

}  // namespace coha
