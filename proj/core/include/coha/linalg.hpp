#pragma once

#include <cstdint>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix identity_matrix(std::size_t n);
QMatrix matmul(const QMatrix& a, const QMatrix& b);

// Exact inverse. Rows are scaled to integers, reduced with Bareiss
// fraction-free elimination, then solved by back substitution.
// Throws SingularMatrix or DimensionMismatch (non-square input).
QMatrix matrix_inverse_Q(const QMatrix& m);

// Dense matrices over F_p stored as rows of residues in [0, p).
using ModMatrix = std::vector<std::vector<std::uint32_t>>;

// Row-reduced echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_mod_p(ModMatrix& m, std::uint32_t p);

// Basis of {v : m v = 0} over F_p; cols is the number of unknowns.
ModMatrix nullspace_mod_p(ModMatrix m, std::size_t cols, std::uint32_t p);

std::size_t rank_mod_p(ModMatrix m, std::uint32_t p);

}  // namespace coha
