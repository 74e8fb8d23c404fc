#include "coha/linalg.hpp"

#include <numeric>

#include "coha/error.hpp"
#include "coha/prime_field.hpp"

namespace coha {

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw DimensionMismatch("matmul: inner dimensions differ");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  QMatrix c(a.size(), std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

QMatrix matrix_inverse_Q(const QMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("matrix_inverse_Q: matrix is not square");
  if (n == 0) return {};

  // Augmented integer matrix [s_i * M | s_i * I] with s_i the row denominator lcm.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 1;
    for (const auto& x : m[i]) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (s / m[i][j].get_den());
    a[i][n + i] = s;
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  QMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(a[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * inv[j][col];
      inv[ii][col] = acc / Rational(a[ii][ii]);
    }
  }
  return inv;
}

std::vector<std::size_t> rref_mod_p(ModMatrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = Fp(m[r][c], p).inverse().value();
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - f) * m[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

ModMatrix nullspace_mod_p(ModMatrix m, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  if (!m.empty()) pivots = rref_mod_p(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = m[r][f] == 0 ? 0 : p - m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(ModMatrix m, std::uint32_t p) { return rref_mod_p(m, p).size(); }

}  // namespace coha
