#pragma once

// Textbook dense Gaussian elimination over Q (GMP) or F_p, used to check the
// sparse block-eliminating kernel in the library.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct DenseField {
  uint64_t p = 0;  // 0 means Q

  mpq_class norm(const mpq_class& x) const {
    if (p == 0) return x;
    mpz_class n = x.get_num(), d = x.get_den();
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class r = (n * inv) % m;
    if (r < 0) r += m;
    return mpq_class(r);
  }
  mpq_class inv(const mpq_class& x) const { return norm(p == 0 ? mpq_class(1) / x : mpq_class(1) / x); }
};

using DenseMatrix = std::vector<std::vector<mpq_class>>;  // row-major

inline size_t dense_rank(DenseMatrix m, const DenseField& f) {
  size_t rank = 0;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && f.norm(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    mpq_class inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.norm(x * inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      mpq_class k = f.norm(m[r][c]);
      if (k == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[r][j] = f.norm(m[r][j] - k * m[rank][j]);
    }
    ++rank;
  }
  return rank;
}

// Reduced row echelon form, zero rows dropped.
inline DenseMatrix dense_rref(DenseMatrix m, const DenseField& f) {
  size_t rank = 0;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m) {
    for (auto& x : row) x = f.norm(x);
  }
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    mpq_class inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.norm(x * inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      mpq_class k = m[r][c];
      if (k == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[r][j] = f.norm(m[r][j] - k * m[rank][j]);
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

}  // namespace oracle
