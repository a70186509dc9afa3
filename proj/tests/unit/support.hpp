#pragma once

#include <random>

#include "gerst/matrix.hpp"
#include "oracles/dense.hpp"

namespace testsupport {

inline oracle::DenseField dense_field(const gerst::Field& f) { return {f.characteristic()}; }

inline oracle::DenseMatrix to_dense_matrix(const gerst::Matrix& m) {
  oracle::DenseMatrix d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) d[e.index][c] = e.value.to_mpq();
  }
  return d;
}

// Sparse random matrix; density in percent.
inline gerst::Matrix random_matrix(const gerst::Field& f, size_t rows, size_t cols, int density, std::mt19937_64& rng) {
  std::vector<gerst::Triplet> t;
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> val(-3, 3);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (pct(rng) < density) {
        t.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(c), f.from_int(val(rng))});
      }
    }
  }
  return gerst::Matrix::from_triplets(f, rows, cols, std::move(t));
}

}  // namespace testsupport
