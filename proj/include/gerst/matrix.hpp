#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gerst/field.hpp"

namespace gerst {

struct Entry {
  uint32_t index;
  Scalar value;
};

// Sorted by index, no stored zeros.
using SparseVec = std::vector<Entry>;
using Vector = std::vector<Scalar>;

struct Triplet {
  uint32_t row;
  uint32_t col;
  Scalar value;
};

// Column-major sparse matrix over a single field. Row indices inside each
// column are strictly increasing and no explicit zeros are stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, size_t rows, size_t cols);

  static Matrix identity(Field field, size_t n);
  static Matrix zero(Field field, size_t rows, size_t cols) { return Matrix(field, rows, cols); }
  // Row-major dense input.
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, size_t cols);
  static Matrix from_columns(Field field, size_t rows, std::vector<SparseVec> columns);
  static Matrix from_dense_columns(Field field, size_t rows, const std::vector<Vector>& columns);
  // Duplicate (row, col) pairs are summed.
  static Matrix from_triplets(Field field, size_t rows, size_t cols, std::vector<Triplet> triplets);
  // Every element must belong to the same field (FieldMismatch otherwise).
  static Matrix from_elements(const std::vector<std::vector<FieldElement>>& rows);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t nnz() const;

  const SparseVec& column(size_t c) const { return columns_[c]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  Scalar at(size_t r, size_t c) const;
  Vector dense_column(size_t c) const;

  Matrix transpose() const;
  Matrix multiply(const Matrix& rhs) const;
  Vector apply(const Vector& v) const;
  Matrix select_columns(const std::vector<size_t>& indices) const;
  Matrix hconcat(const Matrix& rhs) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<SparseVec> columns_;
};

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, size_t n);
bool is_zero(const Vector& v);

void require_same_field(const Field& a, const Field& b);

}  // namespace gerst
