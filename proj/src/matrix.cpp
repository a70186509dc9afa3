#include "gerst/matrix.hpp"

#include <algorithm>

namespace gerst {

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorCode::FieldMismatch, "field mismatch: " + a.name() + " vs " + b.name());
}

Matrix::Matrix(Field field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

Matrix Matrix::identity(Field field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<uint32_t>(i), Scalar(1)});
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row in dense matrix");
    for (size_t c = 0; c < cols; ++c) {
      if (!field.contains(rows[r][c])) {
        throw Error(ErrorCode::FieldMismatch, "entry " + rows[r][c].str() + " not in " + field.name());
      }
      if (!rows[r][c].is_zero()) m.columns_[c].push_back({static_cast<uint32_t>(r), rows[r][c]});
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, size_t rows, std::vector<SparseVec> columns) {
  Matrix m(field, rows, columns.size());
  for (auto& col : columns) {
    for (size_t i = 0; i < col.size(); ++i) {
      if (col[i].index >= rows || (i > 0 && col[i - 1].index >= col[i].index) || col[i].value.is_zero()) {
        throw Error(ErrorCode::DimensionMismatch, "malformed sparse column");
      }
    }
  }
  m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_dense_columns(Field field, size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    m.columns_[c] = to_sparse(columns[c]);
  }
  return m;
}

Matrix Matrix::from_triplets(Field field, size_t rows, size_t cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  Matrix m(field, rows, cols);
  for (size_t i = 0; i < triplets.size();) {
    const uint32_t r = triplets[i].row;
    const uint32_t c = triplets[i].col;
    if (r >= rows || c >= cols) throw Error(ErrorCode::IndexError, "triplet out of range");
    Scalar sum = triplets[i].value;
    size_t j = i + 1;
    for (; j < triplets.size() && triplets[j].row == r && triplets[j].col == c; ++j) {
      sum = field.add(sum, triplets[j].value);
    }
    if (!sum.is_zero()) m.columns_[c].push_back({r, std::move(sum)});
    i = j;
  }
  return m;
}

Matrix Matrix::from_elements(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::DimensionMismatch, "from_elements needs at least one entry to fix the field");
  }
  const Field field = rows.front().front().field();
  std::vector<std::vector<Scalar>> values(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      require_same_field(field, e.field());
      values[r].push_back(e.value());
    }
  }
  return from_rows(field, values, rows.front().size());
}

size_t Matrix::nnz() const {
  size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Scalar Matrix::at(size_t r, size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, size_t idx) { return e.index < idx; });
  if (it != col.end() && it->index == r) return it->value;
  return Scalar();
}

Vector Matrix::dense_column(size_t c) const { return to_dense(columns_.at(c), rows_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t c = 0; c < cols_; ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.index].push_back({static_cast<uint32_t>(c), e.value});
  }
  return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  Vector acc(rows_);
  std::vector<uint32_t> touched;
  std::vector<char> mark(rows_, 0);
  for (size_t c = 0; c < rhs.cols_; ++c) {
    touched.clear();
    for (const auto& e : rhs.columns_[c]) {
      for (const auto& f : columns_[e.index]) {
        if (!mark[f.index]) {
          mark[f.index] = 1;
          touched.push_back(f.index);
        }
        field_.add_mul(acc[f.index], e.value, f.value);
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& col = out.columns_[c];
    for (uint32_t r : touched) {
      if (!acc[r].is_zero()) col.push_back({r, std::move(acc[r])});
      acc[r] = Scalar();
      mark[r] = 0;
    }
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(rows_);
  for (size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& e : columns_[c]) field_.add_mul(out[e.index], v[c], e.value);
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<size_t>& indices) const {
  Matrix out(field_, rows_, indices.size());
  for (size_t i = 0; i < indices.size(); ++i) out.columns_[i] = columns_.at(indices[i]);
  return out;
}

Matrix Matrix::hconcat(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (size_t c = 0; c < cols_; ++c) out.columns_[c] = columns_[c];
  for (size_t c = 0; c < rhs.cols_; ++c) out.columns_[cols_ + c] = rhs.columns_[c];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.empty()) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t c = 0; c < a.cols_; ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].index != y[i].index || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.push_back({static_cast<uint32_t>(i), v[i]});
  }
  return s;
}

Vector to_dense(const SparseVec& v, size_t n) {
  Vector d(n);
  for (const auto& e : v) d[e.index] = e.value;
  return d;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace gerst
