#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gerst/matrix.hpp"

namespace gerst {

struct RrefResult {
  Matrix reduced;              // same shape as the input, zero rows last
  std::vector<size_t> pivots;  // pivot column of each nonzero row
  size_t rank = 0;
};

// All routines below split the matrix into connected components of its
// row/column incidence graph and eliminate each block independently (in
// parallel). The reduced row echelon form is unique, so block order and thread
// count never change a result.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);
// Columns are the canonical kernel basis read off the RREF: one vector per
// free column f, with 1 at f.
Matrix kernel_basis(const Matrix& m);
// The pivot columns of m itself.
Matrix image_basis(const Matrix& m);
// Some c with span * c == v, or nullopt when v is outside the column span.
std::optional<Vector> membership(const Vector& v, const Matrix& span);

namespace detail {
struct SpaceBlock;
struct QuotientBlock;
}  // namespace detail

// Column span of a fixed matrix, prepared for repeated membership queries.
class ColumnSpace {
 public:
  ColumnSpace() = default;
  explicit ColumnSpace(const Matrix& span);
  ~ColumnSpace();
  ColumnSpace(ColumnSpace&&) noexcept;
  ColumnSpace& operator=(ColumnSpace&&) noexcept;

  size_t rank() const { return rank_; }
  size_t ambient_dim() const { return rows_; }
  // Indices of the first maximal independent set of columns.
  const std::vector<size_t>& independent_columns() const { return independent_; }
  bool contains(const Vector& v) const { return solve(v).has_value(); }
  std::optional<Vector> solve(const Vector& v) const;

 private:
  Field field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t rank_ = 0;
  std::vector<size_t> independent_;
  std::vector<int32_t> row_block_;
  std::vector<uint32_t> row_local_;
  std::vector<std::unique_ptr<detail::SpaceBlock>> blocks_;
};

// span(Z) / span(B), with B required to lie inside span(Z).
class Quotient {
 public:
  Quotient(const Matrix& cocycles, const Matrix& coboundaries);
  ~Quotient();
  Quotient(Quotient&&) noexcept;
  Quotient& operator=(Quotient&&) noexcept;

  size_t dim() const { return dim_; }
  // Columns of Z chosen as representatives of a quotient basis.
  const Matrix& representatives() const { return reps_; }
  const std::vector<size_t>& representative_columns() const { return rep_columns_; }
  // Quotient coordinates of v; NotASubspace when v is not in span(Z).
  Vector reduce(const Vector& v) const;
  // True iff v lies in span(B) (v must lie in span(Z)).
  bool is_trivial(const Vector& v) const { return is_zero(reduce(v)); }

 private:
  Field field_;
  size_t rows_ = 0;
  size_t dim_ = 0;
  Matrix reps_;
  std::vector<size_t> rep_columns_;
  std::vector<int32_t> rep_index_;
  std::vector<int32_t> row_block_;
  std::vector<uint32_t> row_local_;
  std::vector<std::unique_ptr<detail::QuotientBlock>> blocks_;
};

struct QuotientData {
  size_t dim;
  Matrix reps;
  std::shared_ptr<const Quotient> quotient;  // quotient->reduce(v) gives coordinates
};
QuotientData quotient_data(const Matrix& cocycles, const Matrix& coboundaries);

}  // namespace gerst
