#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gerst/linalg.hpp"

namespace gerst {

struct CohomologySpace {
  size_t degree = 0;
  size_t dim = 0;
  // Top degree of a truncated complex: every cochain counts as a cocycle
  // because the outgoing differential is not available.
  bool upper_truncation_unsafe = false;
  Matrix representatives;
  std::shared_ptr<const Quotient> quotient;

  Vector reduce(const Vector& cocycle) const { return quotient->reduce(cocycle); }
};

// Cochain complex C^0 -> C^1 -> ... -> C^N. D_n : C^n -> C^{n+1} is produced
// on first use by the builder and then cached, as are kernels and images.
// All accessors are safe to call from several threads.
class TruncatedComplex {
 public:
  using Builder = std::function<Matrix(size_t n)>;

  TruncatedComplex(Field field, std::vector<size_t> dims, Builder build);
  ~TruncatedComplex();
  TruncatedComplex(TruncatedComplex&&) noexcept;
  TruncatedComplex& operator=(TruncatedComplex&&) noexcept;

  const Field& field() const { return field_; }
  size_t max_degree() const { return dims_.size() - 1; }
  size_t dim(size_t n) const;

  // D_n for n < N.
  const Matrix& differential(size_t n) const;
  // Columns form the canonical basis of ker D_n (all of C^N at the top).
  const Matrix& cocycles(size_t n) const;
  size_t differential_rank(size_t n) const;

  CohomologySpace cohomology(size_t n) const;
  std::vector<size_t> cohomology_dims() const;

  // Some u with D_{n-1} u = v, or nullopt. v need not be a cocycle.
  std::optional<Vector> is_coboundary(size_t n, const Vector& v) const;
  bool is_cocycle(size_t n, const Vector& v) const;

  // Checks D_{n+1} D_n = 0 as a matrix product for every n < N - 1 and
  // returns the first degree where it fails.
  std::optional<size_t> verify_d_squared() const;

 private:
  struct Cache;
  void check_degree(size_t n, size_t limit, const char* what) const;
  const ColumnSpace& image(size_t n) const;  // im D_{n-1} inside C^n

  Field field_;
  std::vector<size_t> dims_;
  Builder build_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace gerst
