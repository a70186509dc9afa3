#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gerst/complex.hpp"
#include "gerst/hochschild.hpp"
#include "gerst/hopf.hpp"

namespace gerst {

// Hom(Ā^⊗n, M) with Ā = ker ε spanned by the canonical kernel basis of ε.
// Degree-n cochains are indexed r * A^n + (ā_1 ... ā_n), A = dim Ā, with ā_1
// the most significant digit and r a basis index of M.
//   (δf)(ā_1..ā_{n+1}) = ā_1 ▷ f(ā_2..) + Σ_{i=1}^{n} (-1)^i f(.., π(ā_i ā_{i+1}), ..)
class ReducedBarComplex {
 public:
  ReducedBarComplex(HopfAlgebra hopf, HModule module, size_t max_degree);

  const HopfAlgebra& hopf() const { return data_->hopf; }
  const HModule& module() const { return data_->module; }
  const Field& field() const { return data_->hopf.field(); }
  size_t max_degree() const { return complex_.max_degree(); }
  size_t aug_dim() const { return data_->aug; }
  // d × A matrix whose columns span ker ε.
  const Matrix& augmentation_basis() const { return data_->basis; }
  // Coordinates of π(e_j) = e_j - ε(e_j)·1 in the augmentation basis.
  const SparseVec& projection(size_t j) const { return data_->proj[j]; }
  bool trivial_coefficients() const { return data_->trivial; }
  const TruncatedComplex& complex() const { return complex_; }
  size_t dim(size_t n) const { return complex_.dim(n); }

 private:
  struct Data {
    HopfAlgebra hopf;
    HModule module;
    size_t aug = 0;
    bool trivial = false;
    Matrix basis;
    std::vector<SparseVec> proj;
    // mult[a * A + b]: coordinates of ā_a ā_b; act[a * dim M + m]: ā_a ▷ m
    std::vector<SparseVec> mult;
    std::vector<SparseVec> act;
  };
  static Matrix build_differential(const Data& d, size_t n);

  std::shared_ptr<const Data> data_;
  TruncatedComplex complex_;
};

ReducedBarComplex build_ext_complex(const HopfAlgebra& hopf, const HModule& module, size_t max_degree);

// Concatenation product on Hom(Ā^⊗•, k); Unsupported for other coefficients.
Vector yoneda_product(const ReducedBarComplex& ext, size_t p, const Vector& f, size_t q, const Vector& g);

struct FsBracket {
  int degree = -1;
  bool coboundary = true;
  // Ext coordinates (in the representative basis of that degree) of a class
  // whose image is cohomologous to the bracket; absent when the degree is past
  // the safe Ext range or the bracket is outside the image.
  std::optional<Vector> ext_coords;
  bool in_image = false;
  bool image_checked = false;
};

struct DimensionRow {
  size_t degree;
  size_t ext_dim;
  size_t hh_dim;
};

// Ext_H(k, k) together with the Hochschild complex of H and the chain map
// ι(f)(a_1..a_n) = f(π a_1', .., π a_n') a_1'' ⋯ a_n''.
class ExtHhBridge {
 public:
  // hh_degree >= ext_degree; a larger Hochschild truncation only widens the
  // degrees where brackets can be tested for being coboundaries.
  ExtHhBridge(const HopfAlgebra& hopf, size_t ext_degree, size_t hh_degree = 0);
  ~ExtHhBridge();

  const HopfAlgebra& hopf() const;
  const ReducedBarComplex& ext() const;
  const HochschildComplex& hochschild() const;

  // Rows: Hochschild layout of degree n; columns: Ext cochain basis. n ≤ ext max.
  const Matrix& iota_matrix(size_t n) const;
  HochschildCochain iota(size_t n, const Vector& f) const;

  // First degree n where D_n ι_n != ι_{n+1} δ_n, checked for every n < N.
  std::optional<size_t> verify_chain_map() const;
  // First degree where ε ∘ ι(f) differs from f(π-, .., π-) on some basis input.
  std::optional<size_t> verify_counit_recovery() const;

  // Representatives of Ext^n (safe degrees n < N).
  const CohomologySpace& ext_cohomology(size_t n) const;
  FsBracket fs_bracket(size_t p, const Vector& f, size_t q, const Vector& g) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ExtHhReport {
  struct Degree {
    size_t degree;
    size_t ext_dim;
    size_t hh_dim;
    size_t iota_rank;
  };
  std::vector<Degree> degrees;
  bool chain_map = true;
  bool counit_recovery = true;
  size_t product_pairs = 0;
  size_t bracket_pairs = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Injectivity of ι on Ext^n for n < N, multiplicativity of ι up to
// coboundaries for representative pairs with p + q < N, and closure of the
// restricted bracket on the image for p + q - 1 < N.
ExtHhReport verify_ext_to_hh(const ExtHhBridge& bridge);

struct ExtClassTable {
  std::vector<size_t> dims;
  std::vector<Matrix> representatives;
  struct Product {
    size_t p, i, q, j;
    Vector coords;  // class of rep_i · rep_j in Ext^{p+q}
  };
  struct Bracket {
    size_t p, i, q, j;
    FsBracket value;
  };
  std::vector<Product> products;
  std::vector<Bracket> brackets;
  // Pairs whose product fails a·b = (-1)^{|a||b|} b·a on cohomology.
  std::vector<std::string> commutativity_failures;
};

// Products for p + q < N and brackets for p, q ≤ bracket_degree with
// p + q - 1 ≤ the Hochschild truncation.
ExtClassTable ext_class_table(const ExtHhBridge& bridge, size_t bracket_degree);

// dim Ext^n(k, H_ad) next to dim HH^n(H) for n < N.
std::vector<DimensionRow> adjoint_hh_dims(const HopfAlgebra& hopf, size_t max_degree);

}  // namespace gerst
