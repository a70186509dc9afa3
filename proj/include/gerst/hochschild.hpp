#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <map>
#include <vector>

#include "gerst/complex.hpp"
#include "gerst/lincat.hpp"

namespace gerst {

// Coordinates of the degree-n Hochschild cochains of a linear category. One
// component per object tuple (a_0, ..., a_n) whose spaces
//   Hom(A(a_1,a_0) ⊗ ... ⊗ A(a_n,a_{n-1}), A(a_n,a_0))
// are nonzero, in lexicographic tuple order. Inside a component the entry for
// output basis vector r and input basis vectors (f_1, ..., f_n) sits at
//   offset + r * in_size + (((f_1 * d_2 + f_2) * d_3 + ...) + f_n).
// Degree -1 is allowed and is the zero space (brackets of 0-cochains land there).
class HochschildLayout {
 public:
  struct Component {
    std::vector<uint32_t> objects;
    size_t offset = 0;
    size_t out_dim = 0;
    std::vector<size_t> in_dims;
    size_t in_size = 1;
    size_t size() const { return out_dim * in_size; }
  };

  HochschildLayout(std::shared_ptr<const LinearCategory> cat, int n);

  const LinearCategory& category() const { return *cat_; }
  int degree() const { return n_; }
  size_t dim() const { return dim_; }
  const std::vector<Component>& components() const { return comps_; }
  // Component index of the tuple a_0..a_n, or -1 when that space is zero.
  int64_t find(const uint32_t* objects) const;

 private:
  std::shared_ptr<const LinearCategory> cat_;
  int n_;
  size_t dim_ = 0;
  std::vector<Component> comps_;
  std::vector<int64_t> dense_index_;
  std::map<std::vector<uint32_t>, int64_t> sparse_index_;
};

class HochschildCochain {
 public:
  HochschildCochain() = default;
  HochschildCochain(std::shared_ptr<const HochschildLayout> layout, Vector values);

  int degree() const { return layout_->degree(); }
  const HochschildLayout& layout() const { return *layout_; }
  const std::shared_ptr<const HochschildLayout>& layout_ptr() const { return layout_; }
  const Vector& values() const { return values_; }
  Vector& values() { return values_; }

  friend bool operator==(const HochschildCochain& a, const HochschildCochain& b) {
    return a.layout_ == b.layout_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const HochschildLayout> layout_;
  Vector values_;
};

struct Hh0Algebra {
  Matrix basis;               // columns: cocycles of degree 0 (families of endomorphisms)
  std::vector<Vector> table;  // table[i * dim + j] = coordinates of basis_i · basis_j
  bool commutative = true;
};

// Not copyable or movable: the truncated complex builds its differentials
// through this object.
class HochschildComplex {
 public:
  HochschildComplex(LinearCategory cat, size_t max_degree);
  HochschildComplex(const HochschildComplex&) = delete;
  HochschildComplex& operator=(const HochschildComplex&) = delete;

  const LinearCategory& category() const { return *cat_; }
  const Field& field() const { return cat_->field(); }
  size_t max_degree() const { return complex_->max_degree(); }
  const TruncatedComplex& complex() const { return *complex_; }

  // Layouts exist for every degree, not just up to the truncation.
  std::shared_ptr<const HochschildLayout> layout(int n) const;
  void require_own(const HochschildCochain& c) const;

  HochschildCochain zero(int n) const;
  HochschildCochain from_vector(int n, Vector v) const;
  // e with e_a = id_a.
  HochschildCochain identity() const;
  // Seeded; entries uniform in F_p, or integers in [-3, 3] over Q.
  HochschildCochain random(size_t n, uint64_t seed) const;
  // Random combination of the canonical cocycle basis (n < N).
  HochschildCochain random_cocycle(size_t n, uint64_t seed) const;

  // dφ straight from the coboundary formula.
  HochschildCochain differential(const HochschildCochain& phi) const;
  // D_n assembled entry by entry from structure constants.
  Matrix differential_matrix(size_t n) const;

  Hh0Algebra hh0_product() const;

  // Fills a degree-n cochain by computing, for every component and input
  // basis tuple, the output vector. fn(component, inputs, out) adds into out.
  using EntryFn = std::function<void(const HochschildLayout::Component&, const uint32_t*, Scalar*)>;
  HochschildCochain tabulate(int n, const EntryFn& fn) const;

  // out += coeff · φ_{objects}(args), args[i] a vector in A(a_{i+1}, a_i).
  void evaluate(const HochschildCochain& phi, const uint32_t* objects, const SparseVec* const* args,
                const Scalar& coeff, Scalar* out) const;
  // Unit sparse vector e_i.
  const SparseVec& unit(size_t i) const { return units_[i]; }

 private:
  std::shared_ptr<const LinearCategory> cat_;
  std::vector<SparseVec> units_;
  mutable std::mutex layout_mutex_;
  mutable std::vector<std::shared_ptr<const HochschildLayout>> layouts_;
  std::unique_ptr<TruncatedComplex> complex_;
};

}  // namespace gerst
