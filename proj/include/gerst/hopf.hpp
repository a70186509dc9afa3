#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gerst/lincat.hpp"

namespace gerst {

// Finite-dimensional Hopf algebra in a fixed basis e_0..e_{d-1}.
// comult(i) is Δ(e_i) as a sparse vector over index j*d + k for e_j ⊗ e_k;
// antipode column i is S(e_i).
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(LinearCategory algebra, std::vector<SparseVec> comult, Vector counit, Matrix antipode);

  const LinearCategory& algebra() const { return algebra_; }
  const Field& field() const { return algebra_.field(); }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return algebra_.hom_labels(0, 0); }
  const SparseVec& comult(size_t i) const { return comult_[i]; }
  const Vector& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }

  const SparseVec& product(size_t i, size_t j) const { return algebra_.compose(0, 0, 0, i, j); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector unit() const { return to_dense(algebra_.identity(0), dim_); }
  // Element of H ⊗ H (index j*d + k) multiplied componentwise.
  Vector multiply_tensor(const Vector& x, const Vector& y) const;

  // Lists every failed Hopf axiom on basis elements; empty means valid.
  ValidationReport validate() const;
  bool is_cocommutative() const;

 private:
  LinearCategory algebra_;
  size_t dim_ = 0;
  std::vector<SparseVec> comult_;
  Vector counit_;
  Matrix antipode_;
};

// Left H-module: action(h, m) is e_h ▷ m_m as a sparse vector in M.
class HModule {
 public:
  HModule() = default;
  HModule(size_t hopf_dim, size_t dim, std::vector<SparseVec> action);

  size_t dim() const { return dim_; }
  const SparseVec& action(size_t h, size_t m) const { return action_[h * dim_ + m]; }
  // x ▷ v for coefficient vectors x in H and v in M.
  Vector act(const HopfAlgebra& hopf, const Vector& x, const Vector& v) const;
  ValidationReport validate(const HopfAlgebra& hopf) const;

 private:
  size_t hopf_dim_ = 0;
  size_t dim_ = 0;
  std::vector<SparseVec> action_;
};

// kG from a multiplication table table[i][j] = index of g_i g_j.
HopfAlgebra group_algebra(const std::vector<std::vector<size_t>>& table, Field field,
                          std::vector<std::string> labels = {});
// Taft algebra of dimension n^2 with grouplike g (g^n = 1), x (x^n = 0),
// g x = q x g, Δx = x⊗1 + g⊗x. Basis g^i x^j at index i*n + j. Without an
// explicit q the smallest primitive n-th root of unity is used.
HopfAlgebra taft(size_t n, Field field, std::optional<Scalar> q = std::nullopt);
HopfAlgebra sweedler(Field field);
// Smallest primitive n-th root of unity in the field (NoRootOfUnity if none).
Scalar primitive_root_of_unity(size_t n, const Field& field);

HModule adjoint_module(const HopfAlgebra& hopf);
HModule trivial_module(const HopfAlgebra& hopf);

// Cyclic and symmetric group tables used by the bundled fixtures.
std::vector<std::vector<size_t>> cyclic_group_table(size_t n);
std::vector<std::vector<size_t>> symmetric_group_table(size_t n, std::vector<std::string>* labels = nullptr);

}  // namespace gerst
