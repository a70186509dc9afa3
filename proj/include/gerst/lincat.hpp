#pragma once

#include <string>
#include <vector>

#include "gerst/matrix.hpp"

namespace gerst {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// A finite k-linear category given by structure constants. hom(a, b) is the
// space of morphisms a -> b in a fixed basis; for f in hom(a, b) and g in
// hom(b, c) the composite g∘f is stored as a coefficient vector in hom(a, c).
// Zero-dimensional hom spaces are allowed everywhere.
class LinearCategory {
 public:
  LinearCategory() = default;
  LinearCategory(Field field, std::vector<std::string> objects);

  const Field& field() const { return field_; }
  size_t num_objects() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }

  void set_hom_basis(size_t a, size_t b, std::vector<std::string> labels);
  // g in hom(b, c), f in hom(a, b); result in hom(a, c).
  void set_composition(size_t a, size_t b, size_t c, size_t g, size_t f, SparseVec result);
  void set_identity(size_t a, SparseVec id);

  size_t hom_dim(size_t a, size_t b) const { return hom_labels_[a * n_ + b].size(); }
  const std::vector<std::string>& hom_labels(size_t a, size_t b) const { return hom_labels_[a * n_ + b]; }
  const SparseVec& compose(size_t a, size_t b, size_t c, size_t g, size_t f) const {
    return comp_[(a * n_ + b) * n_ + c][g * hom_dim(a, b) + f];
  }
  const SparseVec& identity(size_t a) const { return identities_[a]; }
  // Sum of all hom dimensions.
  size_t total_dim() const;
  bool is_algebra() const { return n_ == 1; }

  // Bilinear extension of composition to coefficient vectors.
  Vector compose_vectors(size_t a, size_t b, size_t c, const Vector& g, const Vector& f) const;

  // Every associativity and unitality failure on basis elements, plus entries
  // that are not canonical field elements.
  ValidationReport validate() const;

  // Relabels the basis of every hom space: perm[a*n+b][old] = new position.
  LinearCategory permuted(const std::vector<std::vector<size_t>>& perm) const;

 private:
  Field field_;
  size_t n_ = 0;
  std::vector<std::string> objects_;
  std::vector<std::vector<std::string>> hom_labels_;
  std::vector<std::vector<SparseVec>> comp_;
  std::vector<SparseVec> identities_;
};

// Structure constants of a one-object category: mult[i * dim + j] = e_i * e_j.
LinearCategory from_algebra(size_t dim, const std::vector<SparseVec>& mult, const SparseVec& unit,
                            Field field, std::vector<std::string> labels = {});

struct Arrow {
  std::string name;
  size_t source;
  size_t target;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

// A path is a list of arrow indices in traversal order.
struct PathTerm {
  Scalar coeff;
  std::vector<size_t> arrows;
};
using Relation = std::vector<PathTerm>;

// Bound quiver category: objects are vertices, hom(a, b) is spanned by paths
// a -> b modulo the ideal generated by the relations. Every path of length
// max_path_length must lie in that ideal (NotFinite otherwise). Relations must
// consist of parallel paths of length >= 2 (NonAdmissible otherwise).
LinearCategory from_quiver(const Quiver& quiver, const std::vector<Relation>& relations,
                           size_t max_path_length, Field field);

}  // namespace gerst
