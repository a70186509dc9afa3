#include "gerst/lincat.hpp"

#include <algorithm>
#include <map>

#include "gerst/linalg.hpp"

namespace gerst {

LinearCategory::LinearCategory(Field field, std::vector<std::string> objects)
    : field_(field),
      n_(objects.size()),
      objects_(std::move(objects)),
      hom_labels_(n_ * n_),
      comp_(n_ * n_ * n_),
      identities_(n_) {}

void LinearCategory::set_hom_basis(size_t a, size_t b, std::vector<std::string> labels) {
  if (a >= n_ || b >= n_) throw Error(ErrorCode::IndexError, "hom basis: object out of range");
  hom_labels_[a * n_ + b] = std::move(labels);
  // Resize every composition table that involves this hom space.
  for (size_t x = 0; x < n_; ++x) {
    for (size_t y = 0; y < n_; ++y) {
      for (size_t z = 0; z < n_; ++z) {
        comp_[(x * n_ + y) * n_ + z].assign(hom_dim(y, z) * hom_dim(x, y), SparseVec{});
      }
    }
  }
}

void LinearCategory::set_composition(size_t a, size_t b, size_t c, size_t g, size_t f, SparseVec result) {
  if (a >= n_ || b >= n_ || c >= n_) throw Error(ErrorCode::IndexError, "composition: object out of range");
  if (g >= hom_dim(b, c) || f >= hom_dim(a, b)) {
    throw Error(ErrorCode::IndexError, "composition: basis index out of range");
  }
  for (size_t i = 0; i < result.size(); ++i) {
    if (result[i].index >= hom_dim(a, c) || (i > 0 && result[i - 1].index >= result[i].index)) {
      throw Error(ErrorCode::IndexError, "composition: result index out of range or unsorted");
    }
  }
  comp_[(a * n_ + b) * n_ + c][g * hom_dim(a, b) + f] = std::move(result);
}

void LinearCategory::set_identity(size_t a, SparseVec id) {
  if (a >= n_) throw Error(ErrorCode::IndexError, "identity: object out of range");
  for (const auto& e : id) {
    if (e.index >= hom_dim(a, a)) throw Error(ErrorCode::IndexError, "identity: index out of range");
  }
  identities_[a] = std::move(id);
}

size_t LinearCategory::total_dim() const {
  size_t d = 0;
  for (const auto& h : hom_labels_) d += h.size();
  return d;
}

Vector LinearCategory::compose_vectors(size_t a, size_t b, size_t c, const Vector& g, const Vector& f) const {
  Vector out(hom_dim(a, c));
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (size_t j = 0; j < f.size(); ++j) {
      if (f[j].is_zero()) continue;
      const Scalar gf = field_.mul(g[i], f[j]);
      for (const auto& e : compose(a, b, c, i, j)) field_.add_mul(out[e.index], gf, e.value);
    }
  }
  return out;
}

ValidationReport LinearCategory::validate() const {
  ValidationReport rep;
  auto name = [&](size_t a, size_t b, size_t i) {
    return hom_labels(a, b)[i] + ":" + objects_[a] + "->" + objects_[b];
  };
  for (size_t t = 0; t < comp_.size(); ++t) {
    for (const auto& v : comp_[t]) {
      for (const auto& e : v) {
        if (!field_.contains(e.value)) {
          rep.violations.push_back("coefficient " + e.value.str() + " is not an element of " + field_.name());
        }
      }
    }
  }
  for (size_t a = 0; a < n_; ++a) {
    for (const auto& e : identities_[a]) {
      if (!field_.contains(e.value)) rep.violations.push_back("identity coefficient not in field");
    }
  }
  // Unitality.
  for (size_t a = 0; a < n_; ++a) {
    for (size_t b = 0; b < n_; ++b) {
      for (size_t f = 0; f < hom_dim(a, b); ++f) {
        Vector fv(hom_dim(a, b));
        fv[f] = field_.one();
        Vector left = compose_vectors(a, b, b, to_dense(identities_[b], hom_dim(b, b)), fv);
        Vector right = compose_vectors(a, a, b, fv, to_dense(identities_[a], hom_dim(a, a)));
        if (left != fv) rep.violations.push_back("id_" + objects_[b] + " o " + name(a, b, f) + " != " + name(a, b, f));
        if (right != fv) rep.violations.push_back(name(a, b, f) + " o id_" + objects_[a] + " != " + name(a, b, f));
      }
    }
  }
  // Associativity on basis triples.
  for (size_t a = 0; a < n_; ++a) {
    for (size_t b = 0; b < n_; ++b) {
      const size_t dab = hom_dim(a, b);
      if (dab == 0) continue;
      for (size_t c = 0; c < n_; ++c) {
        const size_t dbc = hom_dim(b, c);
        if (dbc == 0) continue;
        for (size_t d = 0; d < n_; ++d) {
          const size_t dcd = hom_dim(c, d);
          if (dcd == 0) continue;
          for (size_t f = 0; f < dab; ++f) {
            for (size_t g = 0; g < dbc; ++g) {
              const Vector gf = to_dense(compose(a, b, c, g, f), hom_dim(a, c));
              for (size_t h = 0; h < dcd; ++h) {
                const Vector hg = to_dense(compose(b, c, d, h, g), hom_dim(b, d));
                Vector hv(dcd);
                hv[h] = field_.one();
                Vector fv(dab);
                fv[f] = field_.one();
                if (compose_vectors(a, c, d, hv, gf) != compose_vectors(a, b, d, hg, fv)) {
                  rep.violations.push_back("(" + name(c, d, h) + " o " + name(b, c, g) + ") o " + name(a, b, f) +
                                           " != " + name(c, d, h) + " o (" + name(b, c, g) + " o " +
                                           name(a, b, f) + ")");
                }
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

LinearCategory LinearCategory::permuted(const std::vector<std::vector<size_t>>& perm) const {
  LinearCategory out(field_, objects_);
  for (size_t a = 0; a < n_; ++a) {
    for (size_t b = 0; b < n_; ++b) {
      const auto& p = perm[a * n_ + b];
      std::vector<std::string> labels(hom_dim(a, b));
      for (size_t i = 0; i < labels.size(); ++i) labels[p[i]] = hom_labels(a, b)[i];
      out.set_hom_basis(a, b, std::move(labels));
    }
  }
  auto remap = [&](const SparseVec& v, size_t a, size_t b) {
    SparseVec r;
    for (const auto& e : v) r.push_back({static_cast<uint32_t>(perm[a * n_ + b][e.index]), e.value});
    std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    return r;
  };
  for (size_t a = 0; a < n_; ++a) {
    out.set_identity(a, remap(identities_[a], a, a));
    for (size_t b = 0; b < n_; ++b) {
      for (size_t c = 0; c < n_; ++c) {
        for (size_t g = 0; g < hom_dim(b, c); ++g) {
          for (size_t f = 0; f < hom_dim(a, b); ++f) {
            out.set_composition(a, b, c, perm[b * n_ + c][g], perm[a * n_ + b][f],
                                remap(compose(a, b, c, g, f), a, c));
          }
        }
      }
    }
  }
  return out;
}

LinearCategory from_algebra(size_t dim, const std::vector<SparseVec>& mult, const SparseVec& unit, Field field,
                            std::vector<std::string> labels) {
  if (mult.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch, "multiplication table must have dim^2 entries");
  }
  if (labels.empty()) {
    for (size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim) throw Error(ErrorCode::DimensionMismatch, "label count differs from dimension");
  LinearCategory c(field, {"*"});
  c.set_hom_basis(0, 0, std::move(labels));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) c.set_composition(0, 0, 0, i, j, mult[i * dim + j]);
  }
  c.set_identity(0, unit);
  ValidationReport rep = c.validate();
  if (!rep.ok()) {
    std::string msg = "invalid algebra: " + rep.violations.front();
    if (rep.violations.size() > 1) msg += " (and " + std::to_string(rep.violations.size() - 1) + " more)";
    throw Error(ErrorCode::InvalidAlgebra, msg);
  }
  return c;
}

namespace {

struct Path {
  size_t source;
  size_t target;
  std::vector<size_t> arrows;
};

// Length-lexicographic order on arrow sequences (trivial paths by vertex).
bool path_less(const Path& x, const Path& y) {
  if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
  if (x.arrows != y.arrows) return x.arrows < y.arrows;
  return x.source < y.source;
}

}  // namespace

LinearCategory from_quiver(const Quiver& quiver, const std::vector<Relation>& relations, size_t max_path_length,
                           Field field) {
  const size_t nv = quiver.vertices.size();
  for (const auto& a : quiver.arrows) {
    if (a.source >= nv || a.target >= nv) throw Error(ErrorCode::IndexError, "arrow '" + a.name + "' endpoint out of range");
  }
  const size_t cap = max_path_length;
  if (cap == 0 && !quiver.arrows.empty()) throw Error(ErrorCode::NotFinite, "arrows survive a path length cap of 0");
  std::vector<Path> paths;
  for (size_t v = 0; v < nv; ++v) paths.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (size_t i = 0; i < quiver.arrows.size(); ++i) {
    frontier.push_back({quiver.arrows[i].source, quiver.arrows[i].target, {i}});
  }
  for (size_t len = 1; len <= cap && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      paths.push_back(p);
      if (len == cap) continue;
      for (size_t i = 0; i < quiver.arrows.size(); ++i) {
        if (quiver.arrows[i].source != p.target) continue;
        Path q = p;
        q.arrows.push_back(i);
        q.target = quiver.arrows[i].target;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(paths.begin(), paths.end(), path_less);
  const size_t np = paths.size();
  std::map<std::pair<size_t, std::vector<size_t>>, size_t> rank_of;  // (source, arrows) -> rank
  for (size_t r = 0; r < np; ++r) rank_of[{paths[r].source, paths[r].arrows}] = r;
  // Larger paths get smaller column indices so that pivots are leading terms.
  auto column_of = [&](size_t r) { return np - 1 - r; };
  auto endpoints = [&](const std::vector<size_t>& arrows, size_t& s, size_t& t) {
    s = quiver.arrows.at(arrows.front()).source;
    t = quiver.arrows.at(arrows.front()).target;
    for (size_t k = 1; k < arrows.size(); ++k) {
      const Arrow& a = quiver.arrows.at(arrows[k]);
      if (a.source != t) return false;
      t = a.target;
    }
    return true;
  };

  std::vector<SparseVec> ideal;
  for (size_t ri = 0; ri < relations.size(); ++ri) {
    const Relation& rel = relations[ri];
    if (rel.empty()) continue;
    size_t rs = 0, rt = 0;
    size_t min_len = SIZE_MAX;
    for (size_t k = 0; k < rel.size(); ++k) {
      const PathTerm& term = rel[k];
      if (term.arrows.size() < 2) {
        throw Error(ErrorCode::NonAdmissible, "relation " + std::to_string(ri) + " contains a path of length < 2");
      }
      size_t s, t;
      if (!endpoints(term.arrows, s, t)) {
        throw Error(ErrorCode::NonAdmissible, "relation " + std::to_string(ri) + " contains a non-composable path");
      }
      if (k == 0) {
        rs = s;
        rt = t;
      } else if (s != rs || t != rt) {
        throw Error(ErrorCode::NonAdmissible, "relation " + std::to_string(ri) + " mixes non-parallel paths");
      }
      min_len = std::min(min_len, term.arrows.size());
    }
    for (const Path& pre : paths) {
      if (pre.target != rs || pre.arrows.size() + min_len > cap) continue;
      for (const Path& post : paths) {
        if (post.source != rt || pre.arrows.size() + min_len + post.arrows.size() > cap) continue;
        std::map<size_t, Scalar> acc;
        for (const PathTerm& term : rel) {
          std::vector<size_t> full = pre.arrows;
          full.insert(full.end(), term.arrows.begin(), term.arrows.end());
          full.insert(full.end(), post.arrows.begin(), post.arrows.end());
          if (full.size() > cap) continue;
          const size_t col = column_of(rank_of.at({pre.source, full}));
          acc[col] = field.add(acc[col], term.coeff);
        }
        SparseVec v;
        for (auto& [col, c] : acc) {
          if (!c.is_zero()) v.push_back({static_cast<uint32_t>(col), c});
        }
        if (!v.empty()) ideal.push_back(std::move(v));
      }
    }
  }
  const Matrix ideal_rows = Matrix::from_columns(field, np, ideal).transpose();
  const RrefResult red = rref(ideal_rows);
  std::vector<int64_t> pivot_row(np, -1);
  for (size_t i = 0; i < red.pivots.size(); ++i) pivot_row[red.pivots[i]] = static_cast<int64_t>(i);
  for (size_t r = 0; r < np; ++r) {
    if (paths[r].arrows.size() == cap && cap > 0 && pivot_row[column_of(r)] < 0) {
      throw Error(ErrorCode::NotFinite, "a path of length " + std::to_string(cap) +
                                            " survives the relations; raise max_path_length or add relations");
    }
  }
  const Matrix red_rows = red.reduced.transpose();  // column i = reduced row i

  // Standard paths form the hom bases.
  std::vector<int64_t> basis_pos(np, -1);
  LinearCategory cat(field, quiver.vertices);
  std::vector<std::vector<size_t>> hom_paths(nv * nv);
  for (size_t r = 0; r < np; ++r) {
    if (pivot_row[column_of(r)] >= 0 || paths[r].arrows.size() >= std::max<size_t>(cap, 1)) continue;
    auto& list = hom_paths[paths[r].source * nv + paths[r].target];
    basis_pos[r] = static_cast<int64_t>(list.size());
    list.push_back(r);
  }
  for (size_t a = 0; a < nv; ++a) {
    for (size_t b = 0; b < nv; ++b) {
      std::vector<std::string> labels;
      for (size_t r : hom_paths[a * nv + b]) {
        if (paths[r].arrows.empty()) {
          labels.push_back("e_" + quiver.vertices[a]);
        } else {
          std::string s;
          for (size_t k = 0; k < paths[r].arrows.size(); ++k) {
            if (k) s += ".";
            s += quiver.arrows[paths[r].arrows[k]].name;
          }
          labels.push_back(s);
        }
      }
      cat.set_hom_basis(a, b, std::move(labels));
    }
  }
  // Normal form of a path: itself if standard, minus the tail of its reduced row otherwise.
  auto normal_form = [&](size_t source, const std::vector<size_t>& arrows) {
    SparseVec out;
    if (arrows.size() > cap) return out;
    const size_t r = rank_of.at({source, arrows});
    const int64_t pr = pivot_row[column_of(r)];
    if (pr < 0) {
      out.push_back({static_cast<uint32_t>(basis_pos[r]), field.one()});
      return out;
    }
    for (const auto& e : red_rows.column(static_cast<size_t>(pr))) {
      const size_t rr = np - 1 - e.index;
      if (rr == r) continue;
      out.push_back({static_cast<uint32_t>(basis_pos[rr]), field.neg(e.value)});
    }
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    return out;
  };
  for (size_t a = 0; a < nv; ++a) cat.set_identity(a, normal_form(a, {}));
  for (size_t a = 0; a < nv; ++a) {
    for (size_t b = 0; b < nv; ++b) {
      for (size_t c = 0; c < nv; ++c) {
        const auto& fs = hom_paths[a * nv + b];
        const auto& gs = hom_paths[b * nv + c];
        for (size_t gi = 0; gi < gs.size(); ++gi) {
          for (size_t fi = 0; fi < fs.size(); ++fi) {
            std::vector<size_t> full = paths[fs[fi]].arrows;
            const auto& ga = paths[gs[gi]].arrows;
            full.insert(full.end(), ga.begin(), ga.end());
            cat.set_composition(a, b, c, gi, fi, normal_form(a, full));
          }
        }
      }
    }
  }
  return cat;
}

}  // namespace gerst
