#include "gerst/extalg.hpp"

#include <map>
#include <mutex>

#include "gerst/gerstenhaber.hpp"
#include "gerst/parallel.hpp"

namespace gerst {

namespace {

size_t ipow(size_t b, size_t e) {
  size_t r = 1;
  for (size_t i = 0; i < e; ++i) r *= b;
  return r;
}

bool is_trivial_module(const HopfAlgebra& h, const HModule& m) {
  if (m.dim() != 1) return false;
  for (size_t x = 0; x < h.dim(); ++x) {
    const SparseVec& a = m.action(x, 0);
    const Scalar v = a.empty() ? h.field().zero() : a.front().value;
    if (!(v == h.counit()[x])) return false;
  }
  return true;
}

}  // namespace

ReducedBarComplex::ReducedBarComplex(HopfAlgebra hopf, HModule module, size_t max_degree)
    : data_([&] {
        ValidationReport rep = hopf.validate();
        if (!rep.ok()) throw Error(ErrorCode::InvalidAlgebra, "not a Hopf algebra: " + rep.violations.front());
        rep = module.validate(hopf);
        if (!rep.ok()) throw Error(ErrorCode::InvalidAlgebra, "not a module: " + rep.violations.front());
        auto d = std::make_shared<Data>();
        const Field& f = hopf.field();
        const size_t dim = hopf.dim();
        d->trivial = is_trivial_module(hopf, module);
        d->basis = kernel_basis(Matrix::from_rows(f, {hopf.counit()}, dim));
        d->aug = d->basis.cols();
        // The canonical kernel basis has a 1 at each free column and zeros at
        // the other free columns, so coordinates are read off those entries.
        size_t pivot = 0;
        while (hopf.counit()[pivot].is_zero()) ++pivot;
        std::vector<size_t> free_cols;
        for (size_t j = 0; j < dim; ++j) {
          if (j != pivot) free_cols.push_back(j);
        }
        auto coords = [&](const Vector& v) {
          Vector c(d->aug);
          for (size_t k = 0; k < d->aug; ++k) c[k] = v[free_cols[k]];
          return to_sparse(c);
        };
        const Vector one = hopf.unit();
        for (size_t j = 0; j < dim; ++j) {
          Vector v(dim, f.zero());
          v[j] = f.one();
          for (size_t t = 0; t < dim; ++t) f.add_mul(v[t], f.neg(hopf.counit()[j]), one[t]);
          d->proj.push_back(coords(v));
        }
        std::vector<Vector> cols(d->aug);
        for (size_t a = 0; a < d->aug; ++a) cols[a] = d->basis.dense_column(a);
        for (size_t a = 0; a < d->aug; ++a) {
          for (size_t b = 0; b < d->aug; ++b) d->mult.push_back(coords(hopf.multiply(cols[a], cols[b])));
        }
        for (size_t a = 0; a < d->aug; ++a) {
          for (size_t m = 0; m < module.dim(); ++m) {
            Vector e(module.dim(), f.zero());
            e[m] = f.one();
            d->act.push_back(to_sparse(module.act(hopf, cols[a], e)));
          }
        }
        d->hopf = std::move(hopf);
        d->module = std::move(module);
        return std::shared_ptr<const Data>(std::move(d));
      }()),
      complex_(data_->hopf.field(),
               [&] {
                 std::vector<size_t> dims;
                 for (size_t n = 0; n <= max_degree; ++n) dims.push_back(ipow(data_->aug, n) * data_->module.dim());
                 return dims;
               }(),
               [data = data_](size_t n) { return build_differential(*data, n); }) {}

Matrix ReducedBarComplex::build_differential(const Data& d, size_t n) {
  const Field& f = d.hopf.field();
  const size_t A = d.aug, mdim = d.module.dim();
  const size_t in_size = ipow(A, n), out_size = in_size * A;
  // products landing on coordinate c: (a, b, coefficient)
  struct Pair {
    size_t a, b;
    Scalar c;
  };
  std::vector<std::vector<Pair>> lands(A);
  for (size_t a = 0; a < A; ++a) {
    for (size_t b = 0; b < A; ++b) {
      for (const auto& e : d.mult[a * A + b]) lands[e.index].push_back({a, b, e.value});
    }
  }
  const size_t cols = in_size * mdim;
  std::vector<std::vector<Triplet>> per_col(cols);
  parallel_for(cols, [&](size_t col) {
    const size_t s = col / in_size, K = col % in_size;
    auto& out = per_col[col];
    // ā_1 ▷ f(ā_2 ..)
    for (size_t a = 0; a < A; ++a) {
      for (const auto& e : d.act[a * mdim + s]) out.push_back({static_cast<uint32_t>(e.index * out_size + a * in_size + K), static_cast<uint32_t>(col), e.value});
    }
    // digits of K, most significant first
    std::vector<size_t> k(n);
    for (size_t i = n, t = K; i-- > 0;) {
      k[i] = t % A;
      t /= A;
    }
    for (size_t i = 1; i <= n; ++i) {
      const Scalar sg = f.sign(static_cast<int>(i));
      size_t pre = 0, post = 0;
      for (size_t t = 0; t + 1 < i; ++t) pre = pre * A + k[t];
      for (size_t t = i; t < n; ++t) post = post * A + k[t];
      const size_t post_size = ipow(A, n - i);
      for (const auto& pr : lands[k[i - 1]]) {
        const size_t J = ((pre * A + pr.a) * A + pr.b) * post_size + post;
        out.push_back({static_cast<uint32_t>(s * out_size + J), static_cast<uint32_t>(col), f.mul(sg, pr.c)});
      }
    }
  });
  std::vector<Triplet> all;
  for (auto& v : per_col) all.insert(all.end(), v.begin(), v.end());
  return Matrix::from_triplets(f, out_size * mdim, cols, std::move(all));
}

ReducedBarComplex build_ext_complex(const HopfAlgebra& hopf, const HModule& module, size_t max_degree) {
  ReducedBarComplex ext(hopf, module, max_degree);
  if (auto bad = ext.complex().verify_d_squared()) {
    throw Error(ErrorCode::VerificationFailed, "reduced bar differential squares to nonzero in degree " +
                                                   std::to_string(*bad));
  }
  return ext;
}

Vector yoneda_product(const ReducedBarComplex& ext, size_t p, const Vector& f, size_t q, const Vector& g) {
  if (!ext.trivial_coefficients()) {
    throw Error(ErrorCode::Unsupported, "the Yoneda product is only implemented for trivial coefficients");
  }
  if (f.size() != ipow(ext.aug_dim(), p) || g.size() != ipow(ext.aug_dim(), q)) {
    throw Error(ErrorCode::DimensionMismatch, "cochain sizes do not match their degrees");
  }
  const Field& k = ext.field();
  Vector out(f.size() * g.size(), k.zero());
  for (size_t a = 0; a < f.size(); ++a) {
    if (f[a].is_zero()) continue;
    for (size_t b = 0; b < g.size(); ++b) {
      if (!g[b].is_zero()) out[a * g.size() + b] = k.mul(f[a], g[b]);
    }
  }
  return out;
}

struct ExtHhBridge::Impl {
  HopfAlgebra hopf;
  ReducedBarComplex ext;
  HochschildComplex hc;
  mutable std::vector<std::once_flag> iota_once;
  mutable std::vector<Matrix> iota_cache;
  mutable std::vector<std::once_flag> coh_once;
  mutable std::vector<CohomologySpace> coh_cache;

  Impl(const HopfAlgebra& h, size_t n_ext, size_t n_hh)
      : hopf(h),
        ext(build_ext_complex(h, trivial_module(h), n_ext)),
        hc(h.algebra(), n_hh),
        iota_once(n_ext + 2),
        iota_cache(n_ext + 2),
        coh_once(n_ext + 1),
        coh_cache(n_ext + 1) {}

  Matrix build_iota(size_t n) const;
};

Matrix ExtHhBridge::Impl::build_iota(size_t n) const {
  const Field& f = hopf.field();
  const size_t d = hopf.dim(), A = ext.aug_dim();
  const size_t tuples = ipow(d, n), rows = tuples * d, cols = ipow(A, n);
  struct State {
    Scalar coef;
    size_t aug;
    Vector leg;
  };
  std::vector<std::vector<Triplet>> per_tuple(tuples);
  parallel_for(tuples, [&](size_t t) {
    std::vector<size_t> idx(n);
    for (size_t i = n, r = t; i-- > 0;) {
      idx[i] = r % d;
      r /= d;
    }
    std::vector<State> states{{f.one(), 0, hopf.unit()}};
    for (size_t k = 0; k < n; ++k) {
      std::vector<State> next;
      for (const auto& st : states) {
        for (const auto& e : hopf.comult(idx[k])) {
          const size_t j = e.index / d, l = e.index % d;
          const SparseVec& pj = ext.projection(j);
          if (pj.empty()) continue;
          Vector leg(d, f.zero());
          for (size_t u = 0; u < d; ++u) {
            if (st.leg[u].is_zero()) continue;
            for (const auto& pe : hopf.product(u, l)) f.add_mul(leg[pe.index], st.leg[u], pe.value);
          }
          const Scalar c = f.mul(st.coef, e.value);
          for (const auto& a : pj) next.push_back({f.mul(c, a.value), st.aug * A + a.index, leg});
        }
      }
      states = std::move(next);
    }
    auto& out = per_tuple[t];
    for (const auto& st : states) {
      for (size_t r = 0; r < d; ++r) {
        if (!st.leg[r].is_zero()) out.push_back({static_cast<uint32_t>(r * tuples + t), static_cast<uint32_t>(st.aug), f.mul(st.coef, st.leg[r])});
      }
    }
  });
  std::vector<Triplet> all;
  for (auto& v : per_tuple) all.insert(all.end(), v.begin(), v.end());
  return Matrix::from_triplets(f, rows, cols, std::move(all));
}

ExtHhBridge::ExtHhBridge(const HopfAlgebra& hopf, size_t ext_degree, size_t hh_degree)
    : impl_(std::make_unique<Impl>(hopf, ext_degree, std::max(ext_degree, hh_degree))) {}

ExtHhBridge::~ExtHhBridge() = default;

const HopfAlgebra& ExtHhBridge::hopf() const { return impl_->hopf; }
const ReducedBarComplex& ExtHhBridge::ext() const { return impl_->ext; }
const HochschildComplex& ExtHhBridge::hochschild() const { return impl_->hc; }

const Matrix& ExtHhBridge::iota_matrix(size_t n) const {
  if (n > impl_->ext.max_degree() + 1 || n > impl_->hc.max_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "ι is not available in degree " + std::to_string(n));
  }
  std::call_once(impl_->iota_once[n], [&] { impl_->iota_cache[n] = impl_->build_iota(n); });
  return impl_->iota_cache[n];
}

HochschildCochain ExtHhBridge::iota(size_t n, const Vector& f) const {
  return impl_->hc.from_vector(static_cast<int>(n), iota_matrix(n).apply(f));
}

std::optional<size_t> ExtHhBridge::verify_chain_map() const {
  const auto& ext = impl_->ext.complex();
  const auto& hh = impl_->hc.complex();
  for (size_t n = 0; n < ext.max_degree(); ++n) {
    Matrix lhs = hh.differential(n).multiply(iota_matrix(n));
    Matrix rhs = iota_matrix(n + 1).multiply(ext.differential(n));
    if (!(lhs == rhs)) return n;
  }
  return std::nullopt;
}

std::optional<size_t> ExtHhBridge::verify_counit_recovery() const {
  const Field& k = impl_->hopf.field();
  const size_t d = impl_->hopf.dim(), A = impl_->ext.aug_dim();
  const Vector& eps = impl_->hopf.counit();
  for (size_t n = 0; n <= impl_->ext.max_degree(); ++n) {
    const Matrix& I = iota_matrix(n);
    const size_t tuples = ipow(d, n);
    // E[t][col] = ε applied to the output of column col on input tuple t
    std::vector<std::map<size_t, Scalar>> got(tuples);
    for (size_t c = 0; c < I.cols(); ++c) {
      for (const auto& e : I.column(c)) {
        const size_t r = e.index / tuples, t = e.index % tuples;
        if (eps[r].is_zero()) continue;
        Scalar& s = got[t][c];
        k.add_mul(s, e.value, eps[r]);
      }
    }
    for (size_t t = 0; t < tuples; ++t) {
      // expected: ⊗ π(e_{i_k}) in augmentation coordinates
      std::vector<size_t> idx(n);
      for (size_t i = n, r = t; i-- > 0;) {
        idx[i] = r % d;
        r /= d;
      }
      std::map<size_t, Scalar> want{{0, k.one()}};
      for (size_t i = 0; i < n; ++i) {
        std::map<size_t, Scalar> next;
        for (const auto& [a, c] : want) {
          for (const auto& pe : impl_->ext.projection(idx[i])) k.add_mul(next[a * A + pe.index], c, pe.value);
        }
        want = std::move(next);
      }
      auto prune = [](std::map<size_t, Scalar>& m) {
        std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
      };
      prune(want);
      prune(got[t]);
      if (want != got[t]) return n;
    }
  }
  return std::nullopt;
}

const CohomologySpace& ExtHhBridge::ext_cohomology(size_t n) const {
  if (n >= impl_->ext.max_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "Ext^" + std::to_string(n) + " is at or past the truncation");
  }
  std::call_once(impl_->coh_once[n], [&] { impl_->coh_cache[n] = impl_->ext.complex().cohomology(n); });
  return impl_->coh_cache[n];
}

FsBracket ExtHhBridge::fs_bracket(size_t p, const Vector& f, size_t q, const Vector& g) const {
  FsBracket out;
  const HochschildComplex& hc = impl_->hc;
  out.degree = static_cast<int>(p + q) - 1;
  if (out.degree < 0) {
    out.in_image = true;
    out.image_checked = true;
    return out;
  }
  const size_t n = static_cast<size_t>(out.degree);
  if (n > hc.max_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "bracket lands in degree " + std::to_string(n) +
                                                 " past the Hochschild truncation");
  }
  HochschildCochain br = bracket(hc, iota(p, f), iota(q, g));
  out.coboundary = hc.complex().is_coboundary(n, br.values()).has_value();
  const bool ext_safe = n < impl_->ext.max_degree();
  if (out.coboundary) {
    // the zero class is always in the image
    out.in_image = true;
    out.image_checked = true;
    if (ext_safe) out.ext_coords = Vector(ext_cohomology(n).dim, impl_->hopf.field().zero());
    return out;
  }
  if (!ext_safe) return out;
  out.image_checked = true;
  const CohomologySpace& ext = ext_cohomology(n);
  // Solve br = Σ c_k ι(rep_k) + D u.
  Matrix images = iota_matrix(n).multiply(ext.representatives);
  Matrix span = n == 0 ? images : images.hconcat(hc.complex().differential(n - 1));
  if (auto sol = membership(br.values(), span)) {
    out.in_image = true;
    out.ext_coords = Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(ext.dim));
  }
  return out;
}

ExtHhReport verify_ext_to_hh(const ExtHhBridge& bridge) {
  ExtHhReport rep;
  const auto& ext = bridge.ext();
  const HochschildComplex& hc = bridge.hochschild();
  const size_t N = ext.max_degree();
  const Field& k = ext.field();
  if (auto bad = bridge.verify_chain_map()) {
    rep.chain_map = false;
    rep.failures.push_back("ι is not a chain map in degree " + std::to_string(*bad));
  }
  if (auto bad = bridge.verify_counit_recovery()) {
    rep.counit_recovery = false;
    rep.failures.push_back("ε∘ι(f) differs from f∘π in degree " + std::to_string(*bad));
  }
  for (size_t n = 0; n < N; ++n) {
    const CohomologySpace& e = bridge.ext_cohomology(n);
    CohomologySpace h = hc.complex().cohomology(n);
    std::vector<Vector> reduced;
    for (size_t c = 0; c < e.dim; ++c) {
      reduced.push_back(h.reduce(bridge.iota(n, e.representatives.dense_column(c)).values()));
    }
    const size_t r = reduced.empty() ? 0 : rank(Matrix::from_dense_columns(k, h.dim, reduced));
    rep.degrees.push_back({n, e.dim, h.dim, r});
    if (r != e.dim) {
      rep.failures.push_back("ι is not injective on Ext^" + std::to_string(n) + " (rank " + std::to_string(r) +
                             " of " + std::to_string(e.dim) + ")");
    }
  }
  for (size_t p = 0; p < N; ++p) {
    for (size_t q = 0; p + q < N; ++q) {
      const auto& ep = bridge.ext_cohomology(p);
      const auto& eq = bridge.ext_cohomology(q);
      for (size_t i = 0; i < ep.dim; ++i) {
        for (size_t j = 0; j < eq.dim; ++j) {
          ++rep.product_pairs;
          const Vector f = ep.representatives.dense_column(i), g = eq.representatives.dense_column(j);
          auto lhs = bridge.iota(p + q, yoneda_product(ext, p, f, q, g));
          auto rhs = cup(hc, bridge.iota(p, f), bridge.iota(q, g));
          if (!hc.complex().is_coboundary(p + q, sub(lhs, rhs).values())) {
            rep.failures.push_back("ι(f·g) - ι(f)⌣ι(g) is not a coboundary for Ext^" + std::to_string(p) + " #" +
                                   std::to_string(i) + " and Ext^" + std::to_string(q) + " #" + std::to_string(j));
          }
        }
      }
    }
  }
  for (size_t p = 0; p < N; ++p) {
    for (size_t q = 0; q < N && p + q <= N; ++q) {
      if (p + q == 0) continue;
      const auto& ep = bridge.ext_cohomology(p);
      const auto& eq = bridge.ext_cohomology(q);
      for (size_t i = 0; i < ep.dim; ++i) {
        for (size_t j = 0; j < eq.dim; ++j) {
          ++rep.bracket_pairs;
          FsBracket b = bridge.fs_bracket(p, ep.representatives.dense_column(i), q, eq.representatives.dense_column(j));
          if (!b.in_image) {
            rep.failures.push_back("bracket of Ext^" + std::to_string(p) + " #" + std::to_string(i) + " and Ext^" +
                                   std::to_string(q) + " #" + std::to_string(j) + " leaves the image of ι");
          }
        }
      }
    }
  }
  return rep;
}

ExtClassTable ext_class_table(const ExtHhBridge& bridge, size_t bracket_degree) {
  ExtClassTable t;
  const auto& ext = bridge.ext();
  const size_t N = ext.max_degree();
  const Field& k = ext.field();
  for (size_t n = 0; n < N; ++n) {
    t.dims.push_back(bridge.ext_cohomology(n).dim);
    t.representatives.push_back(bridge.ext_cohomology(n).representatives);
  }
  for (size_t p = 0; p < N; ++p) {
    for (size_t q = 0; p + q < N; ++q) {
      for (size_t i = 0; i < t.dims[p]; ++i) {
        for (size_t j = 0; j < t.dims[q]; ++j) {
          const Vector f = t.representatives[p].dense_column(i), g = t.representatives[q].dense_column(j);
          const Vector fg = yoneda_product(ext, p, f, q, g);
          const CohomologySpace& target = bridge.ext_cohomology(p + q);
          t.products.push_back({p, i, q, j, target.reduce(fg)});
          Vector gf = yoneda_product(ext, q, g, p, f);
          const Scalar s = k.sign(static_cast<int>(p * q));
          Vector diff(fg.size());
          for (size_t u = 0; u < fg.size(); ++u) diff[u] = k.sub(fg[u], k.mul(s, gf[u]));
          if (!ext.complex().is_coboundary(p + q, diff)) {
            t.commutativity_failures.push_back("Ext^" + std::to_string(p) + " #" + std::to_string(i) + " · Ext^" +
                                               std::to_string(q) + " #" + std::to_string(j));
          }
        }
      }
    }
  }
  const size_t hh_top = bridge.hochschild().max_degree();
  for (size_t p = 0; p <= bracket_degree && p < N; ++p) {
    for (size_t q = 0; q <= bracket_degree && q < N; ++q) {
      if (p + q > hh_top + 1) continue;
      for (size_t i = 0; i < t.dims[p]; ++i) {
        for (size_t j = 0; j < t.dims[q]; ++j) {
          t.brackets.push_back(
              {p, i, q, j,
               bridge.fs_bracket(p, t.representatives[p].dense_column(i), q, t.representatives[q].dense_column(j))});
        }
      }
    }
  }
  return t;
}

std::vector<DimensionRow> adjoint_hh_dims(const HopfAlgebra& hopf, size_t max_degree) {
  ReducedBarComplex ext = build_ext_complex(hopf, adjoint_module(hopf), max_degree);
  HochschildComplex hc(hopf.algebra(), max_degree);
  auto e = ext.complex().cohomology_dims();
  auto h = hc.complex().cohomology_dims();
  std::vector<DimensionRow> rows;
  for (size_t n = 0; n < max_degree; ++n) rows.push_back({n, e[n], h[n]});
  return rows;
}

}  // namespace gerst
