#include "gerst/hochschild.hpp"

#include <algorithm>

#include "gerst/parallel.hpp"
#include "gerst/random.hpp"

namespace gerst {

namespace {

constexpr size_t kDenseIndexLimit = size_t{1} << 20;

// Splits every component's input range into chunks for parallel work.
struct Task {
  size_t comp;
  size_t begin;
  size_t end;
};

std::vector<Task> make_tasks(const HochschildLayout& layout) {
  std::vector<Task> tasks;
  for (size_t c = 0; c < layout.components().size(); ++c) {
    const size_t in = layout.components()[c].in_size;
    const size_t chunk = std::max<size_t>(1, std::min<size_t>(256, in / 8 + 1));
    for (size_t b = 0; b < in; b += chunk) tasks.push_back({c, b, std::min(in, b + chunk)});
  }
  return tasks;
}

void digits_of(size_t m, const std::vector<size_t>& dims, uint32_t* out) {
  for (size_t i = dims.size(); i-- > 0;) {
    out[i] = static_cast<uint32_t>(m % dims[i]);
    m /= dims[i];
  }
}

}  // namespace

HochschildLayout::HochschildLayout(std::shared_ptr<const LinearCategory> cat, int degree)
    : cat_(std::move(cat)), n_(degree) {
  if (degree < 0) return;
  const size_t n = static_cast<size_t>(degree);
  const size_t k = cat_->num_objects();
  size_t total = 1;
  bool dense = true;
  for (size_t i = 0; i <= n; ++i) {
    if (k != 0 && total > kDenseIndexLimit / std::max<size_t>(k, 1)) dense = false;
    total *= std::max<size_t>(k, 1);
  }
  if (dense) dense_index_.assign(k == 0 ? 0 : total, -1);
  // Depth-first enumeration in lexicographic order; prune as soon as an
  // intervening hom space is zero.
  std::vector<uint32_t> tuple(n + 1);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t in_size) {
    if (pos == n + 1) {
      const size_t out = cat_->hom_dim(tuple[n], tuple[0]);
      if (out == 0) return;
      Component c;
      c.objects = tuple;
      c.offset = dim_;
      c.out_dim = out;
      for (size_t i = 1; i <= n; ++i) c.in_dims.push_back(cat_->hom_dim(tuple[i], tuple[i - 1]));
      c.in_size = in_size;
      dim_ += c.size();
      const int64_t idx = static_cast<int64_t>(comps_.size());
      if (dense) {
        size_t key = 0;
        for (uint32_t o : tuple) key = key * k + o;
        dense_index_[key] = idx;
      } else {
        sparse_index_[tuple] = idx;
      }
      comps_.push_back(std::move(c));
      return;
    }
    for (uint32_t a = 0; a < k; ++a) {
      size_t d = 1;
      if (pos > 0) {
        d = cat_->hom_dim(a, tuple[pos - 1]);
        if (d == 0) continue;
      }
      tuple[pos] = a;
      rec(pos + 1, in_size * d);
    }
  };
  rec(0, 1);
}

int64_t HochschildLayout::find(const uint32_t* objects) const {
  if (n_ < 0) return -1;
  if (!dense_index_.empty()) {
    const size_t k = cat_->num_objects();
    size_t key = 0;
    for (int i = 0; i <= n_; ++i) key = key * k + objects[i];
    return dense_index_[key];
  }
  auto it = sparse_index_.find(std::vector<uint32_t>(objects, objects + static_cast<size_t>(n_) + 1));
  return it == sparse_index_.end() ? -1 : it->second;
}

HochschildCochain::HochschildCochain(std::shared_ptr<const HochschildLayout> layout, Vector values)
    : layout_(std::move(layout)), values_(std::move(values)) {
  if (values_.size() != layout_->dim()) throw Error(ErrorCode::DimensionMismatch, "cochain vector has the wrong length");
}

HochschildComplex::HochschildComplex(LinearCategory cat, size_t max_degree)
    : cat_(std::make_shared<const LinearCategory>(std::move(cat))) {
  ValidationReport rep = cat_->validate();
  if (!rep.ok()) throw Error(ErrorCode::InvalidAlgebra, "invalid category: " + rep.violations.front());
  if (max_degree < 1) throw Error(ErrorCode::DegreeOutOfRange, "the Hochschild complex needs N >= 1");
  size_t maxdim = 1;
  for (size_t a = 0; a < cat_->num_objects(); ++a) {
    for (size_t b = 0; b < cat_->num_objects(); ++b) maxdim = std::max(maxdim, cat_->hom_dim(a, b));
  }
  for (size_t i = 0; i < maxdim; ++i) units_.push_back({{static_cast<uint32_t>(i), cat_->field().one()}});
  std::vector<size_t> dims;
  for (size_t n = 0; n <= max_degree; ++n) dims.push_back(layout(static_cast<int>(n))->dim());
  complex_ = std::make_unique<TruncatedComplex>(cat_->field(), std::move(dims),
                                                [this](size_t n) { return differential_matrix(n); });
}

std::shared_ptr<const HochschildLayout> HochschildComplex::layout(int n) const {
  if (n < -1) throw Error(ErrorCode::DegreeOutOfRange, "cochain degree below -1");
  std::lock_guard<std::mutex> lock(layout_mutex_);
  const size_t slot = static_cast<size_t>(n + 1);
  if (layouts_.size() <= slot) layouts_.resize(slot + 1);
  if (!layouts_[slot]) layouts_[slot] = std::make_shared<const HochschildLayout>(cat_, n);
  return layouts_[slot];
}

void HochschildComplex::require_own(const HochschildCochain& c) const {
  if (!c.layout_ptr() || &c.layout().category() != cat_.get()) {
    throw Error(ErrorCode::DimensionMismatch, "cochain belongs to a different complex");
  }
}

HochschildCochain HochschildComplex::zero(int n) const {
  auto l = layout(n);
  return HochschildCochain(l, Vector(l->dim()));
}

HochschildCochain HochschildComplex::from_vector(int n, Vector v) const { return HochschildCochain(layout(n), std::move(v)); }

HochschildCochain HochschildComplex::identity() const {
  HochschildCochain e = zero(0);
  for (const auto& c : e.layout().components()) {
    for (const auto& en : cat_->identity(c.objects[0])) e.values()[c.offset + en.index] = en.value;
  }
  return e;
}


HochschildCochain HochschildComplex::random(size_t n, uint64_t seed) const {
  HochschildCochain c = zero(static_cast<int>(n));
  std::mt19937_64 rng(seed);
  for (auto& v : c.values()) v = random_scalar(field(), rng);
  return c;
}

HochschildCochain HochschildComplex::random_cocycle(size_t n, uint64_t seed) const {
  const Matrix& z = complex_->cocycles(n);
  std::mt19937_64 rng(seed);
  Vector coeffs(z.cols());
  for (auto& v : coeffs) v = random_scalar(field(), rng);
  return from_vector(static_cast<int>(n), z.apply(coeffs));
}

HochschildCochain HochschildComplex::tabulate(int degree, const EntryFn& fn) const {
  auto l = layout(degree);
  const size_t n = degree < 0 ? 0 : static_cast<size_t>(degree);
  Vector values(l->dim());
  const auto tasks = make_tasks(*l);
  parallel_for(tasks.size(), [&](size_t t) {
    const Task& task = tasks[t];
    const auto& comp = l->components()[task.comp];
    std::vector<uint32_t> digits(n);
    Vector out(comp.out_dim);
    for (size_t m = task.begin; m < task.end; ++m) {
      digits_of(m, comp.in_dims, digits.data());
      std::fill(out.begin(), out.end(), Scalar());
      fn(comp, digits.data(), out.data());
      for (size_t r = 0; r < comp.out_dim; ++r) values[comp.offset + r * comp.in_size + m] = std::move(out[r]);
    }
  });
  return HochschildCochain(l, std::move(values));
}

void HochschildComplex::evaluate(const HochschildCochain& phi, const uint32_t* objects, const SparseVec* const* args,
                                 const Scalar& coeff, Scalar* out) const {
  if (coeff.is_zero()) return;
  const HochschildLayout& l = phi.layout();
  const int64_t ci = l.find(objects);
  if (ci < 0) return;
  const auto& comp = l.components()[static_cast<size_t>(ci)];
  const size_t n = static_cast<size_t>(l.degree());
  const Field& f = field();
  for (size_t i = 0; i < n; ++i) {
    if (args[i]->empty()) return;
  }
  // Odometer over the supports of all arguments.
  std::vector<size_t> pos(n, 0);
  const Vector& vals = phi.values();
  while (true) {
    size_t m = 0;
    Scalar c = coeff;
    for (size_t i = 0; i < n; ++i) {
      const Entry& e = (*args[i])[pos[i]];
      m = m * comp.in_dims[i] + e.index;
      if (!e.value.is_one()) c = f.mul(c, e.value);
    }
    const size_t base = comp.offset + m;
    for (size_t r = 0; r < comp.out_dim; ++r) {
      const Scalar& v = vals[base + r * comp.in_size];
      if (!v.is_zero()) f.add_mul(out[r], c, v);
    }
    size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < args[i]->size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

HochschildCochain HochschildComplex::differential(const HochschildCochain& phi) const {
  require_own(phi);
  if (phi.degree() < 0) return zero(0);
  const size_t n = static_cast<size_t>(phi.degree());
  const LinearCategory& cat = *cat_;
  const Field& f = field();
  return tabulate(static_cast<int>(n) + 1, [&](const HochschildLayout::Component& comp, const uint32_t* fs, Scalar* out) {
    const uint32_t* a = comp.objects.data();  // a_0 .. a_{n+1}
    std::vector<const SparseVec*> args(n + 1);
    std::vector<uint32_t> objs(n + 1);
    // f_1 ∘ φ(f_2, ..., f_{n+1})
    {
      const size_t dmid = cat.hom_dim(a[n + 1], a[1]);
      Vector v(dmid);
      for (size_t k = 0; k < n; ++k) args[k] = &unit(fs[k + 1]);
      evaluate(phi, a + 1, args.data(), f.one(), v.data());
      for (size_t o = 0; o < dmid; ++o) {
        if (v[o].is_zero()) continue;
        for (const auto& e : cat.compose(a[n + 1], a[1], a[0], fs[0], o)) f.add_mul(out[e.index], v[o], e.value);
      }
    }
    // Σ (-1)^i φ(..., f_i ∘ f_{i+1}, ...)
    for (size_t i = 1; i <= n; ++i) {
      for (size_t k = 0, j = 0; k <= n + 1; ++k) {
        if (k != i) objs[j++] = a[k];
      }
      for (size_t k = 0, j = 0; k < n + 1; ++k) {
        if (k == i - 1) {
          args[j++] = &cat.compose(a[i + 1], a[i], a[i - 1], fs[i - 1], fs[i]);
          ++k;
        } else {
          args[j++] = &unit(fs[k]);
        }
      }
      evaluate(phi, objs.data(), args.data(), f.sign(static_cast<int>(i)), out);
    }
    // (-1)^{n+1} φ(f_1, ..., f_n) ∘ f_{n+1}
    {
      const size_t dout = cat.hom_dim(a[n], a[0]);
      Vector v(dout);
      for (size_t k = 0; k < n; ++k) args[k] = &unit(fs[k]);
      evaluate(phi, a, args.data(), f.sign(static_cast<int>(n + 1)), v.data());
      for (size_t o = 0; o < dout; ++o) {
        if (v[o].is_zero()) continue;
        for (const auto& e : cat.compose(a[n + 1], a[n], a[0], o, fs[n])) f.add_mul(out[e.index], v[o], e.value);
      }
    }
  });
}

Matrix HochschildComplex::differential_matrix(size_t n) const {
  const LinearCategory& cat = *cat_;
  const Field& f = field();
  auto src = layout(static_cast<int>(n));
  auto dst = layout(static_cast<int>(n) + 1);
  const auto tasks = make_tasks(*dst);
  std::vector<std::vector<Triplet>> parts(tasks.size());
  parallel_for(tasks.size(), [&](size_t t) {
    const Task& task = tasks[t];
    const auto& comp = dst->components()[task.comp];
    const uint32_t* a = comp.objects.data();
    std::vector<uint32_t> fs(n + 1), objs(n + 1), sub(n);
    auto& out = parts[t];
    // Column index of the source entry (tuple objs, output r, inputs sub).
    auto column = [&](int64_t ci, size_t r) {
      const auto& sc = src->components()[static_cast<size_t>(ci)];
      size_t m = 0;
      for (size_t k = 0; k < n; ++k) m = m * sc.in_dims[k] + sub[k];
      return static_cast<uint32_t>(sc.offset + r * sc.in_size + m);
    };
    auto row = [&](size_t r, size_t m) { return static_cast<uint32_t>(comp.offset + r * comp.in_size + m); };
    for (size_t m = task.begin; m < task.end; ++m) {
      digits_of(m, comp.in_dims, fs.data());
      // f_1 ∘ φ(f_2, ...): source tuple a_1..a_{n+1}
      if (int64_t ci = src->find(a + 1); ci >= 0) {
        for (size_t k = 0; k < n; ++k) sub[k] = fs[k + 1];
        for (size_t o = 0; o < cat.hom_dim(a[n + 1], a[1]); ++o) {
          const uint32_t col = column(ci, o);
          for (const auto& e : cat.compose(a[n + 1], a[1], a[0], fs[0], o)) out.push_back({row(e.index, m), col, e.value});
        }
      }
      for (size_t i = 1; i <= n; ++i) {
        for (size_t k = 0, j = 0; k <= n + 1; ++k) {
          if (k != i) objs[j++] = a[k];
        }
        const int64_t ci = src->find(objs.data());
        if (ci < 0) continue;
        const Scalar s = f.sign(static_cast<int>(i));
        for (size_t k = 0, j = 0; k < n + 1; ++k) {
          if (k != i - 1) sub[j++] = fs[k];
          else {
            sub[j++] = 0;
            ++k;
          }
        }
        for (const auto& e : cat.compose(a[i + 1], a[i], a[i - 1], fs[i - 1], fs[i])) {
          sub[i - 1] = e.index;
          const Scalar c = f.mul(s, e.value);
          for (size_t r = 0; r < comp.out_dim; ++r) out.push_back({row(r, m), column(ci, r), c});
        }
      }
      if (int64_t ci = src->find(a); ci >= 0) {
        const Scalar s = f.sign(static_cast<int>(n + 1));
        for (size_t k = 0; k < n; ++k) sub[k] = fs[k];
        for (size_t o = 0; o < cat.hom_dim(a[n], a[0]); ++o) {
          const uint32_t col = column(ci, o);
          for (const auto& e : cat.compose(a[n + 1], a[n], a[0], o, fs[n])) {
            out.push_back({row(e.index, m), col, f.mul(s, e.value)});
          }
        }
      }
    }
  });
  size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Triplet> all;
  all.reserve(total);
  for (auto& p : parts) {
    all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::vector<Triplet>().swap(p);
  }
  return Matrix::from_triplets(f, dst->dim(), src->dim(), std::move(all));
}

Hh0Algebra HochschildComplex::hh0_product() const {
  const Matrix& z = complex_->cocycles(0);
  const auto l = layout(0);
  const Field& f = field();
  Hh0Algebra out;
  out.basis = z;
  const size_t d = z.cols();
  ColumnSpace span(z);
  std::vector<Vector> cols(d);
  for (size_t i = 0; i < d; ++i) cols[i] = z.dense_column(i);
  out.table.resize(d * d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      Vector prod(l->dim());
      for (const auto& c : l->components()) {
        const size_t a = c.objects[0];
        const size_t e = c.out_dim;
        Vector x(cols[i].begin() + c.offset, cols[i].begin() + c.offset + e);
        Vector y(cols[j].begin() + c.offset, cols[j].begin() + c.offset + e);
        Vector xy = cat_->compose_vectors(a, a, a, x, y);
        for (size_t r = 0; r < e; ++r) prod[c.offset + r] = xy[r];
      }
      auto coords = span.solve(prod);
      if (!coords) throw Error(ErrorCode::VerificationFailed, "HH^0 is not closed under composition");
      out.table[i * d + j] = std::move(*coords);
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) out.commutative = out.commutative && out.table[i * d + j] == out.table[j * d + i];
  }
  (void)f;
  return out;
}

}  // namespace gerst
