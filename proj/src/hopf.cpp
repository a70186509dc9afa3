#include "gerst/hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gerst {

namespace {

SparseVec unit_vec(size_t i) { return SparseVec{{static_cast<uint32_t>(i), Scalar(1)}}; }

std::string vec_str(const Vector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

HopfAlgebra::HopfAlgebra(LinearCategory algebra, std::vector<SparseVec> comult, Vector counit, Matrix antipode)
    : algebra_(std::move(algebra)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  if (!algebra_.is_algebra()) throw Error(ErrorCode::InvalidAlgebra, "Hopf algebra needs a one-object category");
  dim_ = algebra_.hom_dim(0, 0);
  if (comult_.size() != dim_ || counit_.size() != dim_ || antipode_.rows() != dim_ || antipode_.cols() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "Hopf structure tensors do not match the algebra dimension");
  }
  require_same_field(field(), antipode_.field());
  for (const auto& c : comult_) {
    for (const auto& e : c) {
      if (e.index >= dim_ * dim_) throw Error(ErrorCode::IndexError, "comultiplication index out of range");
    }
  }
}

Vector HopfAlgebra::multiply(const Vector& x, const Vector& y) const {
  return algebra_.compose_vectors(0, 0, 0, x, y);
}

Vector HopfAlgebra::multiply_tensor(const Vector& x, const Vector& y) const {
  const Field& f = field();
  Vector out(dim_ * dim_);
  for (size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (size_t b = 0; b < y.size(); ++b) {
      if (y[b].is_zero()) continue;
      const Scalar c = f.mul(x[a], y[b]);
      const SparseVec& left = product(a / dim_, b / dim_);
      const SparseVec& right = product(a % dim_, b % dim_);
      for (const auto& l : left) {
        const Scalar cl = f.mul(c, l.value);
        for (const auto& r : right) f.add_mul(out[l.index * dim_ + r.index], cl, r.value);
      }
    }
  }
  return out;
}

ValidationReport HopfAlgebra::validate() const {
  ValidationReport rep = algebra_.validate();
  const Field& f = field();
  const size_t d = dim_;
  const auto& lab = labels();
  auto delta = [&](size_t i) { return to_dense(comult_[i], d * d); };
  for (const auto& v : counit_) {
    if (!f.contains(v)) rep.violations.push_back("counit coefficient " + v.str() + " not in " + f.name());
  }
  for (size_t i = 0; i < d; ++i) {
    for (const auto& e : comult_[i]) {
      if (!f.contains(e.value)) rep.violations.push_back("comultiplication coefficient not in field");
    }
  }
  for (size_t i = 0; i < d; ++i) {
    const Vector di = delta(i);
    // Coassociativity.
    Vector left(d * d * d), right(d * d * d);
    for (const auto& e : comult_[i]) {
      const size_t j = e.index / d, k = e.index % d;
      for (const auto& x : comult_[j]) f.add_mul(left[x.index * d + k], e.value, x.value);
      for (const auto& x : comult_[k]) f.add_mul(right[j * d * d + x.index], e.value, x.value);
    }
    if (left != right) rep.violations.push_back("coassociativity fails on " + lab[i]);
    // Counit.
    Vector cl(d), cr(d);
    for (const auto& e : comult_[i]) {
      const size_t j = e.index / d, k = e.index % d;
      f.add_mul(cl[k], counit_[j], e.value);
      f.add_mul(cr[j], counit_[k], e.value);
    }
    const Vector ei = to_dense(unit_vec(i), d);
    if (cl != ei) rep.violations.push_back("(eps ⊗ id)Δ != id on " + lab[i]);
    if (cr != ei) rep.violations.push_back("(id ⊗ eps)Δ != id on " + lab[i]);
    // Antipode.
    Vector sl(d), sr(d);
    for (const auto& e : comult_[i]) {
      const size_t j = e.index / d, k = e.index % d;
      const Vector sj = antipode_.dense_column(j);
      const Vector sk = antipode_.dense_column(k);
      Vector a = multiply(sj, to_dense(unit_vec(k), d));
      Vector b = multiply(to_dense(unit_vec(j), d), sk);
      for (size_t t = 0; t < d; ++t) {
        f.add_mul(sl[t], e.value, a[t]);
        f.add_mul(sr[t], e.value, b[t]);
      }
    }
    Vector expect = unit();
    for (auto& v : expect) v = f.mul(v, counit_[i]);
    if (sl != expect) rep.violations.push_back("m(S ⊗ id)Δ != u eps on " + lab[i] + ": got " + vec_str(sl));
    if (sr != expect) rep.violations.push_back("m(id ⊗ S)Δ != u eps on " + lab[i] + ": got " + vec_str(sr));
    // Δ and eps are algebra maps.
    for (size_t j = 0; j < d; ++j) {
      const Vector prod = to_dense(product(i, j), d);
      Vector dprod(d * d);
      Scalar eprod;
      for (size_t t = 0; t < d; ++t) {
        if (prod[t].is_zero()) continue;
        for (const auto& e : comult_[t]) f.add_mul(dprod[e.index], prod[t], e.value);
        f.add_mul(eprod, prod[t], counit_[t]);
      }
      if (dprod != multiply_tensor(di, delta(j))) {
        rep.violations.push_back("Δ(" + lab[i] + "·" + lab[j] + ") != Δ(" + lab[i] + ")Δ(" + lab[j] + ")");
      }
      if (eprod != f.mul(counit_[i], counit_[j])) {
        rep.violations.push_back("eps(" + lab[i] + "·" + lab[j] + ") != eps(" + lab[i] + ")eps(" + lab[j] + ")");
      }
    }
  }
  const Vector one = unit();
  Vector d1(d * d);
  Scalar e1;
  for (size_t t = 0; t < d; ++t) {
    if (one[t].is_zero()) continue;
    for (const auto& e : comult_[t]) f.add_mul(d1[e.index], one[t], e.value);
    f.add_mul(e1, one[t], counit_[t]);
  }
  Vector one_one(d * d);
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) one_one[a * d + b] = f.mul(one[a], one[b]);
  }
  if (d1 != one_one) rep.violations.push_back("Δ(1) != 1 ⊗ 1");
  if (e1 != f.one()) rep.violations.push_back("eps(1) != 1");
  return rep;
}

bool HopfAlgebra::is_cocommutative() const {
  const size_t d = dim_;
  for (size_t i = 0; i < d; ++i) {
    SparseVec flipped;
    for (const auto& e : comult_[i]) flipped.push_back({static_cast<uint32_t>((e.index % d) * d + e.index / d), e.value});
    std::sort(flipped.begin(), flipped.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    if (flipped.size() != comult_[i].size()) return false;
    for (size_t k = 0; k < flipped.size(); ++k) {
      if (flipped[k].index != comult_[i][k].index || flipped[k].value != comult_[i][k].value) return false;
    }
  }
  return true;
}

HModule::HModule(size_t hopf_dim, size_t dim, std::vector<SparseVec> action)
    : hopf_dim_(hopf_dim), dim_(dim), action_(std::move(action)) {
  if (action_.size() != hopf_dim_ * dim_) throw Error(ErrorCode::DimensionMismatch, "module action table has wrong size");
}

Vector HModule::act(const HopfAlgebra& hopf, const Vector& x, const Vector& v) const {
  const Field& f = hopf.field();
  Vector out(dim_);
  for (size_t h = 0; h < x.size(); ++h) {
    if (x[h].is_zero()) continue;
    for (size_t m = 0; m < v.size(); ++m) {
      if (v[m].is_zero()) continue;
      const Scalar c = f.mul(x[h], v[m]);
      for (const auto& e : action(h, m)) f.add_mul(out[e.index], c, e.value);
    }
  }
  return out;
}

ValidationReport HModule::validate(const HopfAlgebra& hopf) const {
  ValidationReport rep;
  const size_t d = hopf.dim();
  if (d != hopf_dim_) {
    rep.violations.push_back("module was built for a Hopf algebra of another dimension");
    return rep;
  }
  const auto& lab = hopf.labels();
  for (size_t m = 0; m < dim_; ++m) {
    const Vector vm = to_dense(unit_vec(m), dim_);
    if (act(hopf, hopf.unit(), vm) != vm) rep.violations.push_back("1 ▷ m" + std::to_string(m) + " != m" + std::to_string(m));
    for (size_t a = 0; a < d; ++a) {
      const Vector ea = to_dense(unit_vec(a), d);
      const Vector inner_cache = vm;
      for (size_t b = 0; b < d; ++b) {
        const Vector eb = to_dense(unit_vec(b), d);
        const Vector lhs = act(hopf, hopf.multiply(ea, eb), vm);
        const Vector rhs = act(hopf, ea, act(hopf, eb, inner_cache));
        if (lhs != rhs) {
          rep.violations.push_back("(" + lab[a] + "·" + lab[b] + ") ▷ m" + std::to_string(m) + " != " + lab[a] +
                                   " ▷ (" + lab[b] + " ▷ m" + std::to_string(m) + ")");
        }
      }
    }
  }
  return rep;
}

HModule adjoint_module(const HopfAlgebra& hopf) {
  ValidationReport rep = hopf.validate();
  if (!rep.ok()) throw Error(ErrorCode::InvalidAlgebra, "adjoint module of an invalid Hopf algebra: " + rep.violations.front());
  const size_t d = hopf.dim();
  const Field& f = hopf.field();
  std::vector<SparseVec> action(d * d);
  for (size_t x = 0; x < d; ++x) {
    for (size_t y = 0; y < d; ++y) {
      // x ▷ y = x' y S(x'')
      Vector out(d);
      for (const auto& e : hopf.comult(x)) {
        const size_t j = e.index / d, k = e.index % d;
        Vector jy = to_dense(hopf.product(j, y), d);
        Vector t = hopf.multiply(jy, hopf.antipode().dense_column(k));
        for (size_t i = 0; i < d; ++i) f.add_mul(out[i], e.value, t[i]);
      }
      action[x * d + y] = to_sparse(out);
    }
  }
  HModule m(d, d, std::move(action));
  rep = m.validate(hopf);
  if (!rep.ok()) throw Error(ErrorCode::VerificationFailed, "adjoint action fails module axioms: " + rep.violations.front());
  return m;
}

HModule trivial_module(const HopfAlgebra& hopf) {
  std::vector<SparseVec> action(hopf.dim());
  for (size_t h = 0; h < hopf.dim(); ++h) {
    if (!hopf.counit()[h].is_zero()) action[h].push_back({0, hopf.counit()[h]});
  }
  return HModule(hopf.dim(), 1, std::move(action));
}

HopfAlgebra group_algebra(const std::vector<std::vector<size_t>>& table, Field field, std::vector<std::string> labels) {
  const size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "multiplication table is not square");
    for (size_t v : row) {
      if (v >= n) throw Error(ErrorCode::NotAGroup, "multiplication table entry out of range");
    }
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::NotAGroup, "multiplication is not associative");
        }
      }
    }
  }
  size_t e = n;
  for (size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (size_t b = 0; b < n; ++b) ok = ok && table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) throw Error(ErrorCode::NotAGroup, "no identity element");
  std::vector<size_t> inverse(n, n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (table[a][b] == e && table[b][a] == e) inverse[a] = b;
    }
    if (inverse[a] == n) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    for (size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  std::vector<SparseVec> mult(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) mult[a * n + b] = unit_vec(table[a][b]);
  }
  LinearCategory alg = from_algebra(n, mult, unit_vec(e), field, std::move(labels));
  std::vector<SparseVec> comult(n);
  Vector counit(n, field.one());
  Matrix s(field, n, n);
  std::vector<SparseVec> scols(n);
  for (size_t a = 0; a < n; ++a) {
    comult[a] = unit_vec(a * n + a);
    scols[a] = unit_vec(inverse[a]);
  }
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit),
                     Matrix::from_columns(field, n, std::move(scols)));
}

Scalar primitive_root_of_unity(size_t n, const Field& field) {
  if (n == 0) throw Error(ErrorCode::NoRootOfUnity, "order must be positive");
  if (n == 1) return field.one();
  if (!field.is_prime()) {
    if (n == 2) return field.from_int(-1);
    throw Error(ErrorCode::NoRootOfUnity, "Q has no primitive " + std::to_string(n) + "-th root of unity");
  }
  const uint64_t p = field.characteristic();
  if ((p - 1) % n != 0) {
    throw Error(ErrorCode::NoRootOfUnity,
                "F" + std::to_string(p) + " has no primitive " + std::to_string(n) + "-th root of unity");
  }
  for (uint64_t c = 2; c < p; ++c) {
    const Scalar q = field.from_int(static_cast<int64_t>(c));
    if (!field.pow(q, n).is_one()) continue;
    bool primitive = true;
    for (size_t k = 1; k < n && primitive; ++k) primitive = !field.pow(q, k).is_one();
    if (primitive) return q;
  }
  throw Error(ErrorCode::NoRootOfUnity, "no primitive root found");
}

HopfAlgebra taft(size_t n, Field field, std::optional<Scalar> q_opt) {
  if (n == 0) throw Error(ErrorCode::Usage, "taft order must be positive");
  Scalar q = q_opt ? *q_opt : primitive_root_of_unity(n, field);
  if (q_opt) {
    if (!field.contains(q) || !field.pow(q, n).is_one()) throw Error(ErrorCode::NoRootOfUnity, "q^n != 1");
    for (size_t k = 1; k < n; ++k) {
      if (field.pow(q, k).is_one()) throw Error(ErrorCode::NoRootOfUnity, "q is not a primitive root");
    }
  }
  const size_t d = n * n;
  auto idx = [n](size_t gi, size_t xj) { return gi * n + xj; };
  std::vector<std::string> labels(d);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::string s;
      if (i > 0) s += (i == 1) ? "g" : "g^" + std::to_string(i);
      if (j > 0) {
        if (!s.empty()) s += " ";
        s += (j == 1) ? "x" : "x^" + std::to_string(j);
      }
      labels[idx(i, j)] = s.empty() ? "1" : s;
    }
  }
  const Scalar qinv = field.inv(q);
  // (g^a x^b)(g^c x^e) = q^{-bc} g^{a+c} x^{b+e}
  std::vector<SparseVec> mult(d * d);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) {
        for (size_t e = 0; e < n; ++e) {
          if (b + e >= n) continue;
          mult[idx(a, b) * d + idx(c, e)] = {{static_cast<uint32_t>(idx((a + c) % n, b + e)), field.pow(qinv, b * c)}};
        }
      }
    }
  }
  LinearCategory alg = from_algebra(d, mult, unit_vec(idx(0, 0)), field, labels);
  HopfAlgebra shell(alg, std::vector<SparseVec>(d), Vector(d), Matrix(field, d, d));

  // Δ and S are determined by their values on g and x.
  Vector dg(d * d), dx(d * d);
  dg[idx(1 % n, 0) * d + idx(1 % n, 0)] = field.one();
  if (n > 1) {
    dx[idx(0, 1) * d + idx(0, 0)] = field.add(dx[idx(0, 1) * d + idx(0, 0)], field.one());
    dx[idx(1 % n, 0) * d + idx(0, 1)] = field.add(dx[idx(1 % n, 0) * d + idx(0, 1)], field.one());
  }
  Vector sg = to_dense(unit_vec(idx((n - 1) % n, 0)), d);
  Vector sx(d);
  if (n > 1) sx = shell.multiply(sg, to_dense(unit_vec(idx(0, 1)), d));
  for (auto& v : sx) v = field.neg(v);
  std::vector<SparseVec> comult(d);
  std::vector<SparseVec> scols(d);
  Vector counit(d);
  Vector one_one(d * d);
  one_one[0] = field.one();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      Vector delta = one_one;
      Vector s = to_dense(unit_vec(0), d);
      for (size_t k = 0; k < a; ++k) delta = shell.multiply_tensor(delta, dg);
      for (size_t k = 0; k < b; ++k) delta = shell.multiply_tensor(delta, dx);
      // S is an anti-homomorphism: S(g^a x^b) = S(x)^b S(g)^a.
      for (size_t k = 0; k < b; ++k) s = shell.multiply(s, sx);
      for (size_t k = 0; k < a; ++k) s = shell.multiply(s, sg);
      comult[idx(a, b)] = to_sparse(delta);
      scols[idx(a, b)] = to_sparse(s);
      counit[idx(a, b)] = b == 0 ? field.one() : field.zero();
    }
  }
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit),
                     Matrix::from_columns(field, d, std::move(scols)));
}

HopfAlgebra sweedler(Field field) { return taft(2, field); }

std::vector<std::vector<size_t>> cyclic_group_table(size_t n) {
  std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

std::vector<std::vector<size_t>> symmetric_group_table(size_t n, std::vector<std::string>* labels) {
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<size_t>, size_t> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const size_t m = perms.size();
  std::vector<std::vector<size_t>> t(m, std::vector<size_t>(m));
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<size_t> c(n);
      for (size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(c);
    }
  }
  if (labels) {
    labels->clear();
    for (const auto& q : perms) {
      std::string s = "[";
      for (size_t i = 0; i < n; ++i) s += std::to_string(q[i] + 1);
      labels->push_back(s + "]");
    }
  }
  return t;
}

}  // namespace gerst
