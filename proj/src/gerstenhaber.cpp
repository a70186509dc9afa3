#include "gerst/gerstenhaber.hpp"

#include <cstdlib>
#include <cstring>

#include "gerst/parallel.hpp"
#include "gerst/random.hpp"

namespace gerst {

namespace {

void same_layout(const HochschildCochain& a, const HochschildCochain& b) {
  if (a.layout_ptr() != b.layout_ptr()) throw Error(ErrorCode::DimensionMismatch, "cochains live in different spaces");
}

const Field& field_of(const HochschildCochain& c) { return c.layout().category().field(); }

int clamp_degree(int d) { return d < -1 ? -1 : d; }

// Test-only fault injection, see the README.
bool flip_h_sign() {
  static const bool on = [] {
    const char* v = std::getenv("GERST_TEST_FAULT");
    return v != nullptr && std::strcmp(v, "h_sign") == 0;
  }();
  return on;
}

}  // namespace

HochschildCochain add(const HochschildCochain& a, const HochschildCochain& b) {
  same_layout(a, b);
  const Field& f = field_of(a);
  Vector v(a.values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.values()[i], b.values()[i]);
  return HochschildCochain(a.layout_ptr(), std::move(v));
}

HochschildCochain sub(const HochschildCochain& a, const HochschildCochain& b) {
  same_layout(a, b);
  const Field& f = field_of(a);
  Vector v(a.values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.values()[i], b.values()[i]);
  return HochschildCochain(a.layout_ptr(), std::move(v));
}

HochschildCochain scale(const Field& f, const Scalar& c, const HochschildCochain& a) {
  Vector v(a.values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.mul(c, a.values()[i]);
  return HochschildCochain(a.layout_ptr(), std::move(v));
}

bool is_zero(const HochschildCochain& a) { return is_zero(a.values()); }

HochschildCochain cup(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  hc.require_own(phi);
  hc.require_own(psi);
  const int p = phi.degree(), q = psi.degree();
  if (p < 0 || q < 0) return hc.zero(clamp_degree(p + q));
  const LinearCategory& cat = hc.category();
  const Field& f = hc.field();
  return hc.tabulate(p + q, [&](const HochschildLayout::Component& comp, const uint32_t* fs, Scalar* out) {
    const uint32_t* b = comp.objects.data();
    const size_t up = static_cast<size_t>(p), uq = static_cast<size_t>(q);
    std::vector<const SparseVec*> args(up + uq);
    for (size_t k = 0; k < up + uq; ++k) args[k] = &hc.unit(fs[k]);
    const size_t d1 = cat.hom_dim(b[up], b[0]);
    const size_t d2 = cat.hom_dim(b[up + uq], b[up]);
    if (d1 == 0 || d2 == 0) return;
    Vector u(d1), w(d2);
    hc.evaluate(phi, b, args.data(), f.one(), u.data());
    hc.evaluate(psi, b + up, args.data() + up, f.one(), w.data());
    for (size_t i = 0; i < d1; ++i) {
      if (u[i].is_zero()) continue;
      for (size_t j = 0; j < d2; ++j) {
        if (w[j].is_zero()) continue;
        const Scalar c = f.mul(u[i], w[j]);
        for (const auto& e : cat.compose(b[up + uq], b[up], b[0], i, j)) f.add_mul(out[e.index], c, e.value);
      }
    }
  });
}

HochschildCochain cup_alt(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  return scale(hc.field(), hc.field().sign(phi.degree() * psi.degree()), cup(hc, phi, psi));
}

HochschildCochain circ_i(const HochschildComplex& hc, const HochschildCochain& alpha, const HochschildCochain& beta,
                         size_t i) {
  hc.require_own(alpha);
  hc.require_own(beta);
  const int p = alpha.degree(), q = beta.degree();
  if (p < 1 || q < 0 || i >= static_cast<size_t>(p)) {
    throw Error(ErrorCode::IndexError, "partial composition slot " + std::to_string(i) + " is out of range for degree " +
                                           std::to_string(p));
  }
  const size_t up = static_cast<size_t>(p), uq = static_cast<size_t>(q);
  const Field& f = hc.field();
  const LinearCategory& cat = hc.category();
  return hc.tabulate(p + q - 1, [&](const HochschildLayout::Component& comp, const uint32_t* fs, Scalar* out) {
    const uint32_t* b = comp.objects.data();  // b_0 .. b_{p+q-1}
    // β on (b_i .. b_{i+q}) with inputs f_{i+1} .. f_{i+q}
    const size_t dmid = cat.hom_dim(b[i + uq], b[i]);
    if (dmid == 0) return;
    std::vector<const SparseVec*> bargs(uq);
    for (size_t k = 0; k < uq; ++k) bargs[k] = &hc.unit(fs[i + k]);
    Vector v(dmid);
    hc.evaluate(beta, b + i, bargs.data(), f.one(), v.data());
    const SparseVec sv = to_sparse(v);
    if (sv.empty()) return;
    // α on (b_0 .. b_i, b_{i+q} .. b_{p+q-1})
    std::vector<uint32_t> objs;
    for (size_t k = 0; k <= i; ++k) objs.push_back(b[k]);
    for (size_t k = i + uq; k <= up + uq - 1; ++k) objs.push_back(b[k]);
    std::vector<const SparseVec*> aargs;
    for (size_t k = 0; k < i; ++k) aargs.push_back(&hc.unit(fs[k]));
    aargs.push_back(&sv);
    for (size_t k = i + uq; k < up + uq - 1; ++k) aargs.push_back(&hc.unit(fs[k]));
    hc.evaluate(alpha, objs.data(), aargs.data(), f.one(), out);
  });
}

HochschildCochain circle(const HochschildComplex& hc, const HochschildCochain& alpha, const HochschildCochain& beta) {
  const int p = alpha.degree(), q = beta.degree();
  if (p < 1) return hc.zero(clamp_degree(p + q - 1));
  const Field& f = hc.field();
  HochschildCochain acc = hc.zero(p + q - 1);
  for (int i = 0; i < p; ++i) {
    HochschildCochain t = circ_i(hc, alpha, beta, static_cast<size_t>(i));
    acc = add(acc, scale(f, f.sign((q - 1) * i), t));
  }
  return acc;
}

namespace {

// result += coeff · h_i(α, β), computed by pairing every nonzero entry of α
// with the entries of β whose output feeds α's slot i.
void scatter_insertion(const HochschildComplex& hc, const HochschildCochain& alpha, const HochschildCochain& beta,
                       size_t i, const Scalar& coeff, HochschildCochain& result) {
  const Field& f = hc.field();
  const HochschildLayout& la = alpha.layout();
  const HochschildLayout& lb = beta.layout();
  const HochschildLayout& lr = result.layout();
  const size_t p = static_cast<size_t>(la.degree());
  const size_t q = static_cast<size_t>(lb.degree());
  struct Task {
    size_t comp;
    size_t out;
  };
  std::vector<Task> tasks;
  for (size_t c = 0; c < la.components().size(); ++c) {
    for (size_t r = 0; r < la.components()[c].out_dim; ++r) tasks.push_back({c, r});
  }
  Vector& res = result.values();
  parallel_for(tasks.size(), [&](size_t t) {
    const auto& ca = la.components()[tasks[t].comp];
    const size_t r = tasks[t].out;
    const uint32_t* x = ca.objects.data();
    // mixed radix split of α's inputs around slot i
    size_t pre = 1, post = 1;
    for (size_t k = 0; k < i; ++k) pre *= ca.in_dims[k];
    for (size_t k = i + 1; k < p; ++k) post *= ca.in_dims[k];
    const size_t slot = ca.in_dims[i];
    for (const auto& cb : lb.components()) {
      if (cb.objects.front() != x[i] || cb.objects.back() != x[i + 1]) continue;
      std::vector<uint32_t> tuple(x, x + i + 1);
      tuple.insert(tuple.end(), cb.objects.begin() + 1, cb.objects.end());
      tuple.insert(tuple.end(), x + i + 2, x + p + 1);
      const int64_t ri = lr.find(tuple.data());
      if (ri < 0) throw Error(ErrorCode::VerificationFailed, "insertion produced a tuple outside the layout");
      const auto& cr = lr.components()[static_cast<size_t>(ri)];
      for (size_t a = 0; a < pre; ++a) {
        for (size_t s = 0; s < slot; ++s) {
          for (size_t c = 0; c < post; ++c) {
            const Scalar& av = alpha.values()[ca.offset + r * ca.in_size + (a * slot + s) * post + c];
            if (av.is_zero()) continue;
            const Scalar ac = f.mul(coeff, av);
            for (size_t mb = 0; mb < cb.in_size; ++mb) {
              const Scalar& bv = beta.values()[cb.offset + s * cb.in_size + mb];
              if (bv.is_zero()) continue;
              const size_t m = (a * cb.in_size + mb) * post + c;
              f.add_mul(res[cr.offset + r * cr.in_size + m], ac, bv);
            }
          }
        }
      }
    }
  });
  (void)q;
}

}  // namespace

HochschildCochain homotopy_h(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  hc.require_own(phi);
  hc.require_own(psi);
  const int p = phi.degree(), q = psi.degree();
  HochschildCochain out = hc.zero(clamp_degree(p + q - 1));
  if (p < 1 || q < 0) return out;
  const Field& f = hc.field();
  for (int i = 0; i < p; ++i) {
    Scalar s = f.sign(i + (p - 1 - i) * q);
    if (flip_h_sign()) s = f.neg(s);
    scatter_insertion(hc, phi, psi, static_cast<size_t>(i), s, out);
  }
  return out;
}

HochschildCochain homotopy_h_via_circle(const HochschildComplex& hc, const HochschildCochain& phi,
                                        const HochschildCochain& psi) {
  const int p = phi.degree(), q = psi.degree();
  return scale(hc.field(), hc.field().sign(p * q + q), circle(hc, phi, psi));
}

HochschildCochain op_b(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  const int p = phi.degree(), q = psi.degree();
  const Field& f = hc.field();
  return add(homotopy_h(hc, phi, psi), scale(f, f.sign(p * q), homotopy_h(hc, psi, phi)));
}

HochschildCochain op_b_alt(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  return scale(hc.field(), hc.field().sign(phi.degree() * psi.degree()), op_b(hc, phi, psi));
}

HochschildCochain bracket(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi) {
  return scale(hc.field(), hc.field().sign(phi.degree()), op_b(hc, phi, psi));
}

HochschildCochain bracket_via_circle(const HochschildComplex& hc, const HochschildCochain& phi,
                                     const HochschildCochain& psi) {
  const int p = phi.degree(), q = psi.degree();
  const Field& f = hc.field();
  return add(scale(f, f.neg(f.sign((p - 1) * (q - 1))), circle(hc, phi, psi)), circle(hc, psi, phi));
}

HochschildCochain bracket_alt(const HochschildComplex& hc, const HochschildCochain& alpha,
                              const HochschildCochain& beta) {
  const int p = alpha.degree(), q = beta.degree();
  const Field& f = hc.field();
  return sub(circle(hc, alpha, beta), scale(f, f.sign((p - 1) * (q - 1)), circle(hc, beta, alpha)));
}

std::optional<Defect> first_defect(const HochschildCochain& lhs, const HochschildCochain& rhs) {
  same_layout(lhs, rhs);
  const Field& f = field_of(lhs);
  const HochschildLayout& l = lhs.layout();
  size_t best = SIZE_MAX;
  mpq_class best_abs;
  Scalar best_val;
  for (size_t k = 0; k < lhs.values().size(); ++k) {
    if (lhs.values()[k] == rhs.values()[k]) continue;
    Scalar d = f.sub(lhs.values()[k], rhs.values()[k]);
    if (f.is_prime()) {
      best = k;
      best_val = d;
      break;
    }
    mpq_class a = abs(d.to_mpq());
    if (best == SIZE_MAX || a > best_abs) {
      best = k;
      best_abs = a;
      best_val = d;
    }
  }
  if (best == SIZE_MAX) return std::nullopt;
  for (const auto& c : l.components()) {
    if (best >= c.offset + c.size()) continue;
    Defect d;
    d.tuple = c.objects;
    size_t local = best - c.offset;
    d.output = local / c.in_size;
    size_t m = local % c.in_size;
    d.inputs.resize(c.in_dims.size());
    for (size_t i = c.in_dims.size(); i-- > 0;) {
      d.inputs[i] = static_cast<uint32_t>(m % c.in_dims[i]);
      m /= c.in_dims[i];
    }
    d.value = best_val.str();
    return d;
  }
  return std::nullopt;
}

namespace {

using Degrees = std::vector<int>;
// Returns an empty string on success, else a description; may set defect.
using TrialFn = std::function<std::string(const Degrees&, uint64_t, std::optional<Defect>&)>;

std::vector<Degrees> degree_tuples(size_t arity, int max_degree, const std::function<bool(const Degrees&)>& keep) {
  std::vector<Degrees> out;
  Degrees d(arity, 0);
  while (true) {
    if (!keep || keep(d)) out.push_back(d);
    size_t k = arity;
    while (k > 0) {
      --k;
      if (++d[k] <= max_degree) break;
      d[k] = 0;
      if (k == 0) return out;
    }
    if (arity == 0) return out;
  }
}

VerifyReport run_trials(const std::string& name, const SamplePlan& plan, size_t arity,
                        const std::function<bool(const Degrees&)>& keep, const TrialFn& trial) {
  VerifyReport rep;
  rep.identity = name;
  rep.trials = plan.trials;
  const auto tuples = degree_tuples(arity, plan.max_degree, keep);
  if (tuples.empty()) {
    rep.trials = 0;
    return rep;
  }
  std::vector<std::optional<VerifyFailure>> results(plan.trials);
  parallel_for(plan.trials, [&](size_t t) {
    const Degrees& deg = tuples[t % tuples.size()];
    const uint64_t seed = splitmix64(plan.seed + t);
    std::optional<Defect> defect;
    std::string msg = trial(deg, seed, defect);
    if (!msg.empty()) results[t] = VerifyFailure{deg, seed, msg, defect};
  });
  for (auto& r : results) {
    if (r) rep.failures.push_back(std::move(*r));
  }
  return rep;
}

std::string compare(const HochschildCochain& lhs, const HochschildCochain& rhs, std::optional<Defect>& defect,
                    const std::string& what) {
  if (lhs.layout_ptr() != rhs.layout_ptr()) return what + ": sides have different degrees";
  if (lhs.values() == rhs.values()) return {};
  defect = first_defect(lhs, rhs);
  return what;
}

uint64_t sub_seed(uint64_t seed, uint64_t k) { return splitmix64(seed ^ (0x5851f42d4c957f2dULL * (k + 1))); }

}  // namespace

VerifyReport verify_homotopy_identity(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  return run_trials("homotopy_identity", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1];
    auto phi = hc.random(static_cast<size_t>(p), sub_seed(seed, 0));
    auto psi = hc.random(static_cast<size_t>(q), sub_seed(seed, 1));
    // h(dφ,ψ) + (-1)^p h(φ,dψ) + d h(φ,ψ) = (-1)^{pq} ψ⌣φ - φ⌣ψ
    auto lhs = add(add(homotopy_h(hc, hc.differential(phi), psi),
                       scale(f, f.sign(p), homotopy_h(hc, phi, hc.differential(psi)))),
                   hc.differential(homotopy_h(hc, phi, psi)));
    auto rhs = sub(scale(f, f.sign(p * q), cup(hc, psi, phi)), cup(hc, phi, psi));
    return compare(lhs, rhs, defect, "h(dφ,ψ) + (-1)^p h(φ,dψ) + d h(φ,ψ) != (-1)^{pq} ψ⌣φ - φ⌣ψ");
  });
}

VerifyReport verify_sign_identity(const HochschildComplex& hc, const SamplePlan& plan) {
  return run_trials("sign_identity", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    auto a = hc.random(static_cast<size_t>(d[0]), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(d[1]), sub_seed(seed, 1));
    return compare(homotopy_h(hc, a, b), homotopy_h_via_circle(hc, a, b), defect,
                   "Σ (-1)^{i+(p-1-i)q} α∘_i β != (-1)^{pq+q} α∘β");
  });
}

VerifyReport verify_bracket_formulas(const HochschildComplex& hc, const SamplePlan& plan) {
  return run_trials("bracket_formulas", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    auto a = hc.random(static_cast<size_t>(d[0]), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(d[1]), sub_seed(seed, 1));
    return compare(bracket(hc, a, b), bracket_via_circle(hc, a, b), defect,
                   "(-1)^p b(φ,ψ) != -(-1)^{(p-1)(q-1)} φ∘ψ + ψ∘φ");
  });
}

VerifyReport verify_conventions(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  return run_trials("conventions", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1];
    auto a = hc.random(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(q), sub_seed(seed, 1));
    std::string m = compare(cup_alt(hc, a, b), scale(f, f.sign(p * q), cup(hc, a, b)), defect, "α⌣'β != (-1)^{pq} α⌣β");
    if (!m.empty()) return m;
    auto balt = op_b_alt(hc, a, b);
    m = compare(balt, op_b(hc, b, a), defect, "b'(φ,ψ) != b(ψ,φ)");
    if (!m.empty()) return m;
    auto br_alt = bracket_alt(hc, a, b);
    m = compare(br_alt, scale(f, f.sign(q), balt), defect, "[α,β]' != (-1)^q b'(α,β)");
    if (!m.empty()) return m;
    return compare(br_alt, scale(f, f.neg(f.sign((p - 1) * (q - 1))), bracket(hc, a, b)), defect,
                   "[α,β]' != -(-1)^{(p-1)(q-1)} [α,β]");
  });
}

VerifyReport verify_antisymmetry(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  return run_trials("antisymmetry", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1];
    auto a = hc.random(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(q), sub_seed(seed, 1));
    std::string m = compare(bracket(hc, a, b), scale(f, f.neg(f.sign((p - 1) * (q - 1))), bracket(hc, b, a)), defect,
                            "[α,β] != -(-1)^{(p-1)(q-1)} [β,α]");
    if (!m.empty()) return m;
    return compare(bracket_alt(hc, a, b), scale(f, f.neg(f.sign((p - 1) * (q - 1))), bracket_alt(hc, b, a)), defect,
                   "[α,β]' != -(-1)^{(p-1)(q-1)} [β,α]'");
  });
}

VerifyReport verify_jacobi(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  return run_trials("jacobi", plan, 3, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1], r = d[2];
    auto a = hc.random(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(q), sub_seed(seed, 1));
    auto c = hc.random(static_cast<size_t>(r), sub_seed(seed, 2));
    auto t1 = scale(f, f.sign((p - 1) * (r - 1)), bracket(hc, a, bracket(hc, b, c)));
    auto t2 = scale(f, f.sign((q - 1) * (p - 1)), bracket(hc, b, bracket(hc, c, a)));
    auto t3 = scale(f, f.sign((r - 1) * (q - 1)), bracket(hc, c, bracket(hc, a, b)));
    auto sum = add(add(t1, t2), t3);
    return compare(sum, hc.zero(sum.degree()), defect, "graded Jacobi sum is nonzero");
  });
}

VerifyReport verify_leibniz(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  return run_trials("leibniz", plan, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0];
    auto a = hc.random(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random(static_cast<size_t>(d[1]), sub_seed(seed, 1));
    auto lhs = hc.differential(cup(hc, a, b));
    auto rhs = add(cup(hc, hc.differential(a), b), scale(f, f.sign(p), cup(hc, a, hc.differential(b))));
    return compare(lhs, rhs, defect, "d(φ⌣ψ) != dφ⌣ψ + (-1)^p φ⌣dψ");
  });
}

VerifyReport verify_cup_unit(const HochschildComplex& hc, const SamplePlan& plan) {
  const auto e = hc.identity();
  return run_trials("cup_unit", plan, 1, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    auto a = hc.random(static_cast<size_t>(d[0]), sub_seed(seed, 0));
    std::string m = compare(cup(hc, e, a), a, defect, "e⌣φ != φ");
    if (!m.empty()) return m;
    return compare(cup(hc, a, e), a, defect, "φ⌣e != φ");
  });
}

VerifyReport verify_graded_commutativity(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  const int top = static_cast<int>(hc.max_degree()) - 1;
  SamplePlan pl = plan;
  pl.max_degree = std::min(plan.max_degree, top);
  return run_trials("graded_commutativity", pl, 2, nullptr, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1];
    auto a = hc.random_cocycle(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random_cocycle(static_cast<size_t>(q), sub_seed(seed, 1));
    auto lhs = sub(cup(hc, a, b), scale(f, f.sign(p * q), cup(hc, b, a)));
    auto rhs = scale(f, f.from_int(-1), hc.differential(homotopy_h(hc, a, b)));
    return compare(lhs, rhs, defect, "φ⌣ψ - (-1)^{pq} ψ⌣φ != -d h(φ,ψ)");
  });
}

VerifyReport verify_poisson(const HochschildComplex& hc, const SamplePlan& plan) {
  const Field& f = hc.field();
  const int n_top = static_cast<int>(hc.max_degree());
  SamplePlan pl = plan;
  pl.max_degree = std::min(plan.max_degree, n_top - 1);
  auto keep = [&](const Degrees& d) { return d[0] + d[1] + d[2] - 1 <= n_top - 1; };
  return run_trials("poisson", pl, 3, keep, [&](const Degrees& d, uint64_t seed, auto& defect) {
    const int p = d[0], q = d[1];
    auto a = hc.random_cocycle(static_cast<size_t>(p), sub_seed(seed, 0));
    auto b = hc.random_cocycle(static_cast<size_t>(q), sub_seed(seed, 1));
    auto c = hc.random_cocycle(static_cast<size_t>(d[2]), sub_seed(seed, 2));
    auto lhs = bracket(hc, a, cup(hc, b, c));
    auto rhs = add(cup(hc, bracket(hc, a, b), c), scale(f, f.sign((p - 1) * q), cup(hc, b, bracket(hc, a, c))));
    auto defect_cochain = sub(lhs, rhs);
    const int n = defect_cochain.degree();
    if (n < 0) return std::string();
    if (hc.complex().is_coboundary(static_cast<size_t>(n), defect_cochain.values())) return std::string();
    defect = first_defect(defect_cochain, hc.zero(n));
    return std::string("[α,β⌣γ] - [α,β]⌣γ - (-1)^{(p-1)q} β⌣[α,γ] is not a coboundary");
  });
}

std::optional<BracketWitness> find_bracket_witness(const HochschildComplex& hc, int min_degree, int max_degree) {
  const int N = static_cast<int>(hc.max_degree());
  const int top = std::min(max_degree, N - 1);
  std::vector<CohomologySpace> coh;
  for (int n = 0; n <= top; ++n) coh.push_back(hc.complex().cohomology(static_cast<size_t>(n)));
  for (int s = std::max(1, 2 * min_degree); s <= 2 * top; ++s) {
    if (s - 1 > N) break;
    for (int p = std::max(min_degree, s - top); p <= std::min(s - min_degree, top); ++p) {
      const int q = s - p;
      for (size_t i = 0; i < coh[p].dim; ++i) {
        auto phi = hc.from_vector(p, coh[p].representatives.dense_column(i));
        for (size_t j = 0; j < coh[q].dim; ++j) {
          auto psi = hc.from_vector(q, coh[q].representatives.dense_column(j));
          auto br = bracket(hc, phi, psi);
          if (hc.complex().is_coboundary(static_cast<size_t>(s - 1), br.values())) continue;
          return BracketWitness{p, q, i, j, phi, psi, br};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gerst
