#include "gerst/commands.hpp"

#include <cmath>

namespace gerst {

namespace {

ValidationReport validation(const Problem& p) {
  ValidationReport r;
  if (p.construction_error) {
    r.violations.push_back(*p.construction_error);
    return r;
  }
  r = p.category.validate();
  if (p.hopf && r.ok()) {
    ValidationReport h = p.hopf->validate();
    r.violations.insert(r.violations.end(), h.violations.begin(), h.violations.end());
  }
  return r;
}

void require_valid(const Problem& p) {
  ValidationReport r = validation(p);
  if (!r.ok()) throw Error(ErrorCode::InvalidAlgebra, "input is not valid: " + r.violations.front());
}

size_t resolve_degree(const Problem& p, const CommandOptions& o) {
  size_t n = o.max_degree ? o.max_degree : default_max_degree(p);
  if (n < 2) throw Error(ErrorCode::Usage, "max degree must be at least 2");
  return n;
}

// dim C^n = Σ_{a_0, a_n} (H^n)[a_0][a_n] · hom(a_n → a_0), H[x][y] = hom(y → x)
std::vector<double> hochschild_dims(const LinearCategory& c, size_t top) {
  const size_t k = c.num_objects();
  std::vector<double> out;
  std::vector<double> power(k * k, 0.0);
  for (size_t a = 0; a < k; ++a) power[a * k + a] = 1.0;
  for (size_t n = 0; n <= top; ++n) {
    double s = 0;
    for (size_t a = 0; a < k; ++a) {
      for (size_t b = 0; b < k; ++b) s += power[a * k + b] * static_cast<double>(c.hom_dim(b, a));
    }
    out.push_back(s);
    std::vector<double> next(k * k, 0.0);
    for (size_t a = 0; a < k; ++a) {
      for (size_t m = 0; m < k; ++m) {
        if (power[a * k + m] == 0) continue;
        for (size_t b = 0; b < k; ++b) next[a * k + b] += power[a * k + m] * static_cast<double>(c.hom_dim(b, m));
      }
    }
    power = std::move(next);
  }
  return out;
}

}  // namespace

double estimate_bytes(const Problem& p, size_t top, bool with_ext) {
  // dense cochains (24 bytes a scalar) plus differentials with about two
  // entries per composition term, tripled for elimination workspace
  auto complex_bytes = [](const std::vector<double>& dims) {
    double b = 0;
    for (size_t n = 0; n < dims.size(); ++n) {
      b += dims[n] * 24;
      if (n > 0) b += dims[n] * static_cast<double>(n + 1) * 2 * 32 * 3;
    }
    return b;
  };
  double total = complex_bytes(hochschild_dims(p.category, top));
  if (with_ext && p.hopf) {
    const double d = static_cast<double>(p.hopf->dim());
    std::vector<double> ext;
    for (size_t n = 0; n <= top; ++n) ext.push_back(std::pow(d - 1, static_cast<double>(n)) * d);
    total += complex_bytes(ext);
  }
  return total;
}

namespace {

void check_memory(const Problem& p, size_t top, bool with_ext, const CommandOptions& o) {
  if (o.force) return;
  const double need = estimate_bytes(p, top, with_ext);
  if (need > static_cast<double>(kMemoryLimit)) {
    throw Error(ErrorCode::Resource, "predicted memory " + std::to_string(static_cast<uint64_t>(need) >> 20) +
                                         " MiB exceeds the " + std::to_string(kMemoryLimit >> 20) +
                                         " MiB limit; rerun with --force to override");
  }
}

Json header(const Problem& p, const char* command, size_t N) {
  Json j;
  j["command"] = command;
  j["name"] = p.name;
  j["field"] = p.category.field().name();
  j["max_degree"] = N;
  return j;
}

Json check_entry(const std::string& identity, size_t trials, const std::vector<std::pair<long, std::string>>& fails) {
  Json j;
  j["identity"] = identity;
  j["trials"] = trials;
  Json f = Json::array();
  for (const auto& [deg, msg] : fails) f.push_back({{"degree", deg}, {"detail", msg}});
  j["failures"] = std::move(f);
  return j;
}

std::vector<Json> complex_suite(const HochschildComplex& hc) {
  std::vector<Json> out;
  std::vector<std::pair<long, std::string>> f;
  if (auto bad = hc.complex().verify_d_squared()) f.push_back({static_cast<long>(*bad), "D_{n+1} D_n != 0"});
  out.push_back(check_entry("d_squared", hc.max_degree() - 1, f));
  f.clear();
  if (!hc.complex().is_cocycle(0, hc.identity().values())) f.push_back({0, "identity is not a cocycle"});
  out.push_back(check_entry("identity_cocycle", 1, f));
  f.clear();
  if (!hc.hh0_product().commutative) f.push_back({0, "HH^0 product is not commutative"});
  out.push_back(check_entry("hh0_commutative", 1, f));
  return out;
}

std::vector<Json> e2_suite(const HochschildComplex& hc, const SamplePlan& plan) {
  std::vector<Json> out;
  for (auto fn : {verify_homotopy_identity, verify_sign_identity, verify_bracket_formulas, verify_conventions,
                  verify_antisymmetry, verify_jacobi, verify_leibniz, verify_cup_unit, verify_graded_commutativity,
                  verify_poisson}) {
    out.push_back(report_to_json(fn(hc, plan)));
  }
  return out;
}

std::vector<Json> ext_suite(const HopfAlgebra& h, size_t N) {
  std::vector<Json> out;
  for (const auto& [name, module] : {std::pair<std::string, HModule>{"k", trivial_module(h)},
                                     std::pair<std::string, HModule>{"adjoint", adjoint_module(h)}}) {
    ReducedBarComplex ext(h, module, N);
    std::vector<std::pair<long, std::string>> f;
    if (auto bad = ext.complex().verify_d_squared()) f.push_back({static_cast<long>(*bad), "δ_{n+1} δ_n != 0"});
    out.push_back(check_entry("ext_d_squared_" + name, N - 1, f));
  }
  std::vector<std::pair<long, std::string>> f;
  auto rows = adjoint_hh_dims(h, N);
  for (const auto& r : rows) {
    if (r.ext_dim != r.hh_dim) {
      f.push_back({static_cast<long>(r.degree), "dim Ext(k, H_ad) = " + std::to_string(r.ext_dim) + " but dim HH = " +
                                                    std::to_string(r.hh_dim)});
    }
  }
  out.push_back(check_entry("adjoint_dimensions", rows.size(), f));
  ExtHhBridge bridge(h, N);
  ExtHhReport rep = verify_ext_to_hh(bridge);
  f.clear();
  for (const auto& m : rep.failures) f.push_back({-1, m});
  out.push_back(check_entry("ext_to_hh", rep.degrees.size() + rep.product_pairs + rep.bracket_pairs, f));
  ExtClassTable t = ext_class_table(bridge, N - 1);
  f.clear();
  for (const auto& m : t.commutativity_failures) f.push_back({-1, "graded commutativity fails for " + m});
  out.push_back(check_entry("yoneda_graded_commutative", t.products.size(), f));
  if (h.is_cocommutative()) {
    f.clear();
    for (const auto& b : t.brackets) {
      if (!b.value.coboundary) {
        f.push_back({b.value.degree, "bracket of Ext^" + std::to_string(b.p) + " #" + std::to_string(b.i) +
                                         " and Ext^" + std::to_string(b.q) + " #" + std::to_string(b.j) +
                                         " is not a coboundary"});
      }
    }
    out.push_back(check_entry("cocommutative_bracket_vanishes", t.brackets.size(), f));
  }
  return out;
}

}  // namespace

size_t default_max_degree(const Problem& p) { return p.category.total_dim() <= 3 ? 5 : 4; }

CommandResult run_validate(const Problem& pr) {
  ValidationReport r = validation(pr);
  Json j;
  j["command"] = "validate";
  j["name"] = pr.name;
  j["kind"] = pr.kind;
  j["field"] = pr.category.field().name();
  j["valid"] = r.ok();
  j["violations"] = r.violations;
  return {std::move(j), r.ok()};
}

CommandResult run_hh(const Problem& pr, const CommandOptions& o) {
  require_valid(pr);
  const size_t N = resolve_degree(pr, o);
  check_memory(pr, N, false, o);
  HochschildComplex hc(pr.category, N);
  Json j = header(pr, "hh", N);
  auto dims = hc.complex().cohomology_dims();
  Json rows = Json::array();
  for (size_t n = 0; n < dims.size(); ++n) {
    if (n < N) {
      rows.push_back({{"degree", n}, {"dim", dims[n]}, {"upper_truncation_unsafe", false}});
    } else {
      // D_N is not built, so only dim C^N / im D_{N-1} is known
      rows.push_back({{"degree", n}, {"dim", nullptr}, {"upper_bound", dims[n]}, {"upper_truncation_unsafe", true}});
    }
  }
  j["dims"] = std::move(rows);
  Hh0Algebra a = hc.hh0_product();
  Json hh0;
  const size_t d = a.basis.cols();
  hh0["dim"] = d;
  hh0["commutative"] = a.commutative;
  Json basis = Json::array();
  for (size_t c = 0; c < d; ++c) basis.push_back(vector_to_json(a.basis.dense_column(c)));
  hh0["basis"] = std::move(basis);
  Json table = Json::array();
  for (size_t i = 0; i < d; ++i) {
    for (size_t k = 0; k < d; ++k) table.push_back({{"i", i}, {"j", k}, {"coords", vector_to_json(a.table[i * d + k])}});
  }
  hh0["products"] = std::move(table);
  j["hh0"] = std::move(hh0);
  return {std::move(j), true};
}

CommandResult run_verify(const Problem& pr, const CommandOptions& o) {
  const std::string& suite = o.suite;
  if (suite != "complex" && suite != "e2" && suite != "ext" && suite != "all") {
    throw Error(ErrorCode::Usage, "unknown suite '" + suite + "' (complex, e2, ext, all)");
  }
  const bool want_complex = suite == "complex" || suite == "all";
  const bool want_e2 = suite == "e2" || suite == "all";
  const bool want_ext = suite == "ext" || (suite == "all" && pr.hopf);
  if (suite == "ext" && !pr.hopf && !pr.construction_error) {
    throw Error(ErrorCode::Usage, "the ext suite needs a Hopf algebra input");
  }
  if (want_e2 && !o.seed) throw Error(ErrorCode::Usage, "sampled suites need an explicit --seed");
  require_valid(pr);
  const size_t N = resolve_degree(pr, o);
  check_memory(pr, N, want_ext, o);
  Json j = header(pr, "verify", N);
  j["suite"] = suite;
  j["trials"] = o.trials;
  if (o.seed) {
    j["seed"] = *o.seed;
  } else {
    j["seed"] = nullptr;
  }
  Json reps = Json::array();
  {
    HochschildComplex hc(pr.category, N);
    if (want_complex) {
      for (auto& r : complex_suite(hc)) reps.push_back(std::move(r));
    }
    if (want_e2) {
      SamplePlan plan;
      plan.trials = o.trials;
      plan.seed = *o.seed;
      plan.max_degree = static_cast<int>(N) - 2;
      for (auto& r : e2_suite(hc, plan)) reps.push_back(std::move(r));
    }
  }
  if (want_ext) {
    for (auto& r : ext_suite(*pr.hopf, N)) reps.push_back(std::move(r));
  }
  size_t failures = 0;
  for (const auto& r : reps) failures += r["failures"].size();
  j["reports"] = std::move(reps);
  j["failures"] = failures;
  j["ok"] = failures == 0;
  return {std::move(j), failures == 0};
}

CommandResult run_ext(const Problem& pr, const CommandOptions& o) {
  if (!pr.hopf && !pr.construction_error) throw Error(ErrorCode::Usage, "ext needs a Hopf algebra input");
  require_valid(pr);
  const size_t N = resolve_degree(pr, o);
  check_memory(pr, N, true, o);
  ExtHhBridge bridge(*pr.hopf, N);
  ExtClassTable t = ext_class_table(bridge, N - 1);
  Json j = header(pr, "ext", N);
  Json dims = Json::array();
  for (size_t n = 0; n < t.dims.size(); ++n) dims.push_back({{"degree", n}, {"dim", t.dims[n]}});
  j["dims"] = std::move(dims);
  Json prods = Json::array();
  for (const auto& x : t.products) {
    prods.push_back({{"p", x.p}, {"i", x.i}, {"q", x.q}, {"j", x.j}, {"coords", vector_to_json(x.coords)}});
  }
  j["products"] = std::move(prods);
  Json brs = Json::array();
  for (const auto& x : t.brackets) {
    brs.push_back({{"p", x.p}, {"i", x.i}, {"q", x.q}, {"j", x.j}, {"value", fs_bracket_to_json(x.value)}});
  }
  j["brackets"] = std::move(brs);
  j["commutativity_failures"] = t.commutativity_failures;
  j["ok"] = t.commutativity_failures.empty();
  return {std::move(j), t.commutativity_failures.empty()};
}

CommandResult run_compare(const Problem& pr, const CommandOptions& o) {
  if (!pr.hopf && !pr.construction_error) throw Error(ErrorCode::Usage, "compare needs a Hopf algebra input");
  require_valid(pr);
  const size_t N = resolve_degree(pr, o);
  check_memory(pr, N, true, o);
  Json j = header(pr, "compare", N);
  bool good = true;
  Json rows = Json::array();
  for (const auto& r : adjoint_hh_dims(*pr.hopf, N)) {
    rows.push_back({{"degree", r.degree}, {"ext_adjoint", r.ext_dim}, {"hh", r.hh_dim}, {"equal", r.ext_dim == r.hh_dim}});
    good = good && r.ext_dim == r.hh_dim;
  }
  j["rows"] = std::move(rows);
  ExtHhBridge bridge(*pr.hopf, N);
  ExtHhReport rep = verify_ext_to_hh(bridge);
  good = good && rep.ok();
  j["iota"] = report_to_json(rep);
  j["ok"] = good;
  return {std::move(j), good};
}

}  // namespace gerst
