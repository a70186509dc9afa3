#include "gerst/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gerst {

namespace {

// Walks a document while remembering the JSON pointer for error messages.
class Reader {
 public:
  Reader(const Json& j, std::string ptr) : j_(j), ptr_(std::move(ptr)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, (ptr_.empty() ? std::string("/") : ptr_) + ": " + msg);
  }
  const Json& raw() const { return j_; }
  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail(std::string("missing key '") + key + "'");
    return Reader(*it, ptr_ + "/" + key);
  }
  Reader item(size_t i) const { return Reader(j_.at(i), ptr_ + "/" + std::to_string(i)); }

  size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  size_t index(size_t limit) const {
    if (!j_.is_number_integer() || j_.get<int64_t>() < 0) fail("expected a non-negative integer");
    const auto v = static_cast<size_t>(j_.get<int64_t>());
    if (v >= limit) fail("index " + std::to_string(v) + " out of range (< " + std::to_string(limit) + ")");
    return v;
  }
  size_t count() const {
    if (!j_.is_number_integer() || j_.get<int64_t>() < 0) fail("expected a non-negative integer");
    return static_cast<size_t>(j_.get<int64_t>());
  }
  Scalar scalar(const Field& f) const {
    try {
      if (j_.is_string()) return f.parse(j_.get<std::string>());
      if (j_.is_number_integer()) return f.from_int(j_.get<int64_t>());
    } catch (const Error& e) {
      fail(e.what());
    }
    fail("expected a coefficient string such as \"-7/3\"");
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < size(); ++i) out.push_back(item(i).str());
    return out;
  }
  // [[index, "coef"], ...]
  SparseVec sparse(const Field& f, size_t dim) const {
    std::vector<std::pair<size_t, Scalar>> entries;
    std::set<size_t> seen;
    for (size_t i = 0; i < size(); ++i) {
      Reader e = item(i);
      if (e.size() != 2) e.fail("expected [index, coefficient]");
      const size_t idx = e.item(0).index(dim);
      if (!seen.insert(idx).second) e.fail("duplicate index " + std::to_string(idx));
      entries.emplace_back(idx, e.item(1).scalar(f));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [i, c] : entries) {
      if (!c.is_zero()) v.push_back({static_cast<uint32_t>(i), c});
    }
    return v;
  }

 private:
  const Json& j_;
  std::string ptr_;
};

bool is_math_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAGroup:
    case ErrorCode::NonAdmissible:
    case ErrorCode::NotFinite:
    case ErrorCode::NoRootOfUnity:
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::VerificationFailed:
      return true;
    default:
      return false;
  }
}

LinearCategory read_algebra(const Reader& r, const Field& f) {
  auto labels = r.at("basis").strings();
  const size_t d = labels.size();
  if (d == 0) r.at("basis").fail("an algebra needs a nonzero basis");
  SparseVec unit = r.at("unit").sparse(f, d);
  std::vector<SparseVec> mult(d * d);
  std::vector<bool> seen(d * d, false);
  Reader prods = r.at("products");
  for (size_t i = 0; i < prods.size(); ++i) {
    Reader e = prods.item(i);
    const size_t a = e.at("left").index(d), b = e.at("right").index(d);
    if (seen[a * d + b]) e.fail("duplicate product entry");
    seen[a * d + b] = true;
    mult[a * d + b] = e.at("value").sparse(f, d);
  }
  return from_algebra(d, mult, unit, f, labels);
}

LinearCategory read_category(const Reader& r, const Field& f) {
  auto objects = r.at("objects").strings();
  const size_t n = objects.size();
  if (n == 0) r.at("objects").fail("a category needs at least one object");
  LinearCategory c(f, objects);
  Reader homs = r.at("homs");
  std::vector<bool> seen(n * n, false);
  for (size_t i = 0; i < homs.size(); ++i) {
    Reader h = homs.item(i);
    const size_t a = h.at("source").index(n), b = h.at("target").index(n);
    if (seen[a * n + b]) h.fail("hom space listed twice");
    seen[a * n + b] = true;
    c.set_hom_basis(a, b, h.at("basis").strings());
  }
  Reader ids = r.at("identities");
  for (size_t i = 0; i < ids.size(); ++i) {
    Reader e = ids.item(i);
    const size_t a = e.at("object").index(n);
    c.set_identity(a, e.at("value").sparse(f, c.hom_dim(a, a)));
  }
  Reader comps = r.at("compositions");
  for (size_t i = 0; i < comps.size(); ++i) {
    Reader e = comps.item(i);
    const size_t a = e.at("a").index(n), b = e.at("b").index(n), cc = e.at("c").index(n);
    const size_t g = e.at("g").index(c.hom_dim(b, cc)), ff = e.at("f").index(c.hom_dim(a, b));
    c.set_composition(a, b, cc, g, ff, e.at("value").sparse(f, c.hom_dim(a, cc)));
  }
  return c;
}

LinearCategory read_quiver(const Reader& r, const Field& f) {
  Quiver q;
  q.vertices = r.at("vertices").strings();
  const size_t nv = q.vertices.size();
  Reader arrows = r.at("arrows");
  for (size_t i = 0; i < arrows.size(); ++i) {
    Reader a = arrows.item(i);
    q.arrows.push_back({a.at("name").str(), a.at("source").index(nv), a.at("target").index(nv)});
  }
  std::vector<Relation> rels;
  Reader rr = r.at("relations");
  for (size_t i = 0; i < rr.size(); ++i) {
    Reader rel = rr.item(i);
    Relation out;
    for (size_t t = 0; t < rel.size(); ++t) {
      Reader term = rel.item(t);
      PathTerm pt{term.at("coeff").scalar(f), {}};
      Reader path = term.at("path");
      for (size_t k = 0; k < path.size(); ++k) {
        const std::string name = path.item(k).str();
        size_t found = q.arrows.size();
        for (size_t a = 0; a < q.arrows.size(); ++a) {
          if (q.arrows[a].name == name) found = a;
        }
        if (found == q.arrows.size()) path.item(k).fail("unknown arrow '" + name + "'");
        pt.arrows.push_back(found);
      }
      out.push_back(std::move(pt));
    }
    rels.push_back(std::move(out));
  }
  return from_quiver(q, rels, r.at("max_path_length").count(), f);
}

HopfAlgebra read_hopf(const Reader& r, const Field& f) {
  LinearCategory alg = read_algebra(r, f);
  const size_t d = alg.hom_dim(0, 0);
  std::vector<SparseVec> comult(d);
  std::vector<bool> seen(d, false);
  Reader cop = r.at("coproduct");
  for (size_t i = 0; i < cop.size(); ++i) {
    Reader e = cop.item(i);
    const size_t b = e.at("basis").index(d);
    if (seen[b]) e.fail("duplicate coproduct entry");
    seen[b] = true;
    Reader v = e.at("value");
    std::vector<std::pair<size_t, Scalar>> entries;
    std::set<size_t> dup;
    for (size_t t = 0; t < v.size(); ++t) {
      Reader x = v.item(t);
      if (x.size() != 3) x.fail("expected [left, right, coefficient]");
      const size_t idx = x.item(0).index(d) * d + x.item(1).index(d);
      if (!dup.insert(idx).second) x.fail("duplicate tensor index");
      entries.emplace_back(idx, x.item(2).scalar(f));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
    for (auto& [idx, c] : entries) {
      if (!c.is_zero()) comult[b].push_back({static_cast<uint32_t>(idx), c});
    }
  }
  Reader cu = r.at("counit");
  if (cu.size() != d) cu.fail("counit needs one coefficient per basis element");
  Vector counit;
  for (size_t i = 0; i < d; ++i) counit.push_back(cu.item(i).scalar(f));
  std::vector<SparseVec> anti(d);
  std::vector<bool> seen_s(d, false);
  Reader s = r.at("antipode");
  for (size_t i = 0; i < s.size(); ++i) {
    Reader e = s.item(i);
    const size_t b = e.at("basis").index(d);
    if (seen_s[b]) e.fail("duplicate antipode entry");
    seen_s[b] = true;
    anti[b] = e.at("value").sparse(f, d);
  }
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit), Matrix::from_columns(f, d, std::move(anti)));
}

HopfAlgebra read_group(const Reader& r, const Field& f) {
  auto labels = r.at("elements").strings();
  const size_t n = labels.size();
  Reader t = r.at("table");
  if (t.size() != n) t.fail("table needs one row per element");
  std::vector<std::vector<size_t>> table(n);
  for (size_t i = 0; i < n; ++i) {
    Reader row = t.item(i);
    if (row.size() != n) row.fail("row needs one entry per element");
    for (size_t j = 0; j < n; ++j) table[i].push_back(row.item(j).index(n));
  }
  return group_algebra(table, f, labels);
}

Problem build_problem(const Json& doc) {
  Reader root(doc, "");
  if (!doc.is_object()) root.fail("expected an object");
  Problem p;
  p.kind = root.at("kind").str();
  p.name = root.has("name") ? root.at("name").str() : std::string();
  if (p.kind == "bundled") {
    BundledExample b = bundled(p.name);
    return problem_from_bundled(b);
  }
  Field f;
  {
    Reader fr = root.at("field");
    try {
      f = parse_field(fr.str());
    } catch (const Error& e) {
      fr.fail(e.what());
    }
  }
  try {
    if (p.kind == "algebra") {
      p.category = read_algebra(root, f);
    } else if (p.kind == "category") {
      p.category = read_category(root, f);
    } else if (p.kind == "quiver") {
      p.category = read_quiver(root, f);
    } else if (p.kind == "hopf") {
      p.hopf = read_hopf(root, f);
    } else if (p.kind == "group") {
      p.hopf = read_group(root, f);
    } else if (p.kind == "taft") {
      std::optional<Scalar> q;
      if (root.has("q")) q = root.at("q").scalar(f);
      p.hopf = taft(root.at("n").count(), f, q);
    } else {
      root.at("kind").fail("unknown kind '" + p.kind + "'");
    }
  } catch (const Error& e) {
    if (!is_math_error(e.code())) throw;
    p.construction_error = e.what();
    return p;
  }
  if (p.hopf) p.category = p.hopf->algebra();
  return p;
}

}  // namespace

Field parse_field(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.size() > 1 && name[0] == 'F') {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 19) {
      return Field::prime(std::stoull(digits));
    }
  }
  throw Error(ErrorCode::Parse, "unknown field '" + name + "' (expected \"Q\" or \"F<p>\")");
}

Problem parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return build_problem(doc);
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw Error(ErrorCode::Parse, path + ": " + e.what());
    throw;
  }
}

Problem problem_from_bundled(const BundledExample& b) {
  Problem p;
  p.name = b.name;
  p.kind = b.hopf ? "hopf" : (b.category.is_algebra() ? "algebra" : "category");
  p.category = b.category;
  p.hopf = b.hopf;
  return p;
}

Json sparse_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json::array({e.index, e.value.str()}));
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

namespace {

void algebra_fields(Json& j, const LinearCategory& c) {
  const size_t d = c.hom_dim(0, 0);
  j["basis"] = c.hom_labels(0, 0);
  j["unit"] = sparse_to_json(c.identity(0));
  Json prods = Json::array();
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) {
      const SparseVec& v = c.compose(0, 0, 0, a, b);
      if (v.empty()) continue;
      prods.push_back({{"left", a}, {"right", b}, {"value", sparse_to_json(v)}});
    }
  }
  j["products"] = std::move(prods);
}

}  // namespace

Json category_to_json(const LinearCategory& c) {
  Json j;
  j["format"] = "gerst-1";
  j["field"] = c.field().name();
  if (c.is_algebra()) {
    j["kind"] = "algebra";
    algebra_fields(j, c);
    return j;
  }
  j["kind"] = "category";
  const size_t n = c.num_objects();
  j["objects"] = c.objects();
  Json homs = Json::array(), ids = Json::array(), comps = Json::array();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (c.hom_dim(a, b) > 0) homs.push_back({{"source", a}, {"target", b}, {"basis", c.hom_labels(a, b)}});
    }
  }
  for (size_t a = 0; a < n; ++a) ids.push_back({{"object", a}, {"value", sparse_to_json(c.identity(a))}});
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      for (size_t cc = 0; cc < n; ++cc) {
        for (size_t g = 0; g < c.hom_dim(b, cc); ++g) {
          for (size_t f = 0; f < c.hom_dim(a, b); ++f) {
            const SparseVec& v = c.compose(a, b, cc, g, f);
            if (v.empty()) continue;
            comps.push_back({{"a", a}, {"b", b}, {"c", cc}, {"g", g}, {"f", f}, {"value", sparse_to_json(v)}});
          }
        }
      }
    }
  }
  j["homs"] = std::move(homs);
  j["identities"] = std::move(ids);
  j["compositions"] = std::move(comps);
  return j;
}

Json hopf_to_json(const HopfAlgebra& h) {
  Json j;
  j["format"] = "gerst-1";
  j["field"] = h.field().name();
  j["kind"] = "hopf";
  algebra_fields(j, h.algebra());
  const size_t d = h.dim();
  Json cop = Json::array(), anti = Json::array();
  for (size_t b = 0; b < d; ++b) {
    Json v = Json::array();
    for (const auto& e : h.comult(b)) v.push_back(Json::array({e.index / d, e.index % d, e.value.str()}));
    cop.push_back({{"basis", b}, {"value", std::move(v)}});
    anti.push_back({{"basis", b}, {"value", sparse_to_json(h.antipode().column(b))}});
  }
  j["coproduct"] = std::move(cop);
  j["counit"] = vector_to_json(h.counit());
  j["antipode"] = std::move(anti);
  return j;
}

Json bundled_to_json(const BundledExample& b) {
  Json body = b.hopf ? hopf_to_json(*b.hopf) : category_to_json(b.category);
  Json j;
  j["format"] = body["format"];
  j["kind"] = body["kind"];
  j["name"] = b.name;
  j["description"] = b.description;
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() != "format" && it.key() != "kind") j[it.key()] = it.value();
  }
  return j;
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["trials"] = r.trials;
  Json fails = Json::array();
  static const char* names[] = {"p", "q", "r"};
  for (const auto& f : r.failures) {
    Json x;
    for (size_t i = 0; i < f.degrees.size() && i < 3; ++i) x[names[i]] = f.degrees[i];
    x["seed"] = f.seed;
    x["detail"] = f.detail;
    if (f.defect) {
      x["max_abs_defect_entry_location"] = {{"tuple", f.defect->tuple},
                                            {"output", f.defect->output},
                                            {"inputs", f.defect->inputs},
                                            {"value", f.defect->value}};
    } else {
      x["max_abs_defect_entry_location"] = nullptr;
    }
    fails.push_back(std::move(x));
  }
  j["failures"] = std::move(fails);
  return j;
}

Json report_to_json(const ExtHhReport& r) {
  Json j;
  j["chain_map"] = r.chain_map;
  j["counit_recovery"] = r.counit_recovery;
  Json deg = Json::array();
  for (const auto& d : r.degrees) {
    deg.push_back({{"degree", d.degree}, {"ext_dim", d.ext_dim}, {"hh_dim", d.hh_dim}, {"iota_rank", d.iota_rank}});
  }
  j["degrees"] = std::move(deg);
  j["product_pairs"] = r.product_pairs;
  j["bracket_pairs"] = r.bracket_pairs;
  j["failures"] = r.failures;
  return j;
}

Json fs_bracket_to_json(const FsBracket& b) {
  Json j;
  j["degree"] = b.degree;
  j["coboundary"] = b.coboundary;
  if (b.image_checked) {
    j["in_image"] = b.in_image;
  } else {
    j["in_image"] = nullptr;
  }
  j["ext_coords"] = b.ext_coords ? vector_to_json(*b.ext_coords) : Json(nullptr);
  return j;
}

Json witness_to_json(const BracketWitness& w) {
  Json j;
  j["p"] = w.p;
  j["q"] = w.q;
  j["i"] = w.i;
  j["j"] = w.j;
  j["phi"] = vector_to_json(w.phi.values());
  j["psi"] = vector_to_json(w.psi.values());
  j["bracket"] = vector_to_json(w.value.values());
  return j;
}

}  // namespace gerst
