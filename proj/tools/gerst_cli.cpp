// Command-line front end. Talks to the library only through gerst.h.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gerst/gerst.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kMath = 1, kUsage = 2 };

int exit_for(gerst_status s) {
  switch (s) {
    case GERST_OK:
      return kOk;
    case GERST_ERR_INVALID:
    case GERST_ERR_VERIFICATION:
      return kMath;
    default:
      return kUsage;
  }
}

std::string coeffs(const Json& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

void render_failures(const Json& report, std::ostream& out) {
  for (const auto& f : report["failures"]) {
    out << "    FAIL";
    for (const char* k : {"p", "q", "r"}) {
      if (f.contains(k)) out << ' ' << k << '=' << f[k].get<int>();
    }
    if (f.contains("degree") && f["degree"].get<long>() >= 0) out << " degree " << f["degree"].get<long>();
    if (f.contains("seed")) out << " seed " << f["seed"].get<uint64_t>();
    out << ": " << f["detail"].get<std::string>() << '\n';
    if (f.contains("max_abs_defect_entry_location") && !f["max_abs_defect_entry_location"].is_null()) {
      out << "      at " << f["max_abs_defect_entry_location"].dump() << '\n';
    }
  }
}

void render_text(const Json& j, std::ostream& out) {
  const std::string cmd = j["command"];
  out << cmd << ": " << j["name"].get<std::string>();
  if (j.contains("field")) out << " over " << j["field"].get<std::string>();
  if (j.contains("max_degree")) out << ", N = " << j["max_degree"].get<size_t>();
  out << '\n';
  if (cmd == "validate") {
    out << (j["valid"].get<bool>() ? "valid" : "INVALID") << '\n';
    for (const auto& v : j["violations"]) out << "  " << v.get<std::string>() << '\n';
  } else if (cmd == "hh") {
    out << "degree  dim HH\n";
    for (const auto& r : j["dims"]) {
      out << "  " << r["degree"].get<size_t>() << "     ";
      if (r["upper_truncation_unsafe"].get<bool>()) {
        out << "<= " << r["upper_bound"].get<size_t>() << "  (top of truncation)\n";
      } else {
        out << r["dim"].get<size_t>() << '\n';
      }
    }
    const Json& h = j["hh0"];
    out << "HH^0: dim " << h["dim"].get<size_t>() << (h["commutative"].get<bool>() ? ", commutative" : ", NOT commutative")
        << '\n';
    for (const auto& p : h["products"]) {
      out << "  b" << p["i"].get<size_t>() << " * b" << p["j"].get<size_t>() << " = " << coeffs(p["coords"]) << '\n';
    }
  } else if (cmd == "verify") {
    for (const auto& r : j["reports"]) {
      out << "  " << (r["failures"].empty() ? "ok  " : "FAIL") << "  " << r["identity"].get<std::string>() << " ("
          << r["trials"].get<size_t>() << " trials)\n";
      render_failures(r, out);
    }
    out << j["failures"].get<size_t>() << " failure(s)\n";
  } else if (cmd == "ext") {
    out << "degree  dim Ext(k,k)\n";
    for (const auto& r : j["dims"]) out << "  " << r["degree"].get<size_t>() << "     " << r["dim"].get<size_t>() << '\n';
    for (const auto& p : j["products"]) {
      out << "  e" << p["p"].get<size_t>() << "." << p["i"].get<size_t>() << " * e" << p["q"].get<size_t>() << "."
          << p["j"].get<size_t>() << " = " << coeffs(p["coords"]) << '\n';
    }
    for (const auto& b : j["brackets"]) {
      out << "  [e" << b["p"].get<size_t>() << "." << b["i"].get<size_t>() << ", e" << b["q"].get<size_t>() << "."
          << b["j"].get<size_t>() << "] ";
      const Json& v = b["value"];
      if (v["coboundary"].get<bool>()) {
        out << "= 0 in HH\n";
      } else {
        out << "!= 0 in HH";
        if (!v["in_image"].is_null()) out << (v["in_image"].get<bool>() ? ", in the image of Ext" : ", outside the image of Ext");
        out << '\n';
      }
    }
    for (const auto& f : j["commutativity_failures"]) out << "  FAIL commutativity " << f.get<std::string>() << '\n';
  } else if (cmd == "compare") {
    out << "degree  Ext(k,H_ad)  HH\n";
    for (const auto& r : j["rows"]) {
      out << "  " << r["degree"].get<size_t>() << "     " << r["ext_adjoint"].get<size_t>() << "            "
          << r["hh"].get<size_t>() << (r["equal"].get<bool>() ? "" : "   MISMATCH") << '\n';
    }
    const Json& io = j["iota"];
    out << "iota: chain map " << (io["chain_map"].get<bool>() ? "ok" : "FAIL") << ", counit recovery "
        << (io["counit_recovery"].get<bool>() ? "ok" : "FAIL") << '\n';
    for (const auto& d : io["degrees"]) {
      out << "  degree " << d["degree"].get<size_t>() << ": rank " << d["iota_rank"].get<size_t>() << " of "
          << d["ext_dim"].get<size_t>() << '\n';
    }
    for (const auto& f : io["failures"]) out << "  FAIL " << f.get<std::string>() << '\n';
  }
  if (j.contains("ok")) out << (j["ok"].get<bool>() ? "OK" : "FAILED") << '\n';
}

struct Args {
  std::string input;
  unsigned max_degree = 0;
  unsigned trials = 100;
  uint64_t seed = 0;
  std::string suite = "all";
  std::string format = "json";
  bool force = false;
};

gerst_status open_problem(const std::string& input, gerst_problem** p) {
  const std::string prefix = "bundled:";
  if (input.rfind(prefix, 0) == 0) return gerst_problem_bundled(input.c_str() + prefix.size(), p);
  return gerst_problem_load(input.c_str(), p);
}

int run(const std::string& cmd, const Args& a, bool has_seed) {
  gerst_problem* p = nullptr;
  gerst_status s = open_problem(a.input, &p);
  if (s != GERST_OK) {
    std::cerr << "error: " << gerst_last_error() << '\n';
    return exit_for(s);
  }
  gerst_options o;
  gerst_options_init(&o);
  o.max_degree = a.max_degree;
  o.trials = a.trials;
  o.seed = a.seed;
  o.has_seed = has_seed ? 1 : 0;
  o.suite = a.suite.c_str();
  o.force = a.force ? 1 : 0;

  char* report = nullptr;
  int ok = 1;
  if (cmd == "validate") {
    s = gerst_validate(p, &report, &ok);
  } else if (cmd == "hh") {
    s = gerst_hh(p, &o, &report);
  } else if (cmd == "verify") {
    s = gerst_verify(p, &o, &report, &ok);
  } else if (cmd == "ext") {
    s = gerst_ext(p, &o, &report, &ok);
  } else {
    s = gerst_compare(p, &o, &report, &ok);
  }
  gerst_problem_free(p);
  if (s != GERST_OK) {
    std::cerr << "error: " << gerst_last_error() << '\n';
    return exit_for(s);
  }
  if (a.format == "text") {
    render_text(Json::parse(report), std::cout);
  } else {
    std::cout << report;
  }
  gerst_string_free(report);
  return ok ? kOk : kMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology, Gerstenhaber brackets and Hopf algebra Ext"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gerst_version());
  Args a;
  std::string chosen;
  CLI::Option* seed_opt = nullptr;

  auto add = [&](const char* name, const char* help, bool degree, bool sampled) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", a.input, "input JSON file, or bundled:<name>")->required();
    sub->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "text"}));
    if (degree) {
      sub->add_option("--max-degree", a.max_degree, "truncation degree N (default 5 for total dimension <= 3, else 4)")
          ->check(CLI::Range(2u, 64u));
      sub->add_flag("--force", a.force, "run even when the memory estimate exceeds the limit");
    }
    if (sampled) {
      sub->add_option("--suite", a.suite, "suites to run")->check(CLI::IsMember({"complex", "e2", "ext", "all"}));
      sub->add_option("--trials", a.trials, "random trials per identity")->check(CLI::PositiveNumber);
      seed_opt = sub->add_option("--seed", a.seed, "seed for sampled identities (required for e2 and all)");
    }
    sub->callback([&chosen, name] { chosen = name; });
  };
  add("validate", "check the structure constants against the axioms", false, false);
  add("hh", "Hochschild cohomology dimensions and the HH^0 product", true, false);
  add("verify", "check the algebraic identities", true, true);
  add("ext", "Ext over a Hopf algebra: dimensions, products and brackets", true, false);
  add("compare", "Ext(k, H_ad) against HH and the map Ext -> HH", true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return run(chosen, a, seed_opt && seed_opt->count() > 0);
}
