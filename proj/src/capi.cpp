#include "gerst/gerst.h"

#include <cstring>
#include <string>

#include "gerst/commands.hpp"
#include "gerst/parallel.hpp"

struct gerst_problem {
  gerst::Problem problem;
};

namespace {

using namespace gerst;

thread_local std::string g_last_error;

gerst_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
      return GERST_ERR_PARSE;
    case ErrorCode::Usage:
    case ErrorCode::DegreeOutOfRange:
    case ErrorCode::IndexError:
      return GERST_ERR_USAGE;
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::NotAGroup:
    case ErrorCode::NonAdmissible:
    case ErrorCode::NotFinite:
    case ErrorCode::NoRootOfUnity:
    case ErrorCode::FieldMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotASubspace:
      return GERST_ERR_INVALID;
    case ErrorCode::VerificationFailed:
      return GERST_ERR_VERIFICATION;
    case ErrorCode::Unsupported:
      return GERST_ERR_UNSUPPORTED;
    case ErrorCode::Resource:
      return GERST_ERR_RESOURCE;
  }
  return GERST_ERR_INTERNAL;
}

template <class Fn>
gerst_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GERST_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GERST_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GERST_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void finish(const CommandResult& r, char** report, int* ok) {
  if (report) *report = dup_string(r.report.dump(2) + "\n");
  if (ok) *ok = r.ok ? 1 : 0;
}

CommandOptions options(const gerst_options* o) {
  CommandOptions c;
  if (!o) return c;
  if (o->threads) set_thread_count(o->threads);
  c.max_degree = o->max_degree;
  c.trials = o->trials;
  if (o->has_seed) c.seed = o->seed;
  if (o->suite) c.suite = o->suite;
  c.force = o->force != 0;
  return c;
}

}  // namespace

extern "C" {

void gerst_options_init(gerst_options* o) {
  if (!o) return;
  o->max_degree = 0;
  o->trials = 100;
  o->seed = 0;
  o->has_seed = 0;
  o->suite = nullptr;
  o->force = 0;
  o->threads = 0;
}

const char* gerst_version(void) { return "1.0.0"; }

const char* gerst_last_error(void) { return g_last_error.c_str(); }

gerst_status gerst_problem_load(const char* path, gerst_problem** out) {
  return guarded([&] {
    if (!path || !out) throw Error(ErrorCode::Usage, "null argument");
    *out = new gerst_problem{load_problem(path)};
  });
}

gerst_status gerst_problem_parse(const char* json, gerst_problem** out) {
  return guarded([&] {
    if (!json || !out) throw Error(ErrorCode::Usage, "null argument");
    *out = new gerst_problem{parse_problem(json)};
  });
}

gerst_status gerst_problem_bundled(const char* name, gerst_problem** out) {
  return guarded([&] {
    if (!name || !out) throw Error(ErrorCode::Usage, "null argument");
    *out = new gerst_problem{problem_from_bundled(bundled(name))};
  });
}

void gerst_problem_free(gerst_problem* p) { delete p; }

int gerst_problem_is_hopf(const gerst_problem* p) { return p && p->problem.hopf ? 1 : 0; }

size_t gerst_bundled_count(void) { return bundled_names().size(); }

const char* gerst_bundled_name(size_t i) {
  const auto& n = bundled_names();
  return i < n.size() ? n[i].c_str() : nullptr;
}

gerst_status gerst_validate(const gerst_problem* p, char** report, int* ok) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    finish(run_validate(p->problem), report, ok);
  });
}

gerst_status gerst_hh(const gerst_problem* p, const gerst_options* o, char** report) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    finish(run_hh(p->problem, options(o)), report, nullptr);
  });
}

gerst_status gerst_verify(const gerst_problem* p, const gerst_options* o, char** report, int* ok) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    finish(run_verify(p->problem, options(o)), report, ok);
  });
}

gerst_status gerst_ext(const gerst_problem* p, const gerst_options* o, char** report, int* ok) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    finish(run_ext(p->problem, options(o)), report, ok);
  });
}

gerst_status gerst_compare(const gerst_problem* p, const gerst_options* o, char** report, int* ok) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    finish(run_compare(p->problem, options(o)), report, ok);
  });
}

gerst_status gerst_estimate_bytes(const gerst_problem* p, unsigned max_degree, int with_ext, uint64_t* bytes) {
  return guarded([&] {
    if (!p || !bytes) throw Error(ErrorCode::Usage, "null argument");
    *bytes = static_cast<uint64_t>(estimate_bytes(p->problem, max_degree, with_ext != 0));
  });
}

uint64_t gerst_memory_limit(void) { return kMemoryLimit; }

gerst_status gerst_problem_export(const gerst_problem* p, char** json) {
  return guarded([&] {
    if (!p) throw Error(ErrorCode::Usage, "null problem");
    const Problem& pr = p->problem;
    if (pr.construction_error) throw Error(ErrorCode::InvalidAlgebra, *pr.construction_error);
    Json body = pr.hopf ? hopf_to_json(*pr.hopf) : category_to_json(pr.category);
    if (!pr.name.empty()) body["name"] = pr.name;
    if (json) *json = dup_string(body.dump(2) + "\n");
  });
}

void gerst_string_free(char* s) { delete[] s; }

}  // extern "C"
