#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gerst/extalg.hpp"
#include "gerst/fixtures.hpp"
#include "gerst/gerstenhaber.hpp"

namespace gerst {

using Json = nlohmann::ordered_json;

// An input document after parsing. Structural problems (bad JSON, missing
// keys, indices out of range, malformed coefficients) raise Parse errors with
// a JSON pointer. Mathematical problems found while constructing (a table
// that is not a group, an inadmissible relation, ...) are kept in
// construction_error so that `validate` can report them.
struct Problem {
  std::string name;
  std::string kind;
  LinearCategory category;
  std::optional<HopfAlgebra> hopf;
  std::optional<std::string> construction_error;
};

Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);
Problem problem_from_bundled(const BundledExample& b);

Field parse_field(const std::string& name);

// Full structure-constant documents: kind "hopf" when a Hopf structure is
// present, "algebra" for other one-object categories, else "category".
Json category_to_json(const LinearCategory& c);
Json hopf_to_json(const HopfAlgebra& h);
Json bundled_to_json(const BundledExample& b);

Json vector_to_json(const Vector& v);
Json sparse_to_json(const SparseVec& v);

Json report_to_json(const VerifyReport& r);
Json report_to_json(const ExtHhReport& r);
Json fs_bracket_to_json(const FsBracket& b);
Json witness_to_json(const BracketWitness& w);

}  // namespace gerst
