#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gerst/json_io.hpp"

namespace gerst {

// What the command-line front end runs. Each command returns a JSON report
// and whether every mathematical check passed; usage problems throw.
struct CommandOptions {
  size_t max_degree = 0;  // 0: 5 when the total hom dimension is <= 3, else 4
  size_t trials = 100;
  std::optional<uint64_t> seed;
  std::string suite = "all";
  bool force = false;
};

struct CommandResult {
  Json report;
  bool ok = true;
};

CommandResult run_validate(const Problem& p);
CommandResult run_hh(const Problem& p, const CommandOptions& o);
CommandResult run_verify(const Problem& p, const CommandOptions& o);
CommandResult run_ext(const Problem& p, const CommandOptions& o);
CommandResult run_compare(const Problem& p, const CommandOptions& o);

size_t default_max_degree(const Problem& p);
// Predicted peak bytes for cochains and differentials up to max_degree.
double estimate_bytes(const Problem& p, size_t max_degree, bool with_ext);
constexpr uint64_t kMemoryLimit = 4ULL << 30;

}  // namespace gerst
