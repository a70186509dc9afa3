#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gerst/hopf.hpp"

namespace gerst {

struct BundledExample {
  std::string name;
  std::string description;
  LinearCategory category;
  std::optional<HopfAlgebra> hopf;
};

// Names of the bundled examples in a fixed order.
const std::vector<std::string>& bundled_names();
// Throws Usage for an unknown name.
BundledExample bundled(const std::string& name);

}  // namespace gerst
