#pragma once

#include <cstdint>
#include <random>

#include "gerst/field.hpp"

namespace gerst {

// Deterministic 64-bit mixing used to derive per-trial seeds.
uint64_t splitmix64(uint64_t x);

// Uniform residue over F_p, or an integer in [-3, 3] over Q. Only the raw
// engine output is used, so draws are identical on every standard library.
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

}  // namespace gerst
