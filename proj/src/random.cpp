#include "gerst/random.hpp"

namespace gerst {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) {
    const uint64_t p = f.characteristic();
    // Rejection keeps the residues exactly uniform.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return Scalar(static_cast<int64_t>(x % p));
  }
  return f.from_int(static_cast<int64_t>(rng() % 7) - 3);
}

}  // namespace gerst
