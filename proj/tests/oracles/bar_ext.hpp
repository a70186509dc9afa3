#pragma once

// Ext_H(k, k) from the unreduced bar complex Hom(H^⊗n, k):
//   (δf)(a_1..a_{n+1}) = ε(a_1) f(a_2..) + Σ (-1)^i f(.., a_i a_{i+1}, ..)
//                        + (-1)^{n+1} f(a_1..a_n) ε(a_{n+1})
// built densely from raw structure constants.

#include <vector>

#include "oracles/dense.hpp"

namespace oracle {

struct RawHopf {
  size_t dim;
  // mult[i][j] = coefficients of e_i e_j
  std::vector<std::vector<std::vector<long>>> mult;
  std::vector<long> counit;
};

// Sweedler's algebra in the basis (1, g, x, gx) with g^2 = 1, x^2 = 0, xg = -gx.
inline RawHopf sweedler_raw() {
  RawHopf h{4, {}, {1, 1, 0, 0}};
  auto mono = [](size_t i) { return std::pair<int, int>{static_cast<int>(i & 1), static_cast<int>(i >> 1)}; };
  h.mult.assign(4, std::vector<std::vector<long>>(4, std::vector<long>(4, 0)));
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      auto [a, b] = mono(i);
      auto [c, d] = mono(j);
      if (b + d >= 2) continue;
      // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
      const long s = (b * c) % 2 ? -1 : 1;
      h.mult[i][j][static_cast<size_t>(((a + c) % 2) | ((b + d) << 1))] = s;
    }
  }
  return h;
}

inline std::vector<size_t> bar_ext_dims(const RawHopf& h, uint64_t p, size_t top) {
  DenseField f{p};
  const size_t d = h.dim;
  auto power = [&](size_t n) {
    size_t r = 1;
    for (size_t i = 0; i < n; ++i) r *= d;
    return r;
  };
  auto delta = [&](size_t n) {
    const size_t rows = power(n + 1), cols = power(n);
    DenseMatrix m(rows, std::vector<mpq_class>(cols));
    for (size_t row = 0; row < rows; ++row) {
      std::vector<size_t> a(n + 1);
      for (size_t i = n + 1, r = row; i-- > 0;) {
        a[i] = r % d;
        r /= d;
      }
      auto index = [&](const std::vector<size_t>& t) {
        size_t r = 0;
        for (size_t x : t) r = r * d + x;
        return r;
      };
      std::vector<size_t> rest(a.begin() + 1, a.end());
      m[row][index(rest)] += h.counit[a[0]];
      for (size_t i = 1; i <= n; ++i) {
        for (size_t c = 0; c < d; ++c) {
          const long coef = h.mult[a[i - 1]][a[i]][c];
          if (coef == 0) continue;
          std::vector<size_t> t(a.begin(), a.begin() + static_cast<long>(i - 1));
          t.push_back(c);
          t.insert(t.end(), a.begin() + static_cast<long>(i + 1), a.end());
          m[row][index(t)] += (i % 2 ? -1 : 1) * coef;
        }
      }
      std::vector<size_t> head(a.begin(), a.end() - 1);
      m[row][index(head)] += ((n + 1) % 2 ? -1 : 1) * h.counit[a[n]];
    }
    return m;
  };
  std::vector<size_t> ranks;
  for (size_t n = 0; n <= top; ++n) ranks.push_back(dense_rank(delta(n), f));
  std::vector<size_t> dims;
  for (size_t n = 0; n <= top; ++n) dims.push_back(power(n) - ranks[n] - (n ? ranks[n - 1] : 0));
  return dims;
}

}  // namespace oracle
