#include <gtest/gtest.h>

#include "gerst/fixtures.hpp"
#include "gerst/hochschild.hpp"
#include "gerst/random.hpp"
#include "oracles/small_resolutions.hpp"

using namespace gerst;

namespace {

size_t truncation(const LinearCategory& c) { return c.total_dim() <= 3 ? 5 : 4; }

std::vector<size_t> safe_dims(const HochschildComplex& hc) {
  auto d = hc.complex().cohomology_dims();
  d.pop_back();
  return d;
}

}  // namespace

class EveryFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryFixture, DifferentialSquaresToZero) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, truncation(b.category));
  EXPECT_FALSE(hc.complex().verify_d_squared().has_value());
}

TEST_P(EveryFixture, DirectFormulaMatchesMatrix) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, 3);
  for (size_t n = 0; n < 3; ++n) {
    for (uint64_t s = 0; s < 3; ++s) {
      auto phi = hc.random(n, splitmix64(s * 31 + n));
      EXPECT_EQ(hc.differential(phi).values(), hc.complex().differential(n).apply(phi.values()));
    }
  }
}

TEST_P(EveryFixture, IdentityIsCocycle) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, 2);
  EXPECT_TRUE(hc.complex().is_cocycle(0, hc.identity().values()));
}

TEST_P(EveryFixture, DimsInvariantUnderBasisPermutation) {
  auto b = bundled(GetParam());
  const auto& c = b.category;
  const size_t k = c.num_objects();
  std::vector<std::vector<size_t>> perm(k * k);
  for (size_t a = 0; a < k; ++a) {
    for (size_t bb = 0; bb < k; ++bb) {
      const size_t d = c.hom_dim(a, bb);
      for (size_t i = 0; i < d; ++i) perm[a * k + bb].push_back((d - i) % d);
    }
  }
  HochschildComplex h1(c, 3), h2(c.permuted(perm), 3);
  EXPECT_EQ(safe_dims(h1), safe_dims(h2));
}

TEST_P(EveryFixture, CocyclesAndCoboundaries) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, 3);
  const auto& K = hc.complex();
  for (size_t n = 1; n < 3; ++n) {
    auto u = hc.random(n - 1, 77 + n);
    Vector v = K.differential(n - 1).apply(u.values());
    EXPECT_TRUE(K.is_cocycle(n, v));
    auto pre = K.is_coboundary(n, v);
    ASSERT_TRUE(pre);
    EXPECT_EQ(K.differential(n - 1).apply(*pre), v);
    auto h = K.cohomology(n);
    for (size_t j = 0; j < h.dim; ++j) {
      EXPECT_TRUE(K.is_cocycle(n, h.representatives.dense_column(j)));
      EXPECT_FALSE(K.is_coboundary(n, h.representatives.dense_column(j)));
    }
    EXPECT_TRUE(K.is_coboundary(n, Vector(K.dim(n))));
  }
}

INSTANTIATE_TEST_SUITE_P(Bundled, EveryFixture, ::testing::ValuesIn(bundled_names()));

TEST(Hochschild, GroundFieldIsSeparable) {
  HochschildComplex hc(bundled("k").category, 5);
  for (size_t n = 0; n <= 5; ++n) EXPECT_EQ(hc.complex().dim(n), 1u);
  EXPECT_EQ(safe_dims(hc), (std::vector<size_t>{1, 0, 0, 0, 0}));
}

TEST(Hochschild, DualNumbersMatchPeriodicResolution) {
  HochschildComplex q(bundled("dual_numbers_q").category, 5);
  EXPECT_EQ(safe_dims(q), oracle::dual_numbers_hh(0, 4));
  HochschildComplex f2(bundled("dual_numbers_f2").category, 5);
  EXPECT_EQ(safe_dims(f2), oracle::dual_numbers_hh(2, 4));
  EXPECT_EQ(safe_dims(q)[0], 2u);
}

TEST(Hochschild, LinearQuiverMatchesHereditaryResolution) {
  HochschildComplex hc(bundled("a2").category, 4);
  EXPECT_EQ(safe_dims(hc), oracle::linear_quiver_hh(2, 3));
  EXPECT_EQ(safe_dims(hc), (std::vector<size_t>{1, 0, 0, 0}));
}

TEST(Hochschild, CenterOfS3) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  HochschildComplex hc(bundled("s3_q").category, 2);
  auto hh0 = hc.hh0_product();
  EXPECT_EQ(hh0.basis.cols(), oracle::conjugacy_classes(perms));
  EXPECT_TRUE(hh0.commutative);
}

TEST(Hochschild, Hh0Products) {
  HochschildComplex k(bundled("k").category, 1);
  auto a = k.hh0_product();
  ASSERT_EQ(a.basis.cols(), 1u);
  EXPECT_EQ(a.table[0], (Vector{Scalar(1)}));
  // Commutative algebra: HH^0 is the algebra itself with its own product.
  HochschildComplex d(bundled("dual_numbers_q").category, 1);
  auto z = d.hh0_product();
  ASSERT_EQ(z.basis.cols(), 2u);
  EXPECT_EQ(z.basis, Matrix::identity(Field::rationals(), 2));
  EXPECT_EQ(z.table[3], (Vector{Scalar(), Scalar()}));  // x·x = 0
  EXPECT_EQ(z.table[1], (Vector{Scalar(), Scalar(1)}));
}

TEST(Hochschild, MultiObjectLayoutSkipsZeroSpaces) {
  HochschildComplex hc(bundled("a2").category, 2);
  // degree 1: tuples (0,0), (1,0), (1,1); A(1,0) = 0 removes (0,1)
  auto l = hc.layout(1);
  for (const auto& c : l->components()) {
    EXPECT_GT(c.out_dim, 0u);
    for (auto d : c.in_dims) EXPECT_GT(d, 0u);
  }
  EXPECT_EQ(l->components().size(), 3u);
  EXPECT_EQ(l->dim(), 3u);
}
