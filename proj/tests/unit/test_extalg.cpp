#include <gtest/gtest.h>

#include "gerst/extalg.hpp"
#include "gerst/fixtures.hpp"
#include "gerst/gerstenhaber.hpp"
#include "gerst/random.hpp"
#include "oracles/bar_ext.hpp"
#include "oracles/small_resolutions.hpp"

using namespace gerst;

namespace {

size_t truncation(const HopfAlgebra& h) { return h.dim() <= 3 ? 5 : 4; }

const std::vector<std::string>& hopf_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& n : bundled_names()) {
      if (bundled(n).hopf) out.push_back(n);
    }
    return out;
  }();
  return names;
}

HopfAlgebra hopf(const std::string& name) { return *bundled(name).hopf; }

Vector random_vector(const Field& f, size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector v(n);
  for (auto& x : v) x = random_scalar(f, rng);
  return v;
}

oracle::RawHopf group_raw(const std::vector<std::vector<size_t>>& table) {
  const size_t d = table.size();
  oracle::RawHopf h{d, {}, std::vector<long>(d, 1)};
  h.mult.assign(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) h.mult[i][j][table[i][j]] = 1;
  }
  return h;
}

}  // namespace

TEST(ReducedBar, GroundFieldHasOnlyDegreeZero) {
  auto ext = build_ext_complex(hopf("k"), trivial_module(hopf("k")), 4);
  EXPECT_EQ(ext.aug_dim(), 0u);
  EXPECT_EQ(ext.complex().cohomology_dims(), (std::vector<size_t>{1, 0, 0, 0, 0}));
}

TEST(ReducedBar, C2OverF2MatchesPeriodicResolution) {
  auto ext = build_ext_complex(hopf("c2_f2"), trivial_module(hopf("c2_f2")), 5);
  auto dims = ext.complex().cohomology_dims();
  dims.pop_back();
  auto want = oracle::c2_f2_ext(4);
  EXPECT_EQ(dims, want);
}

TEST(ReducedBar, SweedlerMatchesUnreducedBar) {
  auto h = hopf("sweedler_q");
  auto ext = build_ext_complex(h, trivial_module(h), 4);
  auto dims = ext.complex().cohomology_dims();
  dims.pop_back();
  auto want = oracle::bar_ext_dims(oracle::sweedler_raw(), 0, 3);
  EXPECT_EQ(dims, want);
  EXPECT_EQ(dims, (std::vector<size_t>{1, 0, 1, 0}));
}

TEST(ReducedBar, S3OverF3MatchesUnreducedBar) {
  auto h = hopf("s3_f3");
  auto ext = build_ext_complex(h, trivial_module(h), 3);
  auto dims = ext.complex().cohomology_dims();
  dims.pop_back();
  EXPECT_EQ(dims, oracle::bar_ext_dims(group_raw(symmetric_group_table(3)), 3, 2));
}

TEST(ReducedBar, TrivialCoefficientsKillFirstTerm) {
  auto h = hopf("taft3_f7");
  auto ext = build_ext_complex(h, trivial_module(h), 2);
  EXPECT_TRUE(ext.trivial_coefficients());
  EXPECT_TRUE(ext.complex().differential(0).is_zero());
  auto adj = build_ext_complex(h, adjoint_module(h), 2);
  EXPECT_FALSE(adj.trivial_coefficients());
  EXPECT_FALSE(adj.complex().differential(0).is_zero());
}

TEST(ReducedBar, AugmentationBasisSpansKernelOfCounit) {
  for (const auto& name : hopf_names()) {
    auto h = hopf(name);
    ReducedBarComplex ext(h, trivial_module(h), 1);
    const Matrix& b = ext.augmentation_basis();
    ASSERT_EQ(b.cols() + 1, h.dim());
    for (size_t c = 0; c < b.cols(); ++c) {
      Scalar s = h.field().zero();
      const Vector col = b.dense_column(c);
      for (size_t j = 0; j < h.dim(); ++j) h.field().add_mul(s, col[j], h.counit()[j]);
      EXPECT_TRUE(s.is_zero());
    }
    // π(e_j) read back in H equals e_j - ε(e_j) 1
    for (size_t j = 0; j < h.dim(); ++j) {
      Vector back(h.dim(), h.field().zero());
      for (const auto& e : ext.projection(j)) {
        const Vector col = b.dense_column(e.index);
        for (size_t t = 0; t < h.dim(); ++t) h.field().add_mul(back[t], e.value, col[t]);
      }
      Vector want(h.dim(), h.field().zero());
      want[j] = h.field().one();
      for (size_t t = 0; t < h.dim(); ++t) h.field().add_mul(want[t], h.field().neg(h.counit()[j]), h.unit()[t]);
      EXPECT_EQ(back, want) << name << " " << j;
    }
  }
}

class EveryHopf : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryHopf, DifferentialsSquareToZero) {
  auto h = hopf(GetParam());
  const size_t N = truncation(h);
  EXPECT_FALSE(build_ext_complex(h, trivial_module(h), N).complex().verify_d_squared().has_value());
  EXPECT_FALSE(build_ext_complex(h, adjoint_module(h), N).complex().verify_d_squared().has_value());
}

TEST_P(EveryHopf, AdjointExtMatchesHochschild) {
  for (const auto& row : adjoint_hh_dims(hopf(GetParam()), 4)) {
    EXPECT_EQ(row.ext_dim, row.hh_dim) << "degree " << row.degree;
  }
}

TEST_P(EveryHopf, YonedaProductIsAChainMap) {
  auto h = hopf(GetParam());
  auto ext = build_ext_complex(h, trivial_module(h), 4);
  const Field& k = h.field();
  const auto& c = ext.complex();
  for (size_t p = 0; p < 3; ++p) {
    for (size_t q = 0; p + q < 4; ++q) {
      auto f = random_vector(k, ext.dim(p), p * 10 + q);
      auto g = random_vector(k, ext.dim(q), p * 10 + q + 5);
      auto lhs = c.differential(p + q).apply(yoneda_product(ext, p, f, q, g));
      auto a = yoneda_product(ext, p + 1, c.differential(p).apply(f), q, g);
      auto b = yoneda_product(ext, p, f, q + 1, c.differential(q).apply(g));
      const Scalar s = k.sign(static_cast<int>(p));
      for (size_t i = 0; i < lhs.size(); ++i) EXPECT_EQ(lhs[i], k.add(a[i], k.mul(s, b[i])));
    }
  }
}

TEST_P(EveryHopf, IotaIsAChainMapAndRecoversCochains) {
  ExtHhBridge br(hopf(GetParam()), truncation(hopf(GetParam())));
  EXPECT_FALSE(br.verify_chain_map().has_value());
  EXPECT_FALSE(br.verify_counit_recovery().has_value());
}

TEST_P(EveryHopf, ExtEmbedsIntoHochschild) {
  ExtHhBridge br(hopf(GetParam()), truncation(hopf(GetParam())));
  auto rep = verify_ext_to_hh(br);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  for (const auto& d : rep.degrees) EXPECT_EQ(d.iota_rank, d.ext_dim);
}

TEST_P(EveryHopf, ProductIsGradedCommutative) {
  ExtHhBridge br(hopf(GetParam()), truncation(hopf(GetParam())));
  EXPECT_TRUE(ext_class_table(br, 2).commutativity_failures.empty());
}

INSTANTIATE_TEST_SUITE_P(Bundled, EveryHopf, ::testing::ValuesIn(hopf_names()));

TEST(Yoneda, UnitAndUnsupportedCoefficients) {
  auto h = hopf("sweedler_q");
  auto ext = build_ext_complex(h, trivial_module(h), 3);
  Vector one{h.field().one()};
  auto f = random_vector(h.field(), ext.dim(2), 3);
  EXPECT_EQ(yoneda_product(ext, 0, one, 2, f), f);
  EXPECT_EQ(yoneda_product(ext, 2, f, 0, one), f);
  auto adj = build_ext_complex(h, adjoint_module(h), 2);
  try {
    yoneda_product(adj, 0, Vector(4), 0, Vector(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
}

TEST(Yoneda, C2GeneratorIsPolynomial) {
  ExtHhBridge br(hopf("c2_f2"), 5);
  auto t = ext_class_table(br, 0);
  // t^a · t^b = t^{a+b} with nonzero coordinate in every degree < N
  for (const auto& p : t.products) {
    ASSERT_EQ(p.coords.size(), 1u);
    EXPECT_FALSE(p.coords[0].is_zero()) << p.p << "," << p.q;
  }
}

TEST(Iota, DegreeZeroIsScalarUnit) {
  auto h = hopf("taft3_f7");
  ExtHhBridge br(h, 2);
  const Scalar l = h.field().from_int(3);
  auto c = br.iota(0, Vector{l});
  Vector want = h.unit();
  for (auto& x : want) x = h.field().mul(x, l);
  EXPECT_EQ(c.values(), want);
}

TEST(Iota, GroupAlgebraFormula) {
  auto h = hopf("s3_f3");
  const Field& k = h.field();
  ExtHhBridge br(h, 3);
  const auto& ext = br.ext();
  const size_t d = h.dim(), A = ext.aug_dim();
  auto f = random_vector(k, ext.dim(2), 17);
  auto c = br.iota(2, f);
  // ι(f)(g_1, g_2) = f(π g_1, π g_2) g_1 g_2
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) {
      Scalar val = k.zero();
      for (const auto& x : ext.projection(a)) {
        for (const auto& y : ext.projection(b)) k.add_mul(val, k.mul(x.value, y.value), f[x.index * A + y.index]);
      }
      const size_t prod = h.product(a, b).front().index;
      for (size_t r = 0; r < d; ++r) {
        EXPECT_EQ(c.values()[r * d * d + a * d + b], r == prod ? val : k.zero());
      }
    }
  }
}

TEST(Iota, C2GeneratorIsNontrivial) {
  ExtHhBridge br(hopf("c2_f2"), 3);
  const auto& e1 = br.ext_cohomology(1);
  ASSERT_EQ(e1.dim, 1u);
  auto c = br.iota(1, e1.representatives.dense_column(0));
  EXPECT_TRUE(br.hochschild().complex().is_cocycle(1, c.values()));
  EXPECT_FALSE(br.hochschild().complex().is_coboundary(1, c.values()).has_value());
}

TEST(FsBracket, DegreeZeroVanishes) {
  auto h = hopf("sweedler_q");
  ExtHhBridge br(h, 3);
  Vector one{h.field().one()};
  auto b = br.fs_bracket(0, one, 0, one);
  EXPECT_EQ(b.degree, -1);
  EXPECT_TRUE(b.coboundary);
}

TEST(FsBracket, CocommutativeBracketsVanish) {
  for (const char* name : {"c2_f2", "s3_f3", "s3_q"}) {
    ExtHhBridge br(hopf(name), 4, 5);
    auto t = ext_class_table(br, 3);
    for (const auto& b : t.brackets) EXPECT_TRUE(b.value.coboundary) << name << " " << b.p << "," << b.q;
  }
}

TEST(FsBracket, OutOfRangeDegree) {
  ExtHhBridge br(hopf("c2_f2"), 3);
  const auto& e2 = br.ext_cohomology(2);
  Vector f = e2.representatives.dense_column(0);
  try {
    br.fs_bracket(2, f, 3, Vector(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOutOfRange);
  }
}
