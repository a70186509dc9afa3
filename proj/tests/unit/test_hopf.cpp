#include <gtest/gtest.h>

#include <array>

#include "gerst/hopf.hpp"

using namespace gerst;

namespace {

const Field Q = Field::rationals();

Vector basis(size_t i, size_t d) {
  Vector v(d);
  v[i] = Scalar(1);
  return v;
}

// Sweedler H4 written out by hand in the basis 1, x, g, gx.
struct SweedlerTable {
  // product[a][b] = (coefficient, index) or coefficient 0
  int coeff[4][4];
  int index[4][4];
};

const SweedlerTable kSweedler = {
    {{1, 1, 1, 1}, {1, 0, -1, 0}, {1, 1, 1, 1}, {1, 0, -1, 0}},
    {{0, 1, 2, 3}, {1, 0, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 0}},
};

}  // namespace

TEST(Hopf, GroupAlgebraC2Valid) {
  HopfAlgebra h = group_algebra(cyclic_group_table(2), Field::prime(2));
  EXPECT_TRUE(h.validate().ok());
  EXPECT_TRUE(h.is_cocommutative());
  EXPECT_EQ(h.antipode().at(1, 1), Scalar(1));
}

TEST(Hopf, TrivialGroupIsGroundField) {
  HopfAlgebra h = group_algebra({{0}}, Q);
  EXPECT_EQ(h.dim(), 1u);
  EXPECT_TRUE(h.validate().ok());
  EXPECT_TRUE(h.is_cocommutative());
}

TEST(Hopf, CorruptedAntipodeReported) {
  HopfAlgebra h = sweedler(Q);
  std::vector<SparseVec> cols = h.antipode().columns();
  cols[1] = {{3, Scalar(1)}};  // S(x) = gx instead of -gx
  HopfAlgebra bad(h.algebra(), [&] {
    std::vector<SparseVec> c;
    for (size_t i = 0; i < 4; ++i) c.push_back(h.comult(i));
    return c;
  }(), h.counit(), Matrix::from_columns(Q, 4, cols));
  EXPECT_FALSE(bad.validate().ok());
}

TEST(Hopf, SweedlerMatchesHandTable) {
  HopfAlgebra h = sweedler(Q);
  ASSERT_EQ(h.dim(), 4u);
  EXPECT_EQ(h.labels(), (std::vector<std::string>{"1", "x", "g", "g x"}));
  for (size_t a = 0; a < 4; ++a) {
    for (size_t b = 0; b < 4; ++b) {
      Vector expect(4);
      if (kSweedler.coeff[a][b] != 0) expect[kSweedler.index[a][b]] = Q.from_int(kSweedler.coeff[a][b]);
      EXPECT_EQ(h.multiply(basis(a, 4), basis(b, 4)), expect) << a << "*" << b;
    }
  }
  // S(x) = -gx, S(gx) = x, eps = (1, 0, 1, 0)
  EXPECT_EQ(h.antipode().dense_column(1), (Vector{Scalar(), Scalar(), Scalar(), Q.from_int(-1)}));
  EXPECT_EQ(h.antipode().dense_column(3), basis(1, 4));
  EXPECT_EQ(h.counit(), (Vector{Scalar(1), Scalar(), Scalar(1), Scalar()}));
  // Δ(gx) = gx⊗g + 1⊗gx
  Vector dgx(16);
  dgx[3 * 4 + 2] = Scalar(1);
  dgx[0 * 4 + 3] = Scalar(1);
  EXPECT_EQ(to_dense(h.comult(3), 16), dgx);
  EXPECT_TRUE(h.validate().ok());
  EXPECT_FALSE(h.is_cocommutative());
}

TEST(Hopf, Taft3OverF7) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(primitive_root_of_unity(3, f7), Scalar(2));
  HopfAlgebra h = taft(3, f7);
  EXPECT_EQ(h.dim(), 9u);
  EXPECT_TRUE(h.validate().ok());
  EXPECT_FALSE(h.is_cocommutative());
  HopfAlgebra h4 = taft(3, f7, Scalar(4));
  EXPECT_TRUE(h4.validate().ok());
  EXPECT_THROW(taft(3, f7, Scalar(1)), Error);
}

TEST(Hopf, RootOfUnityErrors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Usage;
  };
  EXPECT_EQ(code([] { taft(2, Field::prime(2)); }), ErrorCode::NoRootOfUnity);
  EXPECT_EQ(code([] { taft(3, Field::rationals()); }), ErrorCode::NoRootOfUnity);
  EXPECT_EQ(code([] { taft(3, Field::prime(5)); }), ErrorCode::NoRootOfUnity);
}

TEST(Hopf, NotAGroup) {
  auto code = [](std::vector<std::vector<size_t>> t) {
    try {
      group_algebra(t, Q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Usage;
  };
  EXPECT_EQ(code({{0, 1}, {1, 1}}), ErrorCode::NotAGroup);
  EXPECT_EQ(code({{0, 1}, {0, 1}}), ErrorCode::NotAGroup);
  EXPECT_EQ(code({{0, 2}, {1, 0}}), ErrorCode::NotAGroup);
}

// S3 from permutation composition written independently: compose as maps on {0,1,2}.
TEST(Hopf, SymmetricGroupTableIsS3) {
  std::vector<std::string> labels;
  auto t = symmetric_group_table(3, &labels);
  ASSERT_EQ(t.size(), 6u);
  std::vector<std::array<int, 3>> perms;
  for (const auto& l : labels) perms.push_back({l[1] - '1', l[2] - '1', l[3] - '1'});
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      EXPECT_EQ(perms[t[a][b]], c);
    }
  HopfAlgebra h = group_algebra(t, Field::prime(3), labels);
  EXPECT_TRUE(h.validate().ok());
  // non-abelian
  bool abelian = true;
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) abelian = abelian && t[a][b] == t[b][a];
  EXPECT_FALSE(abelian);
}

TEST(Hopf, AdjointModules) {
  // kG: g acts by conjugation
  std::vector<std::string> labels;
  auto t = symmetric_group_table(3, &labels);
  HopfAlgebra s3 = group_algebra(t, Q, labels);
  HModule ad = adjoint_module(s3);
  for (size_t g = 0; g < 6; ++g) {
    size_t ginv = 0;
    while (t[g][ginv] != 0) ++ginv;
    for (size_t y = 0; y < 6; ++y) {
      const auto& v = ad.action(g, y);
      ASSERT_EQ(v.size(), 1u);
      EXPECT_EQ(v.front().index, t[t[g][y]][ginv]);
    }
  }
  // Sweedler: g ▷ x = -x
  HopfAlgebra sw = sweedler(Q);
  HModule adsw = adjoint_module(sw);
  EXPECT_EQ(adsw.act(sw, basis(2, 4), basis(1, 4)), (Vector{Scalar(), Q.from_int(-1), Scalar(), Scalar()}));
  for (const HopfAlgebra* h : {&s3, &sw}) {
    HModule m = adjoint_module(*h);
    EXPECT_TRUE(m.validate(*h).ok());
    const size_t d = h->dim();
    for (size_t x = 0; x < d; ++x) {
      // x ▷ 1 = eps(x) 1
      Vector expect = h->unit();
      for (auto& c : expect) c = h->field().mul(c, h->counit()[x]);
      EXPECT_EQ(m.act(*h, basis(x, d), h->unit()), expect);
      // eps(x ▷ y) = eps(x) eps(y)
      for (size_t y = 0; y < d; ++y) {
        Vector r = m.act(*h, basis(x, d), basis(y, d));
        Scalar e;
        for (size_t i = 0; i < d; ++i) h->field().add_mul(e, r[i], h->counit()[i]);
        EXPECT_EQ(e, h->field().mul(h->counit()[x], h->counit()[y]));
      }
    }
  }
}

TEST(Hopf, TrivialModules) {
  for (const HopfAlgebra& h : {group_algebra(cyclic_group_table(2), Field::prime(2)), sweedler(Q),
                               taft(3, Field::prime(7))}) {
    HModule k = trivial_module(h);
    EXPECT_EQ(k.dim(), 1u);
    EXPECT_TRUE(k.validate(h).ok());
  }
}
