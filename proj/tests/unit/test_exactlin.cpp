#include <gtest/gtest.h>

#include "gerst/linalg.hpp"
#include "gerst/parallel.hpp"
#include "support.hpp"

using namespace gerst;
using testsupport::dense_field;
using testsupport::random_matrix;
using testsupport::to_dense_matrix;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F7 = Field::prime(7);

Matrix rows_q(std::vector<std::vector<int64_t>> r, const Field& f = Q) {
  std::vector<std::vector<Scalar>> s;
  size_t cols = r.empty() ? 0 : r[0].size();
  for (auto& row : r) {
    s.emplace_back();
    for (auto v : row) s.back().push_back(f.from_int(v));
  }
  return Matrix::from_rows(f, s, cols);
}

}  // namespace

TEST(Field, RationalsStayReduced) {
  Scalar a = Q.parse("6/-4");
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Q.add(a, Q.parse("3/2")), Q.zero());
  EXPECT_EQ(Q.mul(Q.parse("2/3"), Q.parse("3/2")), Q.one());
  EXPECT_EQ(Q.parse("-7/3").str(), "-7/3");
}

TEST(Field, RationalsPromoteWithoutOverflow) {
  Scalar big = Q.from_int(INT64_MAX);
  Scalar sq = Q.mul(big, big);
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(INT64_MAX) * mpz_class(INT64_MAX)));
  Scalar back = Q.div(sq, big);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_TRUE(Q.sub(sq, sq).is_zero());
}

TEST(Field, PrimeResiduesCanonical) {
  EXPECT_EQ(F7.from_int(-1).num(), 6);
  EXPECT_EQ(F7.parse("1/3"), F7.from_int(5));
  EXPECT_EQ(F7.mul(F7.from_int(3), F7.inv(F7.from_int(3))), F7.one());
  EXPECT_TRUE(F7.contains(F7.from_int(6)));
  EXPECT_FALSE(F7.contains(Scalar(7)));
  EXPECT_FALSE(F7.contains(Scalar(1, 2)));
  EXPECT_THROW(Field::prime(9), Error);
}

TEST(Field, MixedFieldArithmeticThrows) {
  FieldElement a(Q, Q.one()), b(F7, F7.one());
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  std::vector<std::vector<FieldElement>> mixed = {{a, b}};
  EXPECT_THROW(Matrix::from_elements(mixed), Error);
}

TEST(Rref, SpecExamples) {
  auto r = rref(Matrix::identity(Q, 3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivots, (std::vector<size_t>{0, 1, 2}));
  r = rref(Matrix::zero(Q, 2, 5));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_EQ(rank(rows_q({{1, 1}, {1, 1}}, F2)), 1u);
}

TEST(Kernel, SpecExamples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(Q, 4)).cols(), 0u);
  Matrix k = kernel_basis(Matrix::zero(Q, 2, 3));
  EXPECT_EQ(k, Matrix::identity(Q, 3));
  k = kernel_basis(rows_q({{1, 2}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.dense_column(0), (Vector{Q.from_int(-2), Q.one()}));
}

TEST(Image, SpecExamples) {
  EXPECT_EQ(image_basis(Matrix::identity(Q, 3)).cols(), 3u);
  EXPECT_EQ(image_basis(Matrix::zero(Q, 3, 3)).cols(), 0u);
  EXPECT_EQ(image_basis(rows_q({{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}})).cols(), 1u);
}

TEST(Membership, SpecExamples) {
  Matrix s = rows_q({{1, 0}, {1, 1}, {0, 2}});
  auto c = membership(Vector(3), s);
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_zero(*c));
  c = membership(s.dense_column(0), s);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (Vector{Q.one(), Q.zero()}));
  EXPECT_FALSE(membership(Vector{Q.one()}, Matrix::zero(Q, 1, 0)));
  EXPECT_THROW(membership(Vector(2), s), Error);
}

TEST(Quotient, SpecExamples) {
  Matrix z = Matrix::identity(Q, 2);
  EXPECT_EQ(quotient_data(z, z).dim, 0u);
  auto qd = quotient_data(z, Matrix::zero(Q, 2, 0));
  EXPECT_EQ(qd.dim, 2u);
  EXPECT_EQ(qd.reps, image_basis(z));
  Matrix b = rows_q({{1}, {1}});
  qd = quotient_data(z, b);
  EXPECT_EQ(qd.dim, 1u);
  EXPECT_TRUE(qd.quotient->is_trivial(Vector{Q.from_int(5), Q.from_int(5)}));
  EXPECT_FALSE(qd.quotient->is_trivial(Vector{Q.from_int(5), Q.from_int(4)}));
  try {
    quotient_data(rows_q({{1}, {0}}), rows_q({{0}, {1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubspace);
  }
}

class RandomMatrices : public ::testing::TestWithParam<uint64_t> {};

TEST_P(RandomMatrices, RankAndRrefAgreeWithDenseOracle) {
  std::mt19937_64 rng(GetParam());
  for (const Field& f : {Q, F2, F7}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
      int density = 10 + static_cast<int>(rng() % 60);
      Matrix m = random_matrix(f, rows, cols, density, rng);
      auto r = rref(m);
      auto expect = oracle::dense_rref(to_dense_matrix(m), dense_field(f));
      ASSERT_EQ(r.rank, expect.size());
      for (size_t i = 0; i < r.rank; ++i) {
        for (size_t c = 0; c < cols; ++c) ASSERT_EQ(r.reduced.at(i, c).to_mpq(), expect[i][c]);
      }
      for (size_t i = r.rank; i < rows; ++i) {
        for (size_t c = 0; c < cols; ++c) ASSERT_TRUE(r.reduced.at(i, c).is_zero());
      }
    }
  }
}

TEST_P(RandomMatrices, Invariants) {
  std::mt19937_64 rng(GetParam() * 7919);
  for (const Field& f : {Q, F2, F7}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      Matrix m = random_matrix(f, rows, cols, 5 + static_cast<int>(rng() % 50), rng);
      size_t rk = rank(m);
      EXPECT_EQ(rk, rank(m.transpose()));
      Matrix k = kernel_basis(m);
      EXPECT_EQ(rk + k.cols(), cols);
      EXPECT_TRUE(m.multiply(k).is_zero());
      EXPECT_EQ(rank(k), k.cols());
      auto r = rref(m);
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      EXPECT_EQ(image_basis(m).cols(), rk);
      Vector c(cols);
      for (auto& x : c) x = f.from_int(static_cast<int64_t>(rng() % 5) - 2);
      Vector v = m.apply(c);
      auto sol = membership(v, m);
      ASSERT_TRUE(sol);
      EXPECT_EQ(m.apply(*sol), v);
      // quotient of ker-free span by a random subspace of it
      Matrix sub = m.multiply(random_matrix(f, cols, 3, 40, rng));
      auto qd = quotient_data(m, sub);
      EXPECT_EQ(qd.dim, rk - rank(sub));
      for (size_t j = 0; j < sub.cols(); ++j) EXPECT_TRUE(qd.quotient->is_trivial(sub.dense_column(j)));
      for (size_t j = 0; j < qd.reps.cols(); ++j) {
        Vector e = qd.quotient->reduce(qd.reps.dense_column(j));
        for (size_t t = 0; t < e.size(); ++t) EXPECT_EQ(e[t], t == j ? f.one() : f.zero());
      }
    }
  }
}

TEST_P(RandomMatrices, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(GetParam() + 99);
  // Block-diagonal input so that several blocks are eliminated concurrently.
  std::vector<Triplet> t;
  for (uint32_t b = 0; b < 8; ++b) {
    Matrix blk = random_matrix(Q, 6, 6, 50, rng);
    for (size_t c = 0; c < 6; ++c) {
      for (const auto& e : blk.column(c)) t.push_back({b * 6 + e.index, static_cast<uint32_t>(b * 6 + c), e.value});
    }
  }
  Matrix m = Matrix::from_triplets(Q, 48, 48, t);
  set_thread_count(1);
  auto r1 = rref(m);
  Matrix k1 = kernel_basis(m);
  set_thread_count(4);
  auto r4 = rref(m);
  Matrix k4 = kernel_basis(m);
  set_thread_count(0);
  EXPECT_EQ(r1.reduced, r4.reduced);
  EXPECT_EQ(r1.pivots, r4.pivots);
  EXPECT_EQ(k1, k4);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Values(1u, 2u, 3u, 20261016u));
