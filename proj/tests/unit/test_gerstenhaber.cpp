#include <gtest/gtest.h>

#include "gerst/fixtures.hpp"
#include "gerst/gerstenhaber.hpp"
#include "gerst/parallel.hpp"
#include "gerst/random.hpp"

using namespace gerst;

namespace {

size_t truncation(const LinearCategory& c) { return c.total_dim() <= 3 ? 5 : 4; }

SamplePlan plan_for(const HochschildComplex& hc, size_t trials) {
  SamplePlan p;
  p.trials = trials;
  p.seed = 7;
  p.max_degree = static_cast<int>(hc.max_degree()) - 2;
  return p;
}

// f(1) = 0, f(x) = x on k[x]/(x^2) with basis (1, x).
HochschildCochain derivation_f(const HochschildComplex& hc) {
  const Field& k = hc.field();
  Vector v(4, k.zero());
  v[1 * 2 + 1] = k.one();
  return hc.from_vector(1, v);
}

void expect_ok(const VerifyReport& r) {
  EXPECT_TRUE(r.ok()) << r.identity << ": " << r.failures.size() << " failures, first: "
                      << (r.failures.empty() ? "" : r.failures.front().detail);
}

}  // namespace

TEST(Cup, UnitIsTwoSided) {
  auto b = bundled("sweedler_q");
  HochschildComplex hc(b.category, 3);
  auto e = hc.identity();
  for (size_t n = 0; n < 3; ++n) {
    auto phi = hc.random(n, n + 11);
    EXPECT_EQ(cup(hc, e, phi), phi);
    EXPECT_EQ(cup(hc, phi, e), phi);
  }
}

TEST(Cup, DegreeZeroIsAlgebraProduct) {
  auto b = bundled("s3_q");
  HochschildComplex hc(b.category, 2);
  const auto& cat = hc.category();
  const Field& k = hc.field();
  auto a = hc.random(0, 3), c = hc.random(0, 4);
  EXPECT_EQ(cup(hc, a, c).values(), cat.compose_vectors(0, 0, 0, a.values(), c.values()));
  (void)k;
}

TEST(Cup, HandExpansionDualNumbersF2) {
  auto b = bundled("dual_numbers_f2");
  HochschildComplex hc(b.category, 3);
  const Field& k = hc.field();
  const auto& cat = hc.category();
  auto f = derivation_f(hc);
  ASSERT_TRUE(hc.complex().is_cocycle(1, f.values()));
  auto check = [&](const HochschildCochain& g) {
    auto gg = cup(hc, g, g);
    // (g⌣g)(e_a, e_b) = g(e_a) g(e_b), four entries per output coordinate
    for (size_t a = 0; a < 2; ++a) {
      for (size_t c = 0; c < 2; ++c) {
        Vector ga{g.values()[a], g.values()[2 + a]}, gc{g.values()[c], g.values()[2 + c]};
        Vector prod = cat.compose_vectors(0, 0, 0, ga, gc);
        for (size_t r = 0; r < 2; ++r) EXPECT_EQ(gg.values()[r * 4 + a * 2 + c], prod[r]);
      }
    }
  };
  check(f);
  EXPECT_TRUE(is_zero(cup(hc, f, f)));
  for (uint64_t s = 0; s < 5; ++s) check(hc.random(1, s));
  (void)k;
}

TEST(Cup, AltConvention) {
  for (const char* name : {"dual_numbers_q", "dual_numbers_f2"}) {
    auto b = bundled(name);
    HochschildComplex hc(b.category, 3);
    const Field& k = hc.field();
    auto a1 = hc.random(1, 1), b1 = hc.random(1, 2), a2 = hc.random(2, 3);
    EXPECT_EQ(cup_alt(hc, a2, b1), cup(hc, a2, b1));
    if (k.characteristic() == 2) {
      EXPECT_EQ(cup_alt(hc, a1, b1), cup(hc, a1, b1));
    } else {
      EXPECT_EQ(cup_alt(hc, a1, b1), scale(k, k.from_int(-1), cup(hc, a1, b1)));
    }
  }
}

// The 1-cochain f ↦ f.
HochschildCochain identity_map(const HochschildComplex& hc) {
  const Field& k = hc.field();
  auto l = hc.layout(1);
  Vector v(l->dim(), k.zero());
  for (const auto& c : l->components()) {
    for (size_t r = 0; r < c.out_dim; ++r) v[c.offset + r * c.in_size + r] = k.one();
  }
  return hc.from_vector(1, v);
}

TEST(Circ, IdentityInsertion) {
  for (const char* name : {"taft3_f7", "a3_zero"}) {
    auto b = bundled(name);
    HochschildComplex hc(b.category, 4);
    auto id = identity_map(hc);
    for (size_t p = 0; p < 3; ++p) {
      auto a = hc.random(p, p);
      EXPECT_EQ(circ_i(hc, id, a, 0), a);
      for (size_t i = 0; i < p; ++i) EXPECT_EQ(circ_i(hc, a, id, i), a);
    }
  }
}

TEST(Circ, DegreeZeroInsertion) {
  auto b = bundled("a3_zero");
  HochschildComplex hc(b.category, 3);
  const auto& cat = hc.category();
  const Field& k = hc.field();
  auto a = hc.random(1, 3);
  auto e = hc.identity();
  // α∘_0 e is the 0-cochain a ↦ α(id_a)
  auto r = circ_i(hc, a, e, 0);
  auto l1 = hc.layout(1);
  auto l0 = hc.layout(0);
  for (const auto& c0 : l0->components()) {
    const uint32_t x = c0.objects[0];
    const uint32_t tup[2] = {x, x};
    const auto& c1 = l1->components()[static_cast<size_t>(l1->find(tup))];
    Vector want(c0.out_dim, k.zero());
    for (const auto& t : cat.identity(x)) {
      for (size_t o = 0; o < c0.out_dim; ++o) k.add_mul(want[o], t.value, a.values()[c1.offset + o * c1.in_size + t.index]);
    }
    for (size_t o = 0; o < c0.out_dim; ++o) EXPECT_EQ(r.values()[c0.offset + o], want[o]);
  }
}

TEST(Circ, DegreeOneIsComposition) {
  auto b = bundled("sweedler_q");
  HochschildComplex hc(b.category, 2);
  const size_t d = hc.category().hom_dim(0, 0);
  auto a = hc.random(1, 5), c = hc.random(1, 6);
  std::vector<std::vector<Scalar>> ra(d), rc(d);
  for (size_t r = 0; r < d; ++r) {
    for (size_t j = 0; j < d; ++j) {
      ra[r].push_back(a.values()[r * d + j]);
      rc[r].push_back(c.values()[r * d + j]);
    }
  }
  Matrix prod = Matrix::from_rows(hc.field(), ra, d).multiply(Matrix::from_rows(hc.field(), rc, d));
  auto comp = circ_i(hc, a, c, 0);
  for (size_t r = 0; r < d; ++r) {
    for (size_t j = 0; j < d; ++j) EXPECT_EQ(comp.values()[r * d + j], prod.at(r, j));
  }
}

TEST(Circ, DualNumbersDerivationIsIdempotent) {
  auto b = bundled("dual_numbers_q");
  HochschildComplex hc(b.category, 3);
  auto f = derivation_f(hc);
  EXPECT_EQ(circ_i(hc, f, f, 0), f);
  EXPECT_TRUE(is_zero(bracket(hc, f, f)));
  EXPECT_TRUE(is_zero(bracket_via_circle(hc, f, f)));
}

TEST(Circ, SlotOutOfRange) {
  auto b = bundled("a2");
  HochschildComplex hc(b.category, 3);
  auto a = hc.random(2, 1), c = hc.random(1, 2);
  EXPECT_THROW(circ_i(hc, a, c, 2), Error);
  EXPECT_THROW(circ_i(hc, hc.random(0, 1), c, 0), Error);
}

TEST(Circle, SmallCases) {
  auto b = bundled("a3_zero");
  HochschildComplex hc(b.category, 3);
  const Field& k = hc.field();
  auto a0 = hc.random(0, 1), a1 = hc.random(1, 2), a2 = hc.random(2, 3), b1 = hc.random(1, 4);
  EXPECT_TRUE(is_zero(circle(hc, a0, a1)));
  EXPECT_EQ(circle(hc, a1, a2), circ_i(hc, a1, a2, 0));
  EXPECT_EQ(circle(hc, a2, b1), add(circ_i(hc, a2, b1, 0), circ_i(hc, a2, b1, 1)));
  EXPECT_TRUE(is_zero(bracket(hc, a0, hc.random(0, 9))));
  (void)k;
}

TEST(Homotopy, SmallCases) {
  auto b = bundled("sweedler_q");
  HochschildComplex hc(b.category, 3);
  auto a0 = hc.random(0, 1), a1 = hc.random(1, 2), b1 = hc.random(1, 3);
  EXPECT_TRUE(is_zero(homotopy_h(hc, a0, b1)));
  EXPECT_EQ(homotopy_h(hc, a1, b1), circ_i(hc, a1, b1, 0));
  EXPECT_EQ(homotopy_h_via_circle(hc, a1, b1), circ_i(hc, a1, b1, 0));
}

TEST(Bracket, AltConvention) {
  auto b = bundled("dual_numbers_f2");
  HochschildComplex hc(b.category, 4);
  auto a = hc.random(2, 1), c = hc.random(1, 2);
  EXPECT_EQ(bracket_alt(hc, a, c), bracket(hc, a, c));
  auto q = bundled("sweedler_q");
  HochschildComplex hq(q.category, 3);
  auto f = hq.random(1, 3), g = hq.random(1, 4);
  EXPECT_EQ(bracket_alt(hq, f, g), sub(circle(hq, f, g), circle(hq, g, f)));
  EXPECT_EQ(bracket(hq, f, g), sub(circle(hq, g, f), circle(hq, f, g)));
}

TEST(Bracket, CommutatorOfDerivations) {
  auto b = bundled("c2_f2");
  HochschildComplex hc(b.category, 3);
  auto f = hc.random_cocycle(1, 1), g = hc.random_cocycle(1, 2);
  auto br = bracket(hc, f, g);
  EXPECT_TRUE(hc.complex().is_cocycle(1, br.values()));
}

TEST(Defect, LocatesLargestEntry) {
  auto b = bundled("dual_numbers_q");
  HochschildComplex hc(b.category, 3);
  const Field& k = hc.field();
  Vector v(hc.layout(2)->dim(), k.zero());
  v[3] = k.from_int(1);
  v[5] = k.from_int(-4);
  auto d = first_defect(hc.from_vector(2, v), hc.zero(2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->output, 1u);
  EXPECT_EQ(d->inputs, (std::vector<uint32_t>{0, 1}));
  EXPECT_EQ(d->value, "-4");
  EXPECT_FALSE(first_defect(hc.zero(2), hc.zero(2)).has_value());
}

class Verifiers : public ::testing::TestWithParam<std::string> {};

TEST_P(Verifiers, AllIdentitiesHold) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, truncation(b.category));
  auto pl = plan_for(hc, 30);
  expect_ok(verify_homotopy_identity(hc, pl));
  expect_ok(verify_sign_identity(hc, pl));
  expect_ok(verify_bracket_formulas(hc, pl));
  expect_ok(verify_conventions(hc, pl));
  expect_ok(verify_antisymmetry(hc, pl));
  expect_ok(verify_leibniz(hc, pl));
  expect_ok(verify_cup_unit(hc, pl));
  expect_ok(verify_graded_commutativity(hc, pl));
  expect_ok(verify_poisson(hc, pl));
  SamplePlan jp = pl;
  jp.max_degree = 2;
  jp.trials = 12;
  expect_ok(verify_jacobi(hc, jp));
}

TEST_P(Verifiers, ReportsAreDeterministicAcrossThreadCounts) {
  auto b = bundled(GetParam());
  HochschildComplex hc(b.category, truncation(b.category));
  auto pl = plan_for(hc, 10);
  const size_t saved = thread_count();
  set_thread_count(1);
  auto r1 = verify_homotopy_identity(hc, pl);
  set_thread_count(4);
  auto r4 = verify_homotopy_identity(hc, pl);
  set_thread_count(saved);
  EXPECT_EQ(r1.failures.size(), r4.failures.size());
  EXPECT_EQ(r1.trials, r4.trials);
}

INSTANTIATE_TEST_SUITE_P(Bundled, Verifiers, ::testing::ValuesIn(bundled_names()));

// Flipping any single sign in the checked identities must break them.
TEST(Verifiers, WrongSignsAreDetected) {
  auto b = bundled("sweedler_q");
  HochschildComplex hc(b.category, 4);
  const Field& k = hc.field();
  auto phi = hc.random(1, 21), psi = hc.random(2, 22);
  auto lhs = add(add(homotopy_h(hc, hc.differential(phi), psi),
                     scale(k, k.from_int(1), homotopy_h(hc, phi, hc.differential(psi)))),
                 hc.differential(homotopy_h(hc, phi, psi)));
  auto rhs = sub(cup(hc, psi, phi), cup(hc, phi, psi));
  EXPECT_NE(lhs, rhs);
  auto a2 = hc.random(2, 23), b1 = hc.random(1, 24), b2 = hc.random(2, 25);
  EXPECT_NE(homotopy_h(hc, a2, b1), circle(hc, a2, b1));
  EXPECT_NE(bracket(hc, a2, b2), sub(circle(hc, b2, a2), circle(hc, a2, b2)));
  EXPECT_FALSE(is_zero(bracket(hc, phi, psi)));
}
