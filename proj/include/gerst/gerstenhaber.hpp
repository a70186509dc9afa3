#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gerst/hochschild.hpp"

namespace gerst {

// Cochain arithmetic. Operands must share a layout.
HochschildCochain add(const HochschildCochain& a, const HochschildCochain& b);
HochschildCochain sub(const HochschildCochain& a, const HochschildCochain& b);
HochschildCochain scale(const Field& f, const Scalar& c, const HochschildCochain& a);
bool is_zero(const HochschildCochain& a);

// (φ⌣ψ)_{a_0..a_{p+q}} = φ_{a_0..a_p}(f_1..f_p) ∘ ψ_{a_p..a_{p+q}}(f_{p+1}..f_{p+q})
HochschildCochain cup(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);
// (-1)^{pq} φ⌣ψ
HochschildCochain cup_alt(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);

// β's output fed into argument slot i of α (0-indexed), 0 <= i < p.
HochschildCochain circ_i(const HochschildComplex& hc, const HochschildCochain& alpha, const HochschildCochain& beta,
                         size_t i);
// Σ_{i<p} (-1)^{(q-1)i} α ∘_i β
HochschildCochain circle(const HochschildComplex& hc, const HochschildCochain& alpha, const HochschildCochain& beta);

// Σ_{i<p} (-1)^{i+(p-1-i)q} h_i(φ, ψ), with the insertions h_i computed by
// scattering entries of φ and ψ (independently of circ_i).
HochschildCochain homotopy_h(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);
// (-1)^{pq+q} φ∘ψ
HochschildCochain homotopy_h_via_circle(const HochschildComplex& hc, const HochschildCochain& phi,
                                        const HochschildCochain& psi);

// b(φ,ψ) = h(φ,ψ) + (-1)^{pq} h(ψ,φ)
HochschildCochain op_b(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);
// (-1)^{pq} b(φ,ψ)
HochschildCochain op_b_alt(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);
// [φ,ψ] = (-1)^p b(φ,ψ)
HochschildCochain bracket(const HochschildComplex& hc, const HochschildCochain& phi, const HochschildCochain& psi);
// -(-1)^{(p-1)(q-1)} φ∘ψ + ψ∘φ
HochschildCochain bracket_via_circle(const HochschildComplex& hc, const HochschildCochain& phi,
                                     const HochschildCochain& psi);
// [α,β]' = α∘β - (-1)^{(p-1)(q-1)} β∘α
HochschildCochain bracket_alt(const HochschildComplex& hc, const HochschildCochain& alpha,
                              const HochschildCochain& beta);

// Where two cochains that should agree first differ the most.
struct Defect {
  std::vector<uint32_t> tuple;
  size_t output = 0;
  std::vector<uint32_t> inputs;
  std::string value;
};
std::optional<Defect> first_defect(const HochschildCochain& lhs, const HochschildCochain& rhs);

struct VerifyFailure {
  std::vector<int> degrees;  // p, q (and r for triple identities)
  uint64_t seed = 0;
  std::string detail;
  std::optional<Defect> defect;
};

struct VerifyReport {
  std::string identity;
  size_t trials = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Sampling plan: cochain degrees 0..max_degree, trial t uses pair number
// t mod (#pairs) and its own seed splitmix64(seed + t).
struct SamplePlan {
  size_t trials = 100;
  uint64_t seed = 1;
  int max_degree = 2;
};

VerifyReport verify_homotopy_identity(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_sign_identity(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_bracket_formulas(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_conventions(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_antisymmetry(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_jacobi(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_leibniz(const HochschildComplex& hc, const SamplePlan& plan);
VerifyReport verify_cup_unit(const HochschildComplex& hc, const SamplePlan& plan);
// Random cocycles of degree < N.
VerifyReport verify_graded_commutativity(const HochschildComplex& hc, const SamplePlan& plan);
// Random cocycle triples whose defect lands in a degree <= N - 1.
VerifyReport verify_poisson(const HochschildComplex& hc, const SamplePlan& plan);

// A pair of cohomology representatives whose bracket is not a coboundary.
struct BracketWitness {
  int p = 0, q = 0;
  size_t i = 0, j = 0;  // columns of the representative matrices
  HochschildCochain phi, psi, value;
};
// Scans representative pairs with min_degree <= p, q <= max_degree (and p, q < N) by
// increasing p + q, then p, i, j. Pairs whose bracket degree exceeds N are
// skipped.
std::optional<BracketWitness> find_bracket_witness(const HochschildComplex& hc, int min_degree, int max_degree);

}  // namespace gerst
