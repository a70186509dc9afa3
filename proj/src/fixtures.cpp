#include "gerst/fixtures.hpp"

namespace gerst {

namespace {

SparseVec e(size_t i) { return {{static_cast<uint32_t>(i), Scalar(1)}}; }

LinearCategory dual_numbers(Field f) { return from_algebra(2, {e(0), e(1), e(1), {}}, e(0), f, {"1", "x"}); }

BundledExample from_hopf(std::string name, std::string description, HopfAlgebra h) {
  BundledExample b{std::move(name), std::move(description), h.algebra(), std::move(h)};
  return b;
}

Quiver linear_quiver(size_t n) {
  Quiver q;
  for (size_t v = 0; v < n; ++v) q.vertices.push_back(std::to_string(v));
  for (size_t v = 0; v + 1 < n; ++v) q.arrows.push_back({"a" + std::to_string(v), v, v + 1});
  return q;
}

}  // namespace

const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names = {"k",     "dual_numbers_q", "dual_numbers_f2", "c2_f2",
                                                 "s3_f3", "s3_q",           "sweedler_q",      "taft3_f7",
                                                 "a2",    "a3_zero"};
  return names;
}

BundledExample bundled(const std::string& name) {
  const Field q = Field::rationals();
  if (name == "k") return from_hopf(name, "ground field Q as a one-object category", group_algebra({{0}}, q, {"1"}));
  if (name == "dual_numbers_q") return {name, "dual numbers Q[x]/(x^2)", dual_numbers(q), std::nullopt};
  if (name == "dual_numbers_f2") return {name, "dual numbers F2[x]/(x^2)", dual_numbers(Field::prime(2)), std::nullopt};
  if (name == "c2_f2") {
    return from_hopf(name, "group algebra of C2 over F2", group_algebra(cyclic_group_table(2), Field::prime(2), {"1", "g"}));
  }
  if (name == "s3_f3" || name == "s3_q") {
    std::vector<std::string> labels;
    auto table = symmetric_group_table(3, &labels);
    const bool f3 = name == "s3_f3";
    return from_hopf(name, f3 ? "group algebra of S3 over F3" : "group algebra of S3 over Q",
                     group_algebra(table, f3 ? Field::prime(3) : q, labels));
  }
  if (name == "sweedler_q") return from_hopf(name, "Sweedler's four-dimensional Hopf algebra over Q", sweedler(q));
  if (name == "taft3_f7") return from_hopf(name, "Taft algebra of dimension 9 over F7 (q = 2)", taft(3, Field::prime(7)));
  if (name == "a2") return {name, "path category of the quiver 0 -> 1", from_quiver(linear_quiver(2), {}, 2, q), std::nullopt};
  if (name == "a3_zero") {
    Relation r{{Scalar(1), {0, 1}}};
    return {name, "path category of 0 -> 1 -> 2 with the composite set to zero",
            from_quiver(linear_quiver(3), {r}, 2, q), std::nullopt};
  }
  throw Error(ErrorCode::Usage, "unknown bundled example '" + name + "'");
}

}  // namespace gerst
