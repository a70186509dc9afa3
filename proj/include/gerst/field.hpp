#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gerst/errors.hpp"

namespace gerst {

// Exact scalar. Holds a reduced fraction num/den with den > 0; values that do
// not fit in int64 are promoted to a GMP rational. Prime-field residues use the
// same storage with den == 1 and 0 <= num < p.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(int64_t value) : num_(value) {}
  Scalar(int64_t num, int64_t den);
  explicit Scalar(const mpq_class& q);
  // num/den must already be reduced with den > 0.
  static Scalar reduced(int64_t num, int64_t den) {
    Scalar s(num);
    s.den_ = den;
    return s;
  }

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept
      : num_(other.num_), den_(other.den_), big_(other.big_) {
    other.big_ = nullptr;
  }
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept;
  ~Scalar() { delete big_; }

  bool is_zero() const { return big_ == nullptr && num_ == 0; }
  bool is_one() const { return big_ == nullptr && num_ == 1 && den_ == 1; }
  bool is_small() const { return big_ == nullptr; }
  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  const mpq_class* big() const { return big_; }

  mpq_class to_mpq() const;
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  mpq_class* big_ = nullptr;
};

// Rational arithmetic on Scalars (field-agnostic).
namespace rat {
Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar div(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
}  // namespace rat

// The ground field: Q or F_p. Every arithmetic operation in the library goes
// through a Field so that residues stay canonical.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  // 0 for Q.
  uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(int64_t v) const;
  Scalar sign(int exponent) const { return from_int((exponent & 1) ? -1 : 1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // acc += c * x
  void add_mul(Scalar& acc, const Scalar& c, const Scalar& x) const;
  Scalar pow(const Scalar& a, uint64_t e) const;

  // True iff `a` is a canonical representative of an element of this field.
  bool contains(const Scalar& a) const;

  // Accepts "3", "-7/3"; for F_p a fraction is read as num * den^{-1}.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const { return a.str(); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Rationals;
  uint64_t p_ = 0;
};

bool is_prime(uint64_t n);

// A scalar tagged with its field; arithmetic between different fields throws
// FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Scalar value);
  const Field& field() const { return field_; }
  const Scalar& value() const { return value_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_;
  Scalar value_;
};

}  // namespace gerst
