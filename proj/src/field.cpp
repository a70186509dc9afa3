#include "gerst/field.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace gerst {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotASubspace: return "NotASubspace";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NoRootOfUnity: return "NoRootOfUnity";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Resource: return "Resource";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int64_t kMin64 = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax64 = std::numeric_limits<int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits64(i128 v) { return v > kMin64 && v <= kMax64; }

mpz_class to_mpz(i128 v) {
  bool negative = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

// Reduce num/den (den != 0) and pick small or big storage.
Scalar make_rational(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Scalar();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits64(num) && fits64(den)) {
    return Scalar::reduced(static_cast<int64_t>(num), static_cast<int64_t>(den));
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  return Scalar(q);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<u128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  *this = make_rational(num, den);
}

Scalar::Scalar(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p() &&
      c.get_num() != kMin64) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    big_ = new mpq_class(c);
  }
}

Scalar::Scalar(const Scalar& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = new mpq_class(*other.big_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
    }
  } else {
    delete big_;
    big_ = nullptr;
  }
  return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
  if (this == &other) return *this;
  delete big_;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_;
  other.big_ = nullptr;
  return *this;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Big values are always outside the small range, so mixed compares are false.
  if (a.big_ == nullptr || b.big_ == nullptr) return false;
  return *a.big_ == *b.big_;
}

namespace rat {

Scalar add(const Scalar& a, const Scalar& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den() == 1 && b.den() == 1) {
      int64_t r;
      if (!__builtin_add_overflow(a.num(), b.num(), &r) && r != kMin64) return Scalar(r);
    }
    i128 n = static_cast<i128>(a.num()) * b.den() + static_cast<i128>(b.num()) * a.den();
    i128 d = static_cast<i128>(a.den()) * b.den();
    return make_rational(n, d);
  }
  return Scalar(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar neg(const Scalar& a) {
  if (a.is_small()) {
    return Scalar::reduced(-a.num(), a.den());
  }
  return Scalar(mpq_class(-a.to_mpq()));
}

Scalar sub(const Scalar& a, const Scalar& b) { return add(a, neg(b)); }

Scalar mul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_small() && b.is_small()) {
    if (a.den() == 1 && b.den() == 1) {
      int64_t r;
      if (!__builtin_mul_overflow(a.num(), b.num(), &r) && r != kMin64) return Scalar(r);
    }
    i128 n = static_cast<i128>(a.num()) * b.num();
    i128 d = static_cast<i128>(a.den()) * b.den();
    return make_rational(n, d);
  }
  return Scalar(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::Parse, "division by zero");
  if (a.is_small() && b.is_small()) {
    i128 n = static_cast<i128>(a.num()) * b.den();
    i128 d = static_cast<i128>(a.den()) * b.num();
    return make_rational(n, d);
  }
  return Scalar(mpq_class(a.to_mpq() / b.to_mpq()));
}

}  // namespace rat

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(uint64_t p) {
  if (!gerst::is_prime(p) || p > static_cast<uint64_t>(kMax64)) {
    throw Error(ErrorCode::Usage, "modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

std::string Field::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

Scalar Field::from_int(int64_t v) const {
  if (kind_ == Kind::Rationals) return Scalar(v);
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return rat::add(a, b);
  uint64_t r = static_cast<uint64_t>(a.num()) + static_cast<uint64_t>(b.num());
  if (r >= p_) r -= p_;
  return Scalar(static_cast<int64_t>(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return rat::sub(a, b);
  uint64_t x = static_cast<uint64_t>(a.num());
  uint64_t y = static_cast<uint64_t>(b.num());
  return Scalar(static_cast<int64_t>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return rat::mul(a, b);
  return Scalar(static_cast<int64_t>(
      mulmod(static_cast<uint64_t>(a.num()), static_cast<uint64_t>(b.num()), p_)));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return rat::neg(a);
  if (a.num() == 0) return a;
  return Scalar(static_cast<int64_t>(p_ - static_cast<uint64_t>(a.num())));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error(ErrorCode::Parse, "inverse of zero");
  if (kind_ == Kind::Rationals) return rat::div(Scalar(1), a);
  return Scalar(static_cast<int64_t>(powmod(static_cast<uint64_t>(a.num()), p_ - 2, p_)));
}

void Field::add_mul(Scalar& acc, const Scalar& c, const Scalar& x) const {
  if (kind_ == Kind::Prime) {
    uint64_t r = (static_cast<u128>(c.num()) * static_cast<uint64_t>(x.num()) +
                  static_cast<uint64_t>(acc.num())) % p_;
    acc = Scalar(static_cast<int64_t>(r));
    return;
  }
  acc = rat::add(acc, rat::mul(c, x));
}

Scalar Field::pow(const Scalar& a, uint64_t e) const {
  Scalar r = one();
  Scalar b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool Field::contains(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return true;
  return a.is_small() && a.den() == 1 && a.num() >= 0 && static_cast<uint64_t>(a.num()) < p_;
}

Scalar Field::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty coefficient");
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = trim(text.substr(0, slash));
    den_part = trim(text.substr(slash + 1));
  }
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!valid_integer(num_part) || (!den_part.empty() && !valid_integer(den_part)) ||
      (text.find('/') != std::string_view::npos && den_part.empty())) {
    throw Error(ErrorCode::Parse, "malformed coefficient '" + std::string(text) + "'");
  }
  auto to_mpz_str = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  mpz_class num = to_mpz_str(num_part);
  mpz_class den = den_part.empty() ? mpz_class(1) : to_mpz_str(den_part);
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  if (kind_ == Kind::Rationals) return Scalar(mpq_class(num, den));
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) {
    throw Error(ErrorCode::Parse, "denominator divisible by p in '" + std::string(text) + "'");
  }
  Scalar sn(static_cast<int64_t>(n.get_ui()));
  Scalar sd(static_cast<int64_t>(d.get_ui()));
  return div(sn, sd);
}

FieldElement::FieldElement(Field field, Scalar value) : field_(field), value_(std::move(value)) {
  if (!field_.contains(value_)) {
    throw Error(ErrorCode::FieldMismatch, "value " + value_.str() + " is not canonical in " + field_.name());
  }
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch,
                "mixing " + a.field().name() + " and " + b.field().name());
  }
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add(a.value(), b.value()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub(a.value(), b.value()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.value(), b.value()));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.div(a.value(), b.value()));
}

}  // namespace gerst
