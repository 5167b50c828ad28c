#include "sumsys/integer.hpp"

#include <algorithm>
#include <ostream>

namespace sumsys {

namespace {

constexpr Integer::Raw kMax = static_cast<Integer::Raw>(
    (static_cast<unsigned __int128>(1) << 127) - 1);
constexpr Integer::Raw kMin = -kMax - 1;

}  // namespace

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw DomainError("integer literal has no digits");
  Integer value;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw DomainError("invalid integer literal: " + std::string(text));
    }
    value = value * 10 + (negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw OverflowError("value " + to_string() + " exceeds 64-bit range");
  return static_cast<std::int64_t>(value_);
}

std::string Integer::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  Raw v = value_;
  const bool negative = v < 0;
  while (v != 0) {
    const int digit = static_cast<int>(v % 10);
    out.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
    v /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (__builtin_add_overflow(value_, rhs.value_, &value_)) {
    throw OverflowError("128-bit overflow in addition");
  }
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (__builtin_sub_overflow(value_, rhs.value_, &value_)) {
    throw OverflowError("128-bit overflow in subtraction");
  }
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (__builtin_mul_overflow(value_, rhs.value_, &value_)) {
    throw OverflowError("128-bit overflow in multiplication");
  }
  return *this;
}

Integer operator-(const Integer& v) {
  if (v.value_ == kMin) throw OverflowError("128-bit overflow in negation");
  return Integer::from_raw(-v.value_);
}

Integer operator/(const Integer& lhs, const Integer& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  if (lhs.value_ == kMin && rhs.value_ == -1) throw OverflowError("128-bit overflow in division");
  return Integer::from_raw(lhs.value_ / rhs.value_);
}

Integer operator%(const Integer& lhs, const Integer& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  if (rhs.value_ == -1) return Integer{};
  return Integer::from_raw(lhs.value_ % rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& v) { return v < 0 ? -v : v; }

Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const Integer g = gcd(numerator, denominator);
  num_ = g == 0 ? numerator : numerator / g;
  den_ = g == 0 ? denominator : denominator / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Integer binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  Integer out = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (std::int64_t i = 0; i < bottom; ++i) out = out * (top - i) / (i + 1);
  return out;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer out = 1;
  for (std::int64_t k = 2; k <= n; ++k) out *= k;
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

}  // namespace sumsys
