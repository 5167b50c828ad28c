#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sumsys/errors.hpp"

namespace sumsys {

/// Signed 128-bit integer whose arithmetic throws OverflowError instead of
/// wrapping. All counting functions return this type.
class Integer {
 public:
  using Raw = __int128;

  constexpr Integer() = default;

  template <std::integral T>
  constexpr Integer(T v) : value_(static_cast<Raw>(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Integer from_raw(Raw v) {
    Integer out;
    out.value_ = v;
    return out;
  }

  /// Parses an optionally signed decimal literal.
  static Integer parse(std::string_view text);

  constexpr Raw raw() const { return value_; }

  bool fits_int64() const {
    return value_ >= INT64_MIN && value_ <= INT64_MAX;
  }
  std::int64_t to_int64() const;

  std::string to_string() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Integer operator-(const Integer& v);

  /// Truncating division; throws DomainError on a zero divisor.
  friend Integer operator/(const Integer& lhs, const Integer& rhs);
  friend Integer operator%(const Integer& lhs, const Integer& rhs);

  friend constexpr bool operator==(const Integer&, const Integer&) = default;
  friend constexpr std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  Raw value_ = 0;
};

Integer abs(const Integer& v);
Integer gcd(Integer a, Integer b);

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(Integer numerator, Integer denominator);  // NOLINT(google-explicit-constructor)
  Rational(Integer value) : num_(value) {}           // NOLINT(google-explicit-constructor)

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  /// "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// C(top, bottom); zero outside 0 <= bottom <= top.
Integer binomial(std::int64_t top, std::int64_t bottom);
Integer factorial(std::int64_t n);

/// Checked 64-bit helpers for element arithmetic inside sum systems.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace sumsys
