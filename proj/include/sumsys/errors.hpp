#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sumsys {

/// Argument outside the mathematical domain of an operation (n = 0, parts < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact result does not fit the 128-bit integer range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A configured cap (enumeration size, verification size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Result of a structural check. Failures carry the first violated condition.
struct Verdict {
  bool ok = true;
  std::string diagnostic;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace sumsys
