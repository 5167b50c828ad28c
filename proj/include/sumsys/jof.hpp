#pragma once

// Joint ordered factorisations (JOFs).
//
// A JOF of a target tuple (n_1, ..., n_m), every n_j >= 2, is a sequence of
// (part, factor) pairs with factor >= 2, no two neighbours on the same part,
// and the factors of each part j multiplying to n_j. JOFs of a tuple are in
// bijection with the sum systems whose component sizes are that tuple.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumsys/errors.hpp"
#include "sumsys/integer.hpp"

namespace sumsys {

/// Ordered cardinality tuple (n_1, ..., n_m) with every entry >= 2.
class TargetTuple {
 public:
  /// Throws DomainError when empty or when an entry is < 2; OverflowError if
  /// the product leaves the 64-bit range.
  explicit TargetTuple(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t operator[](std::size_t j) const { return parts_[j]; }

  /// N, the product of the parts.
  std::int64_t product() const { return product_; }

  friend bool operator==(const TargetTuple&, const TargetTuple&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t product_ = 1;
};

struct JofEntry {
  int part = 0;  // 1-based
  std::int64_t factor = 0;

  friend auto operator<=>(const JofEntry&, const JofEntry&) = default;
};

/// A sequence of (part, factor) entries. Construction does not validate; use
/// validate() or implied_tuple().
class Jof {
 public:
  Jof() = default;
  explicit Jof(std::vector<JofEntry> entries) : entries_(std::move(entries)) {}

  std::span<const JofEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const JofEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Largest part index used (m).
  int part_count() const;

  friend auto operator<=>(const Jof&, const Jof&) = default;

 private:
  std::vector<JofEntry> entries_;
};

/// Checks adjacency, factor >= 2, part range and per-part products against n.
Verdict validate(const Jof& jof, const TargetTuple& n);

/// The tuple whose JOF this is, from per-part factor products. Throws
/// DomainError if the sequence is not a JOF of any tuple.
TargetTuple implied_tuple(const Jof& jof);

/// F(1..L+1): F(1) = 1, F(l+1) = F(l) f_l; the last entry is N.
std::vector<std::int64_t> partial_products(const Jof& jof);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Calls visit for every JOF of n in lexicographic order of (part, factor)
/// entries. Returning false from visit stops the walk. Returns the number of
/// JOFs visited.
std::size_t for_each_jof(const TargetTuple& n, const std::function<bool(const Jof&)>& visit);

/// All JOFs of n in lexicographic order. Throws ResourceError once more than
/// cap JOFs would be produced.
std::vector<Jof> enumerate_jofs(const TargetTuple& n, std::size_t cap = kDefaultEnumerationCap);

/// N_m(n) = sum over l in N^m (1 <= l_j <= Omega(n_j)) of
///          multinomial(|l|; l) * prod_j (e - mu)^{*l_j}(n_j).
Integer count_for_tuple(const TargetTuple& n);

/// Text form "j:f,j:f,...".
Jof parse_jof(std::string_view text);
std::string to_string(const Jof& jof);

/// "n1,n2,..." -> TargetTuple.
TargetTuple parse_tuple(std::string_view text);

}  // namespace sumsys
