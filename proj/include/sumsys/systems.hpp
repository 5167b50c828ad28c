#pragma once

// Sum systems, centred sum systems and sum-and-distance systems.
//
// Half-integers never appear as floating point: every centred value c is
// stored as the integer 2c ("doubled"), and a component is half-integral
// exactly when its stored values are odd.

#include <cstdint>
#include <span>
#include <vector>

#include "sumsys/errors.hpp"
#include "sumsys/integer.hpp"
#include "sumsys/jof.hpp"

namespace sumsys {

using Component = std::vector<std::int64_t>;

/// m sorted sets A_j of non-negative integers targeting {0, ..., N-1}.
class SumSystem {
 public:
  /// Sorts each component; throws DomainError on duplicates, an empty
  /// component or N < 1. The target identity itself is checked by
  /// verify_sum_system().
  SumSystem(std::vector<Component> components, std::int64_t target);

  std::span<const Component> components() const { return components_; }
  const Component& operator[](std::size_t j) const { return components_[j]; }
  std::size_t size() const { return components_.size(); }
  std::int64_t target() const { return target_; }

  friend bool operator==(const SumSystem&, const SumSystem&) = default;

 private:
  std::vector<Component> components_;
  std::int64_t target_;
};

/// m origin-symmetric sets C_j, stored doubled.
class CentredSumSystem {
 public:
  /// Sorts each component; throws DomainError on duplicates, an empty
  /// component, mixed parity inside one component or N < 1.
  CentredSumSystem(std::vector<Component> doubled_components, std::int64_t target);

  std::span<const Component> doubled_components() const { return components_; }
  const Component& operator[](std::size_t j) const { return components_[j]; }
  std::size_t size() const { return components_.size(); }
  std::int64_t target() const { return target_; }

  /// True iff component j holds half-odd-integers (odd stored values).
  bool half_integer(std::size_t j) const;

  friend bool operator==(const CentredSumSystem&, const CentredSumSystem&) = default;

 private:
  std::vector<Component> components_;
  std::int64_t target_;
};

/// Positive halves B_j of a centred system, doubled, with the parity split
/// of the component sizes. Part indices are 1-based.
struct SumAndDistanceSystem {
  std::vector<Component> doubled_components;
  std::int64_t target = 1;
  std::vector<int> even_parts;  // J_e: |C_j| even, C_j = B_j u -B_j
  std::vector<int> odd_parts;   // J_o: |C_j| odd,  C_j = B_j u {0} u -B_j

  friend bool operator==(const SumAndDistanceSystem&, const SumAndDistanceSystem&) = default;
};

/// A_j = sum over l in L_j of F(l) <f_l>. Throws DomainError if jof is not a
/// JOF of any tuple.
SumSystem build_sum_system(const Jof& jof);

/// Doubled C_j = sum over l in L_j of F(l) (2<f_l> - (f_l - 1)).
CentredSumSystem build_centred(const Jof& jof);

/// Stored values 2a - max A_j.
CentredSumSystem centre(const SumSystem& s);

SumAndDistanceSystem to_sum_and_distance(const CentredSumSystem& c);

/// Rebuilds C_j from B_j and the parity split. Throws DomainError if a part
/// index is missing or repeated.
CentredSumSystem from_sum_and_distance(const SumAndDistanceSystem& b);

struct MinkowskiSum {
  Component elements;  // sorted, duplicates collapsed
  bool unique = false; // |A + B| == |A| |B|
};

MinkowskiSum minkowski_sum(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Largest N for which verification materialises the full Minkowski sum.
inline constexpr std::int64_t kMaxVerifiedTarget = 100'000'000;

/// Full check: sizes multiply to N, components are non-negative and
/// palindromic, and the Minkowski sum is {0, ..., N-1} with unique
/// representation. Throws ResourceError above kMaxVerifiedTarget.
Verdict verify_sum_system(const SumSystem& s);

/// Components symmetric about 0, sizes multiply to N, and the doubled
/// Minkowski sum is {2k - (N-1) : 0 <= k < N} with unique representation.
Verdict verify_centred(const CentredSumSystem& c);

/// sigma_A = sum_j (N / n_j) sum_{a in A_j} a; equals N(N-1)/2 on any sum system.
Integer sigma_a(const SumSystem& s);

/// tau_C = sum_j (N / n_j) sum_{c in C_j} c^2; equals N(N^2-1)/12 on any
/// centred sum system.
Rational tau_c(const CentredSumSystem& c);

}  // namespace sumsys
