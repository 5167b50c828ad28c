#pragma once

// Counting m-part sum systems for a fixed target {0, ..., N-1}.
//
//   N_m(N) = sum_L m! S(L, m) (e - mu)^{*L}(N),  L = m .. Omega(N)
//   M_m(N) = N_m(N) / m!                         (parts unordered)
//
// N_0 is the identity e, which keeps the divisor recurrences well posed at m = 1.

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sumsys/integer.hpp"
#include "sumsys/jof.hpp"

namespace sumsys {

enum class CountMethod { kClosedForm, kBruteForce, kDivisorRecurrence };

std::string_view to_string(CountMethod method);

struct CountResult {
  Integer value;
  CountMethod method = CountMethod::kClosedForm;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Lazily grown table of Stirling numbers of the second kind,
/// S(L, m) = m S(L-1, m) + S(L-1, m-1). Entries that overflow 128 bits are
/// recorded and reported only when read. Safe for concurrent readers.
class StirlingTable {
 public:
  Integer at(int rows, int parts);

  /// Number of rows currently materialised.
  int rows() const;

 private:
  void grow_to(int rows);

  mutable std::mutex mu_;
  std::vector<std::vector<std::optional<Integer>>> table_;
};

Integer stirling2(int rows, int parts);

/// Closed form N_m(N). Throws DomainError for N < 1 or m < 0.
CountResult count_m_part(std::int64_t target, int parts);

/// 2 * sum_{L=2}^{Omega(N)} c_L(N).
CountResult count_two_part(std::int64_t target);

/// M_m(N) = N_m(N) / m!. Throws ConsistencyError if m! does not divide N_m(N).
CountResult count_unordered(std::int64_t target, int parts);

/// Sum over all ordered tuples (n_1..n_m), n_j >= 2, prod = N, of the number
/// of enumerated JOFs. Throws ResourceError past cap JOFs in total.
CountResult brute_force_count(std::int64_t target, int parts,
                              std::size_t cap = kDefaultEnumerationCap);

/// Both sides of the four divisor-sum relations at (N, m):
///   (i)   N_m(N) = sum_{d|N, d<N} ((m-1) N_m(d) + m N_{m-1}(d))
///   (ii)  N_m(N) = -m sum_{d|N, d<N} mu(N/d) (N_m(d) + N_{m-1}(d))
///   (iii) M_m(N) = sum_{d|N, d<N} ((m-1) M_m(d) + M_{m-1}(d))
///   (iv)  M_m(N) = -sum_{d|N, d<N} mu(N/d) (m M_m(d) + M_{m-1}(d))
struct DivisorSumReport {
  std::int64_t target = 0;
  int parts = 0;
  Integer ordered;    // N_m(N)
  Integer unordered;  // M_m(N)
  Integer ordered_recurrence;
  Integer ordered_mobius;
  Integer unordered_recurrence;
  Integer unordered_mobius;

  Integer residual_ordered_recurrence() const { return ordered - ordered_recurrence; }
  Integer residual_ordered_mobius() const { return ordered - ordered_mobius; }
  Integer residual_unordered_recurrence() const { return unordered - unordered_recurrence; }
  Integer residual_unordered_mobius() const { return unordered - unordered_mobius; }
  bool all_zero() const;
};

/// Requires N >= 2 and m >= 1.
DivisorSumReport divisor_sum_check(std::int64_t target, int parts);

/// M_{(n,n)} = sum_{j=1}^{Omega(n)} (c_j(n)^2 + c_j(n) c_{j+1}(n)): JOFs of the
/// fixed tuple (n, n) starting on part 1. Requires n >= 2.
CountResult two_dim_fixed_tuple(std::int64_t n);

/// b_j = sum_{i<=j} (-1)^{j-i} C(j, i) a_i.
std::vector<Integer> binomial_inversion(std::span<const Integer> a);

/// a_j = sum_{i<=j} C(j, i) b_i; inverse of binomial_inversion.
std::vector<Integer> binomial_transform(std::span<const Integer> b);

}  // namespace sumsys
