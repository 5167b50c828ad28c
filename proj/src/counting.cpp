#include "sumsys/counting.hpp"

#include <string>

#include "sumsys/arith.hpp"

namespace sumsys {

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::kClosedForm:
      return "closed-form";
    case CountMethod::kBruteForce:
      return "brute-force";
    case CountMethod::kDivisorRecurrence:
      return "divisor-recurrence";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Stirling numbers

void StirlingTable::grow_to(int rows) {
  while (static_cast<int>(table_.size()) <= rows) {
    const int L = static_cast<int>(table_.size());
    std::vector<std::optional<Integer>> row(static_cast<std::size_t>(L) + 1);
    if (L == 0) {
      row[0] = Integer(1);
    } else {
      const auto& prev = table_.back();
      row[0] = Integer(0);
      for (int m = 1; m <= L; ++m) {
        const std::optional<Integer> stay = m < L ? prev[static_cast<std::size_t>(m)] : Integer(0);
        const std::optional<Integer>& join = prev[static_cast<std::size_t>(m - 1)];
        if (!stay || !join) continue;  // overflow propagates as an empty entry
        try {
          row[static_cast<std::size_t>(m)] = Integer(m) * *stay + *join;
        } catch (const OverflowError&) {
        }
      }
    }
    table_.push_back(std::move(row));
  }
}

Integer StirlingTable::at(int rows, int parts) {
  if (rows < 0 || parts < 0) throw DomainError("Stirling indices must be non-negative");
  if (parts > rows) return 0;
  std::lock_guard lock(mu_);
  grow_to(rows);
  const auto& entry = table_[static_cast<std::size_t>(rows)][static_cast<std::size_t>(parts)];
  if (!entry) {
    throw OverflowError("S(" + std::to_string(rows) + ", " + std::to_string(parts) +
                        ") exceeds 128-bit range");
  }
  return *entry;
}

int StirlingTable::rows() const {
  std::lock_guard lock(mu_);
  return static_cast<int>(table_.size());
}

namespace {

StirlingTable& shared_stirling() {
  static StirlingTable table;
  return table;
}

void require_target(std::int64_t target) {
  if (target < 1) throw DomainError("N must be a positive integer, got " + std::to_string(target));
}

void require_parts(int parts) {
  if (parts < 0) throw DomainError("m must be non-negative");
}

}  // namespace

Integer stirling2(int rows, int parts) { return shared_stirling().at(rows, parts); }

// ---------------------------------------------------------------------------
// Closed forms

CountResult count_m_part(std::int64_t target, int parts) {
  require_target(target);
  require_parts(parts);
  const int omega = big_omega(target);
  // (e - mu)^{*L}(N) vanishes for L > Omega(N), and S(L, m) for L < m.
  const Integer surjection_scale = factorial(parts);
  Integer total;
  for (int L = parts; L <= omega; ++L) {
    total += surjection_scale * stirling2(L, parts) * squarefree_ordered_count(L, target);
  }
  return {total, CountMethod::kClosedForm};
}

CountResult count_two_part(std::int64_t target) {
  require_target(target);
  const int omega = big_omega(target);
  Integer total;
  for (int L = 2; L <= omega; ++L) total += nontrivial_divisor(L, target);
  return {2 * total, CountMethod::kDivisorRecurrence};
}

CountResult count_unordered(std::int64_t target, int parts) {
  const CountResult ordered = count_m_part(target, parts);
  const Integer scale = factorial(parts);
  if (ordered.value % scale != 0) {
    throw ConsistencyError(std::to_string(parts) + "! does not divide N_m(" +
                           std::to_string(target) + ") = " + ordered.value.to_string());
  }
  return {ordered.value / scale, ordered.method};
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

// Calls visit for every ordered tuple of `parts` entries >= 2 with product `rest`.
template <typename Visit>
void for_each_tuple(std::int64_t rest, int parts, std::vector<std::int64_t>& prefix, Visit& visit) {
  if (parts == 1) {
    if (rest < 2) return;
    prefix.push_back(rest);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (const std::int64_t d : divisors(rest)) {
    if (d < 2 || rest / d < 2) continue;
    prefix.push_back(d);
    for_each_tuple(rest / d, parts - 1, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

CountResult brute_force_count(std::int64_t target, int parts, std::size_t cap) {
  require_target(target);
  if (parts < 1) throw DomainError("brute-force count needs m >= 1");
  std::size_t total = 0;
  auto visit = [&](const std::vector<std::int64_t>& tuple) {
    for_each_jof(TargetTuple(tuple), [&](const Jof&) {
      if (++total > cap) {
        throw ResourceError("brute-force count exceeds cap of " + std::to_string(cap) +
                            " joint ordered factorisations");
      }
      return true;
    });
  };
  std::vector<std::int64_t> prefix;
  for_each_tuple(target, parts, prefix, visit);
  return {Integer(total), CountMethod::kBruteForce};
}

// ---------------------------------------------------------------------------
// Divisor-sum relations

bool DivisorSumReport::all_zero() const {
  return residual_ordered_recurrence() == 0 && residual_ordered_mobius() == 0 &&
         residual_unordered_recurrence() == 0 && residual_unordered_mobius() == 0;
}

DivisorSumReport divisor_sum_check(std::int64_t target, int parts) {
  if (target < 2) throw DomainError("divisor-sum relations need N >= 2");
  if (parts < 1) throw DomainError("divisor-sum relations need m >= 1");
  DivisorSumReport r;
  r.target = target;
  r.parts = parts;
  r.ordered = count_m_part(target, parts).value;
  r.unordered = count_unordered(target, parts).value;
  const Integer m = parts;
  for (const std::int64_t d : divisors(target)) {
    if (d == target) continue;
    const Integer n_m = count_m_part(d, parts).value;
    const Integer n_prev = count_m_part(d, parts - 1).value;
    const Integer m_m = count_unordered(d, parts).value;
    const Integer m_prev = count_unordered(d, parts - 1).value;
    const Integer mu = mobius(target / d);
    r.ordered_recurrence += (m - 1) * n_m + m * n_prev;
    r.ordered_mobius -= m * mu * (n_m + n_prev);
    r.unordered_recurrence += (m - 1) * m_m + m_prev;
    r.unordered_mobius -= mu * (m * m_m + m_prev);
  }
  return r;
}

CountResult two_dim_fixed_tuple(std::int64_t n) {
  if (n < 2) throw DomainError("fixed-tuple count needs n >= 2");
  const int omega = big_omega(n);
  Integer total;
  for (int j = 1; j <= omega; ++j) {
    const Integer c = nontrivial_divisor(j, n);
    total += c * (c + nontrivial_divisor(j + 1, n));
  }
  return {total, CountMethod::kClosedForm};
}

// ---------------------------------------------------------------------------
// Binomial inversion

std::vector<Integer> binomial_inversion(std::span<const Integer> a) {
  std::vector<Integer> b(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const Integer term = binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)) * a[i];
      if ((j - i) % 2 == 0) {
        b[j] += term;
      } else {
        b[j] -= term;
      }
    }
  }
  return b;
}

std::vector<Integer> binomial_transform(std::span<const Integer> b) {
  std::vector<Integer> a(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      a[j] += binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)) * b[i];
    }
  }
  return a;
}

}  // namespace sumsys
