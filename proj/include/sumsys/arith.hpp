#pragma once

// Dirichlet convolution algebra over exact integers.
//
// Notation used in comments: e is the convolution identity, 1 the constant
// function, mu the Moebius function. The divisor families are
//   d_j        = 1^{*j}                       (classical)
//   c_j        = (1-e)^{*j}                   (non-trivial)
//   c_j^{(r)}  = (1-e)^{*j} * 1^{*r}          (associated, r >= 0)
//   c_j^{(-r)} = (1-e)^{*j} * mu^{*r}         (associated, negative index)

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "sumsys/integer.hpp"

namespace sumsys {

/// Largest argument accepted by factorise() and the divisor functions.
inline constexpr std::int64_t kMaxArgument = INT64_MAX;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class PrimeFactorisation {
 public:
  PrimeFactorisation() = default;
  PrimeFactorisation(std::int64_t n, std::vector<PrimePower> factors);

  std::int64_t value() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }

  /// Omega(n): prime factors counted with multiplicity.
  int big_omega() const;
  bool is_squarefree() const;

  /// All positive divisors, ascending.
  std::vector<std::int64_t> divisors() const;

 private:
  std::int64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Trial division up to sqrt(n). Throws DomainError for n < 1.
/// Results are memoised process-wide.
PrimeFactorisation factorise(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);
int big_omega(std::int64_t n);

/// A memoised, pure map from positive integers to exact integers.
///
/// Copies share the evaluator and its cache. The cache is guarded by a
/// shared mutex so a function may be evaluated from several threads; the
/// lock is never held while the evaluator runs.
class ArithmeticFunction {
 public:
  using Evaluator = std::function<Integer(std::int64_t)>;

  explicit ArithmeticFunction(Evaluator evaluator);

  /// Throws DomainError for n < 1.
  Integer operator()(std::int64_t n) const;

  std::size_t cache_size() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

ArithmeticFunction identity_function();           // e(n) = [n == 1]
ArithmeticFunction constant_one_function();       // 1
ArithmeticFunction mobius_function();             // mu
ArithmeticFunction modified_mobius_function();    // mu - e

/// Pointwise difference f - g.
ArithmeticFunction operator-(const ArithmeticFunction& f, const ArithmeticFunction& g);

/// (f * g)(n) = sum over d | n of f(d) g(n/d); divisors come from the
/// prime factorisation of n.
ArithmeticFunction convolve(const ArithmeticFunction& f, const ArithmeticFunction& g);

/// f^{*j}; f^{*0} = e. Throws DomainError for j < 0.
ArithmeticFunction convolution_power(const ArithmeticFunction& f, int j);

int mobius(std::int64_t n);

/// (mu - e)(n): (-1)^Omega(n) for square-free n > 1, else 0 (including n = 1).
int modified_mobius(std::int64_t n);

/// d_j(n): ordered factorisations of n into j positive factors.
Integer classical_divisor(int j, std::int64_t n);

/// c_j(n): ordered factorisations of n into j factors, each > 1.
Integer nontrivial_divisor(int j, std::int64_t n);

/// c_j^{(r)}(n) for any signed r.
Integer associated_divisor(int j, int r, std::int64_t n);

/// (e - mu)^{*L}(n) = (-1)^L (mu - e)^{*L}(n), i.e. (-1)^{Omega(n)+L} times the
/// number of ordered factorisations of n into L non-trivial square-free factors.
Integer squarefree_ordered_count(int length, std::int64_t n);

/// Shared memoised instances behind the scalar functions above. Handles stay
/// valid for the lifetime of the process.
const ArithmeticFunction& classical_divisor_function(int j);
const ArithmeticFunction& nontrivial_divisor_function(int j);
const ArithmeticFunction& associated_divisor_function(int j, int r);
const ArithmeticFunction& squarefree_ordered_function(int length);

}  // namespace sumsys
