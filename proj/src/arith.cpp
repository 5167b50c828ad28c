#include "sumsys/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

namespace sumsys {

// ---------------------------------------------------------------------------
// Factorisation

PrimeFactorisation::PrimeFactorisation(std::int64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

int PrimeFactorisation::big_omega() const {
  int total = 0;
  for (const auto& pp : factors_) total += pp.exponent;
  return total;
}

bool PrimeFactorisation::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::int64_t> PrimeFactorisation::divisors() const {
  std::vector<std::int64_t> out{1};
  for (const auto& [prime, exponent] : factors_) {
    const std::size_t base = out.size();
    std::int64_t power = 1;
    for (int k = 1; k <= exponent; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

U64 mul_mod(U64 a, U64 b, U64 m) { return static_cast<U64>(static_cast<U128>(a) * b % m); }

U64 pow_mod(U64 base, U64 exp, U64 m) {
  U64 out = 1 % m;
  base %= m;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) out = mul_mod(out, base, m);
    base = mul_mod(base, base, m);
  }
  return out;
}

// Deterministic Miller-Rabin for all 64-bit n; these bases suffice below 3.3e24.
bool is_prime(U64 n) {
  if (n < 2) return false;
  for (const U64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  U64 d = n - 1;
  int s = 0;
  for (; d % 2 == 0; d /= 2) ++s;
  for (const U64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    U64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

// Pollard-Brent; returns a non-trivial factor of composite odd n.
U64 find_factor(U64 n) {
  for (U64 c = 1;; ++c) {
    auto step = [&](U64 x) { return (mul_mod(x, x, n) + c) % n; };
    U64 y = 2, x = 2, q = 1, g = 1, saved = 2;
    constexpr U64 kBatch = 128;
    for (U64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (U64 i = 0; i < r; ++i) y = step(y);
      for (U64 k = 0; k < r && g == 1; k += kBatch) {
        saved = y;
        for (U64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        saved = step(saved);
        g = std::gcd(x > saved ? x - saved : saved - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(U64 n, std::vector<U64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const U64 d = find_factor(n);
  split(d, primes);
  split(n / d, primes);
}

PrimeFactorisation compute_factorisation(std::int64_t n) {
  std::vector<U64> primes;
  auto rest = static_cast<U64>(n);
  for (U64 p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  split(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> factors;
  for (const U64 p : primes) {
    if (!factors.empty() && factors.back().prime == static_cast<std::int64_t>(p)) {
      ++factors.back().exponent;
    } else {
      factors.push_back({static_cast<std::int64_t>(p), 1});
    }
  }
  return {n, std::move(factors)};
}

class FactorisationCache {
 public:
  PrimeFactorisation get(std::int64_t n) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(n); it != table_.end()) return it->second;
    }
    PrimeFactorisation f = compute_factorisation(n);
    std::unique_lock lock(mu_);
    return table_.emplace(n, std::move(f)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<std::int64_t, PrimeFactorisation> table_;
};

FactorisationCache& factorisation_cache() {
  static FactorisationCache cache;
  return cache;
}

void require_positive(std::int64_t n) {
  if (n < 1) throw DomainError("argument must be a positive integer, got " + std::to_string(n));
}

}  // namespace

PrimeFactorisation factorise(std::int64_t n) {
  require_positive(n);
  return factorisation_cache().get(n);
}

std::vector<std::int64_t> divisors(std::int64_t n) { return factorise(n).divisors(); }

int big_omega(std::int64_t n) { return factorise(n).big_omega(); }

// ---------------------------------------------------------------------------
// ArithmeticFunction

struct ArithmeticFunction::State {
  Evaluator evaluate;
  mutable std::shared_mutex mu;
  std::unordered_map<std::int64_t, Integer> cache;
};

ArithmeticFunction::ArithmeticFunction(Evaluator evaluator) : state_(std::make_shared<State>()) {
  state_->evaluate = std::move(evaluator);
}

Integer ArithmeticFunction::operator()(std::int64_t n) const {
  require_positive(n);
  {
    std::shared_lock lock(state_->mu);
    if (auto it = state_->cache.find(n); it != state_->cache.end()) return it->second;
  }
  Integer value = state_->evaluate(n);
  std::unique_lock lock(state_->mu);
  state_->cache.emplace(n, value);
  return value;
}

std::size_t ArithmeticFunction::cache_size() const {
  std::shared_lock lock(state_->mu);
  return state_->cache.size();
}

int mobius(std::int64_t n) {
  const PrimeFactorisation f = factorise(n);
  if (!f.is_squarefree()) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

int modified_mobius(std::int64_t n) {
  if (n == 1) {
    require_positive(n);
    return 0;
  }
  return mobius(n);
}

ArithmeticFunction identity_function() {
  return ArithmeticFunction([](std::int64_t n) { return Integer(n == 1 ? 1 : 0); });
}

ArithmeticFunction constant_one_function() {
  return ArithmeticFunction([](std::int64_t) { return Integer(1); });
}

ArithmeticFunction mobius_function() {
  return ArithmeticFunction([](std::int64_t n) { return Integer(mobius(n)); });
}

ArithmeticFunction modified_mobius_function() {
  return ArithmeticFunction([](std::int64_t n) { return Integer(modified_mobius(n)); });
}

ArithmeticFunction operator-(const ArithmeticFunction& f, const ArithmeticFunction& g) {
  return ArithmeticFunction([f, g](std::int64_t n) { return f(n) - g(n); });
}

ArithmeticFunction convolve(const ArithmeticFunction& f, const ArithmeticFunction& g) {
  return ArithmeticFunction([f, g](std::int64_t n) {
    Integer total;
    for (const std::int64_t d : divisors(n)) total += f(d) * g(n / d);
    return total;
  });
}

ArithmeticFunction convolution_power(const ArithmeticFunction& f, int j) {
  if (j < 0) throw DomainError("convolution power must be non-negative");
  ArithmeticFunction result = identity_function();
  for (int i = 0; i < j; ++i) result = convolve(f, result);
  return result;
}

// ---------------------------------------------------------------------------
// Named divisor families

namespace {

enum class Family { kClassical, kNontrivial, kAssociated, kMobiusPower, kSquarefree };

using Key = std::tuple<Family, int, int>;

class Registry {
 public:
  template <typename Make>
  const ArithmeticFunction& get(const Key& key, Make&& make) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    // Built outside the lock: make() may recurse into the registry.
    ArithmeticFunction fresh = make();
    std::unique_lock lock(mu_);
    return table_.emplace(key, std::move(fresh)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, ArithmeticFunction> table_;  // node-based: references stay valid
};

Registry& registry() {
  static Registry r;
  return r;
}

void require_index(int j, const char* what) {
  if (j < 0) throw DomainError(std::string(what) + " index must be non-negative");
}

const ArithmeticFunction& mobius_power_function(int r) {
  return registry().get({Family::kMobiusPower, r, 0}, [r] {
    if (r == 0) return identity_function();
    static const ArithmeticFunction mu = mobius_function();
    return convolve(mu, mobius_power_function(r - 1));
  });
}

}  // namespace

const ArithmeticFunction& classical_divisor_function(int j) {
  require_index(j, "divisor function");
  // Multiplicative closed form: d_j(p^a) = C(a + j - 1, j - 1).
  return registry().get({Family::kClassical, j, 0}, [j] {
    return ArithmeticFunction([j](std::int64_t n) -> Integer {
      if (j == 0) return n == 1 ? 1 : 0;
      Integer out = 1;
      const PrimeFactorisation f = factorise(n);
      for (const auto& pp : f.factors()) out *= binomial(pp.exponent + j - 1, j - 1);
      return out;
    });
  });
}

const ArithmeticFunction& nontrivial_divisor_function(int j) {
  require_index(j, "divisor function");
  // c_0 = e; c_{j+1}(n) = sum over proper divisors m of n of c_j(m).
  return registry().get({Family::kNontrivial, j, 0}, [j] {
    if (j == 0) return identity_function();
    return ArithmeticFunction([previous = nontrivial_divisor_function(j - 1)](std::int64_t n) {
      Integer total;
      for (const std::int64_t m : divisors(n)) {
        if (m < n) total += previous(m);
      }
      return total;
    });
  });
}

const ArithmeticFunction& associated_divisor_function(int j, int r) {
  require_index(j, "divisor function");
  if (r == 0) return nontrivial_divisor_function(j);
  return registry().get({Family::kAssociated, j, r}, [j, r] {
    const ArithmeticFunction& upper =
        r > 0 ? classical_divisor_function(r) : mobius_power_function(-r);
    return convolve(nontrivial_divisor_function(j), upper);
  });
}

const ArithmeticFunction& squarefree_ordered_function(int length) {
  require_index(length, "square-free factor count");
  return registry().get({Family::kSquarefree, length, 0}, [length] {
    if (length == 0) return identity_function();
    static const ArithmeticFunction e_minus_mu = identity_function() - mobius_function();
    return convolve(e_minus_mu, squarefree_ordered_function(length - 1));
  });
}

Integer classical_divisor(int j, std::int64_t n) { return classical_divisor_function(j)(n); }

Integer nontrivial_divisor(int j, std::int64_t n) { return nontrivial_divisor_function(j)(n); }

Integer associated_divisor(int j, int r, std::int64_t n) {
  return associated_divisor_function(j, r)(n);
}

Integer squarefree_ordered_count(int length, std::int64_t n) {
  return squarefree_ordered_function(length)(n);
}

}  // namespace sumsys
