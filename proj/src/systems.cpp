#include "sumsys/systems.hpp"

#include <algorithm>
#include <string>

namespace sumsys {

namespace {

void canonicalise(std::vector<Component>& components, std::int64_t target) {
  if (target < 1) throw DomainError("target N must be positive");
  if (components.empty()) throw DomainError("a system needs at least one component");
  for (std::size_t j = 0; j < components.size(); ++j) {
    Component& comp = components[j];
    if (comp.empty()) throw DomainError("component " + std::to_string(j + 1) + " is empty");
    std::sort(comp.begin(), comp.end());
    if (std::adjacent_find(comp.begin(), comp.end()) != comp.end()) {
      throw DomainError("component " + std::to_string(j + 1) + " has duplicate elements");
    }
  }
}

std::string describe(const Component& values, std::size_t limit = 8) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == limit && values.size() > limit + 1) {
      out += ", ..., " + std::to_string(values.back());
      break;
    }
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

// Sizes must multiply to N; returns the failure text, empty on success.
std::string check_sizes(std::span<const Component> components, std::int64_t target) {
  std::int64_t product = 1;
  for (const auto& comp : components) {
    if (__builtin_mul_overflow(product, static_cast<std::int64_t>(comp.size()), &product)) {
      return "component sizes overflow";
    }
  }
  if (product != target) {
    return "component sizes multiply to " + std::to_string(product) + ", expected N = " +
           std::to_string(target);
  }
  if (target > kMaxVerifiedTarget) {
    throw ResourceError("verification of N = " + std::to_string(target) + " exceeds cap of " +
                        std::to_string(kMaxVerifiedTarget));
  }
  return {};
}

// Folds the Minkowski sum of all components; empty string on unique representation.
std::string fold_sum(std::span<const Component> components, Component& total) {
  total = {0};
  for (const auto& comp : components) {
    MinkowskiSum step = minkowski_sum(total, comp);
    total = std::move(step.elements);
    if (!step.unique) return "set sum " + describe(total) + " has repeated representations";
  }
  return {};
}

}  // namespace

SumSystem::SumSystem(std::vector<Component> components, std::int64_t target)
    : components_(std::move(components)), target_(target) {
  canonicalise(components_, target_);
}

CentredSumSystem::CentredSumSystem(std::vector<Component> doubled_components, std::int64_t target)
    : components_(std::move(doubled_components)), target_(target) {
  canonicalise(components_, target_);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const Component& comp = components_[j];
    const bool odd = comp.front() % 2 != 0;
    if (std::any_of(comp.begin(), comp.end(), [odd](std::int64_t v) { return (v % 2 != 0) != odd; })) {
      throw DomainError("component " + std::to_string(j + 1) +
                        " mixes integer and half-integer values");
    }
  }
}

bool CentredSumSystem::half_integer(std::size_t j) const {
  return components_.at(j).front() % 2 != 0;
}

SumSystem build_sum_system(const Jof& jof) {
  const TargetTuple n = implied_tuple(jof);
  const std::vector<std::int64_t> F = partial_products(jof);
  std::vector<Component> components(n.size(), Component{0});
  for (std::size_t l = 0; l < jof.size(); ++l) {
    const auto [part, factor] = jof[l];
    Component& comp = components[static_cast<std::size_t>(part - 1)];
    Component next;
    next.reserve(comp.size() * static_cast<std::size_t>(factor));
    for (std::int64_t k = 0; k < factor; ++k) {
      const std::int64_t shift = checked_mul(F[l], k);
      for (const std::int64_t a : comp) next.push_back(checked_add(a, shift));
    }
    comp = std::move(next);
  }
  return SumSystem(std::move(components), n.product());
}

CentredSumSystem build_centred(const Jof& jof) {
  const TargetTuple n = implied_tuple(jof);
  const std::vector<std::int64_t> F = partial_products(jof);
  std::vector<Component> components(n.size(), Component{0});
  for (std::size_t l = 0; l < jof.size(); ++l) {
    const auto [part, factor] = jof[l];
    Component& comp = components[static_cast<std::size_t>(part - 1)];
    Component next;
    next.reserve(comp.size() * static_cast<std::size_t>(factor));
    for (std::int64_t k = 0; k < factor; ++k) {
      const std::int64_t shift = checked_mul(F[l], 2 * k - (factor - 1));
      for (const std::int64_t c : comp) next.push_back(checked_add(c, shift));
    }
    comp = std::move(next);
  }
  return CentredSumSystem(std::move(components), n.product());
}

CentredSumSystem centre(const SumSystem& s) {
  std::vector<Component> doubled;
  doubled.reserve(s.size());
  for (const auto& comp : s.components()) {
    const std::int64_t top = comp.back();
    Component c;
    c.reserve(comp.size());
    for (const std::int64_t a : comp) c.push_back(checked_add(checked_mul(2, a), -top));
    doubled.push_back(std::move(c));
  }
  return CentredSumSystem(std::move(doubled), s.target());
}

SumAndDistanceSystem to_sum_and_distance(const CentredSumSystem& c) {
  SumAndDistanceSystem out;
  out.target = c.target();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Component& comp = c[j];
    Component positive;
    std::copy_if(comp.begin(), comp.end(), std::back_inserter(positive),
                 [](std::int64_t v) { return v > 0; });
    out.doubled_components.push_back(std::move(positive));
    (comp.size() % 2 == 0 ? out.even_parts : out.odd_parts).push_back(static_cast<int>(j) + 1);
  }
  return out;
}

CentredSumSystem from_sum_and_distance(const SumAndDistanceSystem& b) {
  const std::size_t m = b.doubled_components.size();
  std::vector<int> kind(m, -1);  // 0 even, 1 odd
  auto assign = [&](const std::vector<int>& parts, int value) {
    for (const int j : parts) {
      if (j < 1 || static_cast<std::size_t>(j) > m) {
        throw DomainError("parity class names part " + std::to_string(j) + " outside 1.." +
                          std::to_string(m));
      }
      if (kind[static_cast<std::size_t>(j - 1)] != -1) {
        throw DomainError("part " + std::to_string(j) + " appears in more than one parity class");
      }
      kind[static_cast<std::size_t>(j - 1)] = value;
    }
  };
  assign(b.even_parts, 0);
  assign(b.odd_parts, 1);
  std::vector<Component> components;
  for (std::size_t j = 0; j < m; ++j) {
    if (kind[j] == -1) throw DomainError("part " + std::to_string(j + 1) + " has no parity class");
    Component comp;
    for (const std::int64_t v : b.doubled_components[j]) {
      if (v <= 0) throw DomainError("sum-and-distance elements must be positive");
      comp.push_back(v);
      comp.push_back(-v);
    }
    if (kind[j] == 1) comp.push_back(0);
    components.push_back(std::move(comp));
  }
  return CentredSumSystem(std::move(components), b.target);
}

MinkowskiSum minkowski_sum(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  MinkowskiSum out;
  out.elements.reserve(a.size() * b.size());
  for (const std::int64_t x : a) {
    for (const std::int64_t y : b) out.elements.push_back(checked_add(x, y));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  out.unique = out.elements.size() == a.size() * b.size();
  return out;
}

Verdict verify_sum_system(const SumSystem& s) {
  if (std::string why = check_sizes(s.components(), s.target()); !why.empty()) {
    return Verdict::fail(why);
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Component& comp = s[j];
    const std::string name = "component " + std::to_string(j + 1);
    if (comp.front() < 0) return Verdict::fail(name + " has negative elements");
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i] + comp[comp.size() - 1 - i] != comp.back()) {
        return Verdict::fail(name + " " + describe(comp) + " is not palindromic");
      }
    }
  }
  Component total;
  if (std::string why = fold_sum(s.components(), total); !why.empty()) return Verdict::fail(why);
  for (std::size_t k = 0; k < total.size(); ++k) {
    if (total[k] != static_cast<std::int64_t>(k)) {
      return Verdict::fail("set sum " + describe(total) + " is not {0, ..., " +
                           std::to_string(s.target() - 1) + "}");
    }
  }
  return Verdict::pass();
}

Verdict verify_centred(const CentredSumSystem& c) {
  if (std::string why = check_sizes(c.doubled_components(), c.target()); !why.empty()) {
    return Verdict::fail(why);
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Component& comp = c[j];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i] != -comp[comp.size() - 1 - i]) {
        return Verdict::fail("component " + std::to_string(j + 1) + " is not symmetric about 0");
      }
    }
  }
  Component total;
  if (std::string why = fold_sum(c.doubled_components(), total); !why.empty()) {
    return Verdict::fail("doubled " + why);
  }
  const std::int64_t lowest = 1 - c.target();
  for (std::size_t k = 0; k < total.size(); ++k) {
    if (total[k] != lowest + 2 * static_cast<std::int64_t>(k)) {
      return Verdict::fail("doubled set sum " + describe(total) + " is not {2k - " +
                           std::to_string(c.target() - 1) + "}");
    }
  }
  return Verdict::pass();
}

namespace {

Integer weight(std::int64_t target, std::size_t size) {
  const auto n = static_cast<std::int64_t>(size);
  if (target % n != 0) {
    throw DomainError("component size " + std::to_string(n) + " does not divide N = " +
                      std::to_string(target));
  }
  return target / n;
}

}  // namespace

Integer sigma_a(const SumSystem& s) {
  Integer total;
  for (const auto& comp : s.components()) {
    Integer sum;
    for (const std::int64_t a : comp) sum += a;
    total += weight(s.target(), comp.size()) * sum;
  }
  return total;
}

Rational tau_c(const CentredSumSystem& c) {
  Integer total;
  for (const auto& comp : c.doubled_components()) {
    Integer squares;
    for (const std::int64_t v : comp) squares += Integer(v) * v;
    total += weight(c.target(), comp.size()) * squares;
  }
  return Rational(total, 4);
}

}  // namespace sumsys
