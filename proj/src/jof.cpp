#include "sumsys/jof.hpp"

#include <algorithm>
#include <charconv>

#include "sumsys/arith.hpp"

namespace sumsys {

TargetTuple::TargetTuple(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("target tuple needs at least one part");
  for (const std::int64_t n : parts_) {
    if (n < 2) throw DomainError("every tuple entry must be >= 2, got " + std::to_string(n));
    product_ = checked_mul(product_, n);
  }
}

int Jof::part_count() const {
  int m = 0;
  for (const auto& e : entries_) m = std::max(m, e.part);
  return m;
}

Verdict validate(const Jof& jof, const TargetTuple& n) {
  const auto m = static_cast<int>(n.size());
  if (jof.size() == 0) return Verdict::fail("empty factorisation");
  std::vector<std::int64_t> products(n.size(), 1);
  for (std::size_t i = 0; i < jof.size(); ++i) {
    const JofEntry& e = jof[i];
    const std::string where = "entry " + std::to_string(i + 1);
    if (e.part < 1 || e.part > m) {
      return Verdict::fail(where + ": part index " + std::to_string(e.part) + " outside 1.." +
                           std::to_string(m));
    }
    if (e.factor < 2) return Verdict::fail(where + ": factor " + std::to_string(e.factor) + " < 2");
    if (i > 0 && jof[i - 1].part == e.part) {
      return Verdict::fail(where + ": adjacent entries share part " + std::to_string(e.part));
    }
    std::int64_t& p = products[static_cast<std::size_t>(e.part - 1)];
    if (__builtin_mul_overflow(p, e.factor, &p) || p > n[static_cast<std::size_t>(e.part - 1)]) {
      return Verdict::fail("part " + std::to_string(e.part) + ": factor product exceeds " +
                           std::to_string(n[static_cast<std::size_t>(e.part - 1)]));
    }
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (products[j] != n[j]) {
      return Verdict::fail("part " + std::to_string(j + 1) + ": factor product " +
                           std::to_string(products[j]) + " != " + std::to_string(n[j]));
    }
  }
  return Verdict::pass();
}

TargetTuple implied_tuple(const Jof& jof) {
  const int m = jof.part_count();
  if (m < 1) throw DomainError("empty or malformed joint ordered factorisation");
  std::vector<std::int64_t> parts(static_cast<std::size_t>(m), 1);
  for (const auto& e : jof.entries()) {
    if (e.part < 1) throw DomainError("part indices are 1-based");
    if (e.factor < 2) throw DomainError("factors must be >= 2");
    auto& p = parts[static_cast<std::size_t>(e.part - 1)];
    p = checked_mul(p, e.factor);
  }
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] == 1) throw DomainError("part " + std::to_string(j + 1) + " has no factors");
  }
  TargetTuple n(std::move(parts));
  if (Verdict v = validate(jof, n); !v) throw DomainError(v.diagnostic);
  return n;
}

std::vector<std::int64_t> partial_products(const Jof& jof) {
  std::vector<std::int64_t> out;
  out.reserve(jof.size() + 1);
  out.push_back(1);
  for (const auto& e : jof.entries()) out.push_back(checked_mul(out.back(), e.factor));
  return out;
}

namespace {

class JofWalker {
 public:
  JofWalker(const TargetTuple& n, const std::function<bool(const Jof&)>& visit)
      : residue_(n.parts().begin(), n.parts().end()), visit_(visit) {
    open_ = residue_.size();
  }

  std::size_t run() {
    walk(0);
    return visited_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool walk(int last_part) {
    if (open_ == 0) {
      ++visited_;
      return visit_(Jof(path_));
    }
    for (std::size_t j = 0; j < residue_.size(); ++j) {
      const int part = static_cast<int>(j) + 1;
      if (part == last_part || residue_[j] == 1) continue;
      const std::int64_t residue = residue_[j];
      for (const std::int64_t f : divisors(residue)) {
        if (f < 2) continue;
        // The last open part must be finished in one step: it cannot follow itself.
        if (open_ == 1 && f != residue) continue;
        residue_[j] = residue / f;
        if (residue_[j] == 1) --open_;
        path_.push_back({part, f});
        const bool keep_going = walk(part);
        path_.pop_back();
        if (residue_[j] == 1) ++open_;
        residue_[j] = residue;
        if (!keep_going) return false;
      }
    }
    return true;
  }

  std::vector<std::int64_t> residue_;
  std::size_t open_ = 0;
  std::vector<JofEntry> path_;
  const std::function<bool(const Jof&)>& visit_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_jof(const TargetTuple& n, const std::function<bool(const Jof&)>& visit) {
  return JofWalker(n, visit).run();
}

std::vector<Jof> enumerate_jofs(const TargetTuple& n, std::size_t cap) {
  std::vector<Jof> out;
  for_each_jof(n, [&](const Jof& jof) {
    if (out.size() == cap) {
      throw ResourceError("joint ordered factorisation count exceeds cap of " +
                          std::to_string(cap));
    }
    out.push_back(jof);
    return true;
  });
  return out;
}

Integer count_for_tuple(const TargetTuple& n) {
  const std::size_t m = n.size();
  // signed[j][l - 1] = (e - mu)^{*l}(n_j)
  std::vector<std::vector<Integer>> signed_counts(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int omega = big_omega(n[j]);
    for (int l = 1; l <= omega; ++l) signed_counts[j].push_back(squarefree_ordered_count(l, n[j]));
  }

  Integer total;
  std::vector<int> lengths(m, 1);
  while (true) {
    Integer term = 1;
    int running = 0;
    for (std::size_t j = 0; j < m && term != 0; ++j) {
      running += lengths[j];
      term *= binomial(running, lengths[j]) *
              signed_counts[j][static_cast<std::size_t>(lengths[j] - 1)];
    }
    total += term;

    std::size_t j = 0;
    while (j < m && lengths[j] == static_cast<int>(signed_counts[j].size())) lengths[j++] = 1;
    if (j == m) break;
    ++lengths[j];
  }
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("cannot parse integer '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Jof parse_jof(std::string_view text) {
  std::vector<JofEntry> entries;
  for (const std::string_view item : split(text, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw DomainError("JOF entry '" + std::string(item) + "' is not of the form part:factor");
    }
    const std::int64_t part = parse_int(item.substr(0, colon), "JOF part index");
    if (part < 1 || part > INT32_MAX) throw DomainError("JOF part index out of range");
    entries.push_back({static_cast<int>(part), parse_int(item.substr(colon + 1), "JOF factor")});
  }
  return Jof(std::move(entries));
}

std::string to_string(const Jof& jof) {
  std::string out;
  for (const auto& e : jof.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.part) + ':' + std::to_string(e.factor);
  }
  return out;
}

TargetTuple parse_tuple(std::string_view text) {
  std::vector<std::int64_t> parts;
  for (const std::string_view item : split(text, ',')) parts.push_back(parse_int(item, "tuple"));
  return TargetTuple(std::move(parts));
}

}  // namespace sumsys
