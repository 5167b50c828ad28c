#include "sumsys/io.hpp"

#include <string>

namespace sumsys {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

json jof_to_json(const Jof& jof) {
  json out = json::array();
  for (const auto& e : jof.entries()) out.push_back({e.part, e.factor});
  return out;
}

Jof jof_from_json(const json& doc) {
  if (doc.is_string()) return parse_jof(doc.get<std::string>());
  if (!doc.is_array()) throw DomainError("JOF must be an array of [part, factor] pairs");
  std::vector<JofEntry> entries;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw DomainError("JOF entry must be a [part, factor] pair of integers");
    }
    entries.push_back({pair[0].get<int>(), pair[1].get<std::int64_t>()});
  }
  return Jof(std::move(entries));
}

namespace {

json components_json(std::span<const Component> components) {
  json out = json::array();
  for (const auto& comp : components) out.push_back(comp);
  return out;
}

std::vector<Component> components_from(const json& doc) {
  if (!doc.contains("components") || !doc["components"].is_array()) {
    throw DomainError("system JSON needs a \"components\" array");
  }
  std::vector<Component> out;
  for (const auto& comp : doc["components"]) {
    if (!comp.is_array()) throw DomainError("each component must be an array of integers");
    Component values;
    for (const auto& v : comp) {
      if (!v.is_number_integer()) throw DomainError("component elements must be integers");
      values.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(values));
  }
  return out;
}

std::vector<int> parts_from(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  if (!doc[key].is_array()) throw DomainError(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number_integer()) throw DomainError(std::string("\"") + key + "\" holds integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const SumSystem& s) {
  return {{"N", s.target()},
          {"components", components_json(s.components())},
          {"doubled", false},
          {"kind", "sum"}};
}

json to_json(const CentredSumSystem& c) {
  return {{"N", c.target()},
          {"components", components_json(c.doubled_components())},
          {"doubled", true},
          {"kind", "centred"}};
}

json to_json(const SumAndDistanceSystem& b) {
  return {{"N", b.target},
          {"components", components_json(b.doubled_components)},
          {"doubled", true},
          {"kind", "sum-and-distance"},
          {"even_parts", b.even_parts},
          {"odd_parts", b.odd_parts}};
}

AnySystem system_from_json(const json& doc) {
  if (!doc.is_object()) throw DomainError("system JSON must be an object");
  if (!doc.contains("N") || !doc["N"].is_number_integer()) {
    throw DomainError("system JSON needs an integer \"N\"");
  }
  const auto target = doc["N"].get<std::int64_t>();
  const bool doubled = doc.value("doubled", false);
  std::string kind = doc.value("kind", doubled ? "centred" : "sum");
  if (kind == "sum") {
    if (doubled) throw DomainError("sum systems are stored undoubled");
    return SumSystem(components_from(doc), target);
  }
  if (!doubled) throw DomainError(kind + " systems must be stored doubled");
  if (kind == "centred") return CentredSumSystem(components_from(doc), target);
  if (kind == "sum-and-distance") {
    return SumAndDistanceSystem{components_from(doc), target, parts_from(doc, "even_parts"),
                                parts_from(doc, "odd_parts")};
  }
  throw DomainError("unknown system kind \"" + kind + "\"");
}

Verdict verify(const AnySystem& system) {
  struct Visitor {
    Verdict operator()(const SumSystem& s) const { return verify_sum_system(s); }
    Verdict operator()(const CentredSumSystem& c) const { return verify_centred(c); }
    Verdict operator()(const SumAndDistanceSystem& b) const {
      return verify_centred(from_sum_and_distance(b));
    }
  };
  return std::visit(Visitor{}, system);
}

}  // namespace sumsys
