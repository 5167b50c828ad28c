#pragma once

// JSON forms of JOFs and systems.
//
// Systems: {"N": int, "components": [[int, ...], ...], "doubled": bool}
// with an optional "kind" of "sum", "centred" or "sum-and-distance".
// Centred and sum-and-distance systems always store doubled values; the
// latter add "even_parts" and "odd_parts" (1-based part indices).

#include <variant>

#include <json.hpp>

#include "sumsys/integer.hpp"
#include "sumsys/jof.hpp"
#include "sumsys/systems.hpp"

namespace sumsys {

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
nlohmann::json integer_to_json(const Integer& v);

nlohmann::json jof_to_json(const Jof& jof);

/// Accepts [[part, factor], ...] or the "j:f,..." text form.
Jof jof_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const SumSystem& s);
nlohmann::json to_json(const CentredSumSystem& c);
nlohmann::json to_json(const SumAndDistanceSystem& b);

using AnySystem = std::variant<SumSystem, CentredSumSystem, SumAndDistanceSystem>;

/// Throws DomainError on schema violations.
AnySystem system_from_json(const nlohmann::json& doc);

/// Dispatches to the matching verifier; sum-and-distance systems are
/// expanded to their centred form first.
Verdict verify(const AnySystem& system);

}  // namespace sumsys
