#pragma once

#include <nlohmann/json.hpp>

#include "pke/catalog.hpp"
#include "pke/geometry.hpp"
#include "pke/ma_engine.hpp"
#include "pke/multipoly.hpp"
#include "pke/rational.hpp"

namespace pke {

using Json = nlohmann::json;

// Polynomial wire format:
//   {"nvars": n, "terms": [{"exp": [i1, ..., in], "num": "<int>", "den": "<int>"}, ...]}
// Terms are written in descending graded-lexicographic order. On input,
// "num"/"den" may be strings or JSON integers, "den" defaults to 1 and
// repeated monomials are summed. Malformed input throws std::invalid_argument.

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// Potential wire format:
//   {"kind": "poly"|"log", "P": <polynomial>, "k_num": "<int>", "k_den": "<int>"}
// k_num/k_den are required for "log" and omitted for "poly".
Json potential_to_json(const ToricPotential& potential);
ToricPotential potential_from_json(const Json& j);

/// "p/q" (or "p" for integers).
Json rational_to_json(const Rational& r);

Json ma_result_to_json(const MAResult& result);
Json axis_profile_to_json(const AxisProfile& profile);
Json continuation_to_json(const Continuation& continuation);
Json flat_classification_to_json(const FlatClassification& flat);

Json record_to_json(const SolutionRecord& record);
SolutionRecord record_from_json(const Json& j);

}  // namespace pke
