#pragma once

// JSON term-tree format for the formula catalog.
//
//   formula := {"name", "n", "family", "arity", "text", "terms": [term...]}
//   term    := {"weight": "p/q", "word": node}
//   node    := {"op": "slot", "index": i}                  (1-based)
//            | {"op": "product", "factors": [node...]}
//            | {"op": "conjugation", "kind": "hat"|"tilde"|"bar"|"delta",
//               "j": j (delta only), "arg": node}

#include "cliffdet/formula.hpp"

#include <json.hpp>

namespace cliffdet {

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);  // throws std::invalid_argument

nlohmann::json formula_to_json(const DetFormula& f);
DetFormula formula_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(std::span<const DetFormula* const> formulas);

}  // namespace cliffdet
