#pragma once

#include <json.hpp>

#include "pieri/branching.hpp"
#include "pieri/decomposition.hpp"
#include "pieri/kostant.hpp"
#include "pieri/weightdiagram.hpp"

namespace pieri {

// Weights are serialized in true coordinates; half-integral entries become
// exact x.5 doubles. Multiplicities are numbers while they fit in 64 bits
// and decimal strings beyond.

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeightDiagram& d);
WeightDiagram weight_diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KostantBoundReport& r);
nlohmann::json to_json(const HomEqualityReport& r);
nlohmann::json to_json(const ShiftInvarianceReport& r);
nlohmann::json to_json(const BranchReport& r);
nlohmann::json to_json(const CauchyReport& r);

} // namespace pieri
