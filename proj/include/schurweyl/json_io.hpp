#pragma once

#include "schurweyl/engine.hpp"
#include "schurweyl/rsk.hpp"
#include "schurweyl/surd.hpp"
#include "schurweyl/young.hpp"

#include <json.hpp>

namespace schurweyl {

// Arbitrary-precision integers render as JSON numbers when they fit in 64
// bits and as decimal strings otherwise.
nlohmann::json json_int(const Int& value);

nlohmann::json to_json(const SurdSum& value);
nlohmann::json to_json(const GTPattern& p);          // rows from top (length n) down
nlohmann::json to_json(const DoubleGTPattern& d);    // rows as printed in the diamond
nlohmann::json to_json(const SchurWeylState& state);
nlohmann::json to_json(const CouplingGraph& graph);
nlohmann::json to_json(const UnitarityReport& report);

GTPattern gt_pattern_from_json(const nlohmann::json& rows_top_down);
DoubleGTPattern double_pattern_from_json(const nlohmann::json& j);

}  // namespace schurweyl
