#pragma once

#include "schurweyl/engine.hpp"

#include <utility>

namespace schurweyl {

// Canonical single-amplitude query at a given size: weight spread as evenly
// as possible over the alphabet, lambda the sorted weight, t the unique
// tableau of that shape and weight, y the row-major standard tableau, and f
// the configuration that RSK-maps to (t, y) — so the query is guaranteed to
// carry a nonzero amplitude.
std::pair<SchurWeylLabel, Configuration> homogeneous_query(int node_count, int n);

}  // namespace schurweyl
