#pragma once

// File formats for posets, triangular maps and invariant vectors.
//
//   poset:  {"poset": [graph-list, ...], "genus_zero_mode": false}
//   map:    {"poset": [...], "entries": [[row, col, "p/q"], ...],
//            "context": {...}, "genus_zero_mode": false}
//   vector: [["index-or-graph-key", "p/q"], ...]; missing entries are zero.
//
// Map indices refer to the poset array as written, which must already be a
// linear extension.

#include <json.hpp>
#include <memory>
#include <optional>

#include "unirule/correspondence.hpp"

namespace unirule {

nlohmann::json to_json(const GraphPoset& poset);
nlohmann::json to_json(const TriangularMap& map);
nlohmann::json to_json(const InvariantVector& v);

/// `ctx` overrides any context embedded in the file; one of the two is required.
TriangularMap map_from_json(const nlohmann::json& j, const std::optional<GraphContext>& ctx = std::nullopt);
InvariantVector vector_from_json(const nlohmann::json& j, std::shared_ptr<const GraphPoset> poset);

}  // namespace unirule
