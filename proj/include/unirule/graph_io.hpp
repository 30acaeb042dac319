#pragma once

// JSON forms of graphs and contexts.
//
//   graph:     {"genus": 0, "class": "A", "x_tails": [{"deg": 2, "label": "h"}],
//               "d_tails": [[1, {"deg": 4, "label": "pt"}]]}
//   GraphList: array of graphs, or the string "empty"; a bare graph object
//              is read as a one-component list
//   context:   {"n": 3, "c_min": "1", "V": "2" | "inf",
//               "classes": {"A": {"area": "1", "c1": 2, "d_dot": 1, "in_iota_image": true}},
//               "theta": [{"deg": 4, "label": "pt"}], "xi": [...], "point_label": "pt"}

#include <json.hpp>

#include "unirule/graph.hpp"

namespace unirule {

nlohmann::json to_json(const CohWeight& w);
nlohmann::json to_json(const ColoredGraph& g);
nlohmann::json to_json(const GraphList& g);
nlohmann::json to_json(const GraphContext& ctx);

CohWeight weight_from_json(const nlohmann::json& j);
ColoredGraph graph_from_json(const nlohmann::json& j);
GraphList graph_list_from_json(const nlohmann::json& j);
/// Parses and validates.
GraphContext context_from_json(const nlohmann::json& j);

}  // namespace unirule
