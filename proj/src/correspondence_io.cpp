#include "unirule/correspondence_io.hpp"

#include <algorithm>
#include <cctype>

#include "unirule/error.hpp"
#include "unirule/graph_io.hpp"

namespace unirule {

using nlohmann::json;

json to_json(const GraphPoset& poset) {
  json elements = json::array();
  for (const auto& e : poset.elements()) elements.push_back(to_json(e));
  return json{{"poset", elements}, {"genus_zero_mode", poset.genus_zero_mode()}};
}

json to_json(const TriangularMap& map) {
  json out = to_json(map.poset());
  json entries = json::array();
  for (std::size_t i = 0; i < map.poset().size(); ++i) {
    for (const auto& [j, c] : map.row(i)) entries.push_back(json::array({i, j, to_string(c)}));
  }
  out["entries"] = entries;
  out["context"] = to_json(map.poset().context());
  return out;
}

json to_json(const InvariantVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json::array({std::to_string(i), to_string(v[i])}));
  return out;
}

namespace {

[[noreturn]] void malformed(const std::string& what, const json& j) {
  throw Error(ErrorCode::ParseError, what + ": " + j.dump());
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  malformed("expected a rational \"p/q\"", v);
}

std::size_t resolve_index(const json& id, const GraphPoset& poset) {
  std::size_t index = poset.size();
  if (id.is_number_unsigned() || id.is_number_integer()) {
    const long i = id.get<long>();
    if (i >= 0) index = static_cast<std::size_t>(i);
  } else if (id.is_string()) {
    const std::string s = id.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      index = std::stoul(s);
    } else {
      json parsed;
      try {
        parsed = json::parse(s);
      } catch (const json::parse_error&) {
        parsed = s;  // a bare "empty"
      }
      if (auto found = poset.index_of(graph_list_from_json(parsed).key())) index = *found;
    }
  } else {
    malformed("vector index must be an integer or a graph key", id);
  }
  if (index >= poset.size()) malformed("vector index does not name a poset element", id);
  return index;
}

}  // namespace

TriangularMap map_from_json(const json& j, const std::optional<GraphContext>& ctx) {
  if (!j.is_object() || !j.contains("poset") || !j["poset"].is_array()) malformed("map needs a \"poset\" array", j);

  GraphContext context;
  if (ctx) {
    context = *ctx;
  } else if (j.contains("context")) {
    context = context_from_json(j["context"]);
  } else {
    throw Error(ErrorCode::PreconditionViolation, "map file has no context; pass one explicitly");
  }
  const bool genus_zero = j.value("genus_zero_mode", false);

  std::vector<GraphList> elements;
  for (const auto& g : j["poset"]) elements.push_back(graph_list_from_json(g));
  auto poset = std::make_shared<const GraphPoset>(GraphPoset::from_ordered(std::move(elements), context, genus_zero));

  TriangularMap map(poset);
  if (j.contains("entries")) {
    if (!j["entries"].is_array()) malformed("entries must be an array", j);
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<long>() < 0 || e[1].get<long>() < 0) {
        malformed("entry must be [row, col, \"p/q\"]", e);
      }
      map.set(e[0].get<std::size_t>(), e[1].get<std::size_t>(), rational_value(e[2]));
    }
  }
  return map;
}

InvariantVector vector_from_json(const json& j, std::shared_ptr<const GraphPoset> poset) {
  if (!j.is_array()) malformed("vector must be an array of [index, \"p/q\"] pairs", j);
  std::vector<Rational> values(poset->size(), Rational(0));
  std::vector<bool> seen(poset->size(), false);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) malformed("vector entry must be [index, \"p/q\"]", entry);
    const std::size_t i = resolve_index(entry[0], *poset);
    if (seen[i]) malformed("vector names an element twice", entry);
    seen[i] = true;
    values[i] = rational_value(entry[1]);
  }
  return InvariantVector(std::move(poset), std::move(values));
}

}  // namespace unirule
