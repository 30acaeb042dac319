#include "unirule/graph_io.hpp"

#include "unirule/error.hpp"

namespace unirule {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what, const json& j) {
  throw Error(ErrorCode::ParseError, what + ": " + j.dump());
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'", j);
  return j.at(name);
}

long integer_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) malformed(std::string("field '") + name + "' must be an integer", j);
  return v.get<long>();
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  malformed("expected a rational \"p/q\"", v);
}

}  // namespace

json to_json(const CohWeight& w) { return json{{"deg", w.degree}, {"label", w.label}}; }

json to_json(const ColoredGraph& g) {
  json x_tails = json::array();
  for (const auto& w : g.x_tails()) x_tails.push_back(to_json(w));
  json d_tails = json::array();
  for (const auto& p : g.d_tails().pairs()) d_tails.push_back(json::array({p.multiplicity, to_json(p.weight)}));
  return json{{"genus", g.genus()}, {"class", g.class_key()}, {"x_tails", x_tails}, {"d_tails", d_tails}};
}

json to_json(const GraphList& g) {
  if (g.is_empty()) return "empty";
  json arr = json::array();
  for (const auto& c : g.components()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const GraphContext& ctx) {
  json classes = json::object();
  for (const auto& [key, d] : ctx.classes) {
    classes[key] = {{"area", to_string(d.area)}, {"c1", d.c1}, {"d_dot", d.d_dot}, {"in_iota_image", d.in_iota_image}};
  }
  json theta = json::array();
  for (const auto& w : ctx.theta) theta.push_back(to_json(w));
  json xi = json::array();
  for (const auto& w : ctx.xi) xi.push_back(to_json(w));
  json out{{"n", ctx.n},         {"c_min", to_string(ctx.c_min)},
           {"V", ctx.V ? json(to_string(*ctx.V)) : json("inf")},
           {"classes", classes}, {"theta", theta},
           {"xi", xi}};
  if (!ctx.point_label.empty()) out["point_label"] = ctx.point_label;
  return out;
}

CohWeight weight_from_json(const json& j) {
  const json& label = field(j, "label");
  if (!label.is_string()) malformed("weight label must be a string", j);
  return CohWeight{static_cast<int>(integer_field(j, "deg")), label.get<std::string>()};
}

ColoredGraph graph_from_json(const json& j) {
  const json& cls = field(j, "class");
  if (!cls.is_string()) malformed("graph class must be a string key", j);

  std::vector<CohWeight> x_tails;
  if (j.contains("x_tails")) {
    if (!j["x_tails"].is_array()) malformed("x_tails must be an array", j);
    for (const auto& w : j["x_tails"]) x_tails.push_back(weight_from_json(w));
  }
  std::vector<DTail> d_tails;
  if (j.contains("d_tails")) {
    if (!j["d_tails"].is_array()) malformed("d_tails must be an array", j);
    for (const auto& p : j["d_tails"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer()) malformed("d_tail must be [mult, weight]", p);
      const long mult = p[0].get<long>();
      if (mult < 0) malformed("multiplicities are non-negative", p);
      d_tails.push_back(DTail{mult, weight_from_json(p[1])});
    }
  }
  return ColoredGraph(integer_field(j, "genus"), cls.get<std::string>(), std::move(x_tails),
                      WeightedPartition(std::move(d_tails)));
}

GraphList graph_list_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "empty") malformed("the only string graph is \"empty\"", j);
    return GraphList::empty_graph();
  }
  if (j.is_object()) return GraphList(graph_from_json(j));
  if (!j.is_array()) malformed("graph list must be an array, an object or \"empty\"", j);
  std::vector<ColoredGraph> components;
  for (const auto& g : j) components.push_back(graph_from_json(g));
  return GraphList(std::move(components));
}

GraphContext context_from_json(const json& j) {
  GraphContext ctx;
  ctx.n = static_cast<int>(integer_field(j, "n"));
  if (j.contains("c_min")) ctx.c_min = rational_value(j["c_min"]);
  if (j.contains("V") && !j["V"].is_null()) {
    const json& v = j["V"];
    const bool infinite = v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity");
    if (!infinite) ctx.V = rational_value(v);
  }
  const json& classes = field(j, "classes");
  if (!classes.is_object()) malformed("classes must be an object keyed by class name", j);
  for (const auto& [key, d] : classes.items()) {
    ClassData data;
    data.area = rational_value(field(d, "area"));
    data.c1 = integer_field(d, "c1");
    data.d_dot = integer_field(d, "d_dot");
    if (d.contains("in_iota_image")) {
      if (!d["in_iota_image"].is_boolean()) malformed("in_iota_image must be a boolean", d);
      data.in_iota_image = d["in_iota_image"].get<bool>();
    }
    ctx.classes.emplace(key, std::move(data));
  }
  const auto read_basis = [&](const char* name) {
    std::vector<CohWeight> basis;
    if (!j.contains(name)) return basis;
    if (!j[name].is_array()) malformed(std::string(name) + " must be an array", j);
    for (const auto& w : j[name]) basis.push_back(weight_from_json(w));
    return basis;
  };
  ctx.theta = read_basis("theta");
  ctx.xi = read_basis("xi");
  if (j.contains("point_label")) {
    if (!j["point_label"].is_string()) malformed("point_label must be a string", j);
    ctx.point_label = j["point_label"].get<std::string>();
  }
  ctx.validate();
  return ctx;
}

}  // namespace unirule
