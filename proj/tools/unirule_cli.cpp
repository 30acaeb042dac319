// unirule: batch front end over the library. Every subcommand reads its
// inputs from arguments or JSON files and writes either a table or JSON.
// Errors print "error: <Name>: <message>" and exit 2 (precondition),
// 3 (data) or 4 (internal).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unirule/class_enum.hpp"
#include "unirule/correspondence.hpp"
#include "unirule/correspondence_io.hpp"
#include "unirule/error.hpp"
#include "unirule/graph_io.hpp"

using namespace unirule;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

SurfaceModel model_named(const std::string& name, int k) {
  if (name == "blowup") return SurfaceModel::blowup(k);
  if (name == "product") return SurfaceModel::product();
  if (name == "twisted") return SurfaceModel::twisted();
  throw Error(ErrorCode::ParseError, "unknown model '" + name + "' (blowup, product, twisted)");
}

// "(a|b1,..)", "a;b1,.." or a JSON array of coefficients.
DivisorClass parse_class(const std::string& text, const std::string& model) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    const int k = model == "blowup" ? static_cast<int>(j.size()) - 1 : 0;
    return class_from_json(j, model_named(model, k));
  }
  if (model != "blowup") throw Error(ErrorCode::ParseError, "bundle classes are given as JSON arrays, e.g. [1,0]");
  return parse_blowup_class(text);
}

std::string class_text(const DivisorClass& x) {
  if (x.model().kind() == SurfaceKind::BlowupOfP2) return to_table(x);
  std::string s;
  const auto labels = x.model().basis_labels();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (sgn(x.coeffs()[i]) == 0) continue;
    const Integer& c = x.coeffs()[i];
    const std::string coeff = c == 1 ? "" : c == -1 ? "-" : to_string(c);
    s += (s.empty() ? "" : " + ") + coeff + labels[i];
  }
  return s.empty() ? "0" : s;
}

json class_list_json(const std::vector<DivisorClass>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

void print_classes(const std::vector<DivisorClass>& xs, bool as_json) {
  if (as_json) {
    std::cout << json{{"classes", class_list_json(xs)}, {"count", xs.size()}}.dump(2) << "\n";
    return;
  }
  for (const auto& x : xs) std::cout << class_text(x) << "\n";
  std::cout << "count: " << xs.size() << "\n";
}

std::string order_name(GraphOrder o) {
  switch (o) {
    case GraphOrder::Less: return "Less";
    case GraphOrder::Greater: return "Greater";
    case GraphOrder::Equal: return "Equal";
    case GraphOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

std::string order_symbol(GraphOrder o) {
  switch (o) {
    case GraphOrder::Less: return "<";
    case GraphOrder::Greater: return ">";
    case GraphOrder::Equal: return "=";
    case GraphOrder::Incomparable: return "||";
  }
  return "?";
}

void print_poset(const GraphPoset& poset, bool as_json) {
  if (as_json) {
    std::cout << to_json(poset).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < poset.size(); ++i) std::cout << i << "  " << poset.key(i) << "\n";
  std::cout << "count: " << poset.size() << "\n";
}

void print_vector(const InvariantVector& v, bool as_json) {
  if (as_json) {
    std::cout << to_json(v).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << i << "  " << to_string(v[i]) << "  " << v.poset().key(i) << "\n";
}

void print_report(const UniruledReport& r, bool as_json) {
  if (as_json) {
    std::cout << json{{"c1_ok", r.c1_ok},
                      {"square_ok", r.square_ok},
                      {"pairing_ok", r.pairing_ok},
                      {"passes", r.passes()},
                      {"violations", class_list_json(r.violations)}}
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << "c1 >= 2:        " << (r.c1_ok ? "yes" : "no") << "\n"
            << "square >= 0:    " << (r.square_ok ? "yes" : "no") << "\n"
            << "pairings >= 0:  " << (r.pairing_ok ? "yes" : "no") << "\n";
  for (const auto& v : r.violations) std::cout << "  negative against " << class_text(v) << "\n";
  std::cout << (r.passes() ? "passes" : "fails") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of uniruled classes and graph-indexed invariants"};
  app.require_subcommand(1);

  std::string format = "table";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  int k = 0;
  bool expand = false;
  auto* fiber = app.add_subcommand("fiber-classes", "Fiber (uniruled) classes on P^2 blown up k times");
  fiber->add_option("k", k, "Number of blow-ups, 1..8")->required();
  fiber->add_flag("--expand-permutations", expand, "List every permutation instead of descending representatives");
  add_format(fiber);

  std::optional<long> a_bound;
  auto* minus_one = app.add_subcommand("minus-one", "Classes with square -1 and c1 = 1");
  minus_one->add_option("k", k, "Number of blow-ups")->required();
  minus_one->add_option("--a-bound", a_bound, "Search |a| <= bound (required for k >= 9)");
  add_format(minus_one);

  std::string class_arg;
  auto* reduce = app.add_subcommand("reduce", "Cremona-reduce a class, logging each move");
  reduce->add_option("class", class_arg, "Class as \"(a|b1,...,bk)\"")->required();
  add_format(reduce);

  std::string form_file;
  std::optional<int> k_opt;
  auto* minimal = app.add_subcommand("minimal", "Fiber classes of least positive area under a form");
  minimal->add_option("form-file", form_file,
                      "JSON: an array of \"p/q\" coefficients, or {\"model\": ..., \"form\": [...]}")
      ->required();
  minimal->add_option("k", k_opt, "Number of blow-ups; defaults to the form length minus one");
  add_format(minimal);

  std::string model_name = "blowup";
  std::string witness_file;
  auto* check = app.add_subcommand("check-uniruled", "Necessary conditions for a class to be uniruled");
  check->add_option("class", class_arg, "Class as \"(a|b1,...)\" or a JSON coefficient array")->required();
  check->add_option("--model", model_name, "Surface model")->check(CLI::IsMember({"blowup", "product", "twisted"}));
  check->add_option("--witnesses", witness_file, "JSON array of witness classes (coefficient arrays)");
  add_format(check);

  std::string graphs_file, context_file;
  bool genus_zero = false;
  auto* compare = app.add_subcommand("compare", "Pairwise order matrix of graphs");
  compare->add_option("graphs-file", graphs_file, "JSON array of graphs")->required();
  compare->add_option("--context", context_file, "Context JSON")->required();
  compare->add_flag("--genus-zero", genus_zero, "Compare component counts instead of genus");
  add_format(compare);

  std::string root_file;
  std::optional<long> max_genus;
  std::optional<std::size_t> max_x_tails;
  auto* lower = app.add_subcommand("lower-set", "Standard graphs at or below a root");
  lower->add_option("root-file", root_file, "Root graph JSON")->required();
  lower->add_option("context-file", context_file, "Context JSON")->required();
  lower->add_option("--max-genus", max_genus, "Largest component genus to generate");
  lower->add_option("--max-x-tails", max_x_tails, "Largest total number of X-tails");
  lower->add_flag("--genus-zero", genus_zero, "Genus-zero mode");
  add_format(lower);

  std::string a_min;
  int max_tails = 0;
  std::size_t dpt_x_tails = 0;
  auto* dpt = app.add_subcommand("dpt-index", "Index set of graphs with a point D-insertion");
  dpt->add_option("context-file", context_file, "Context JSON (must give V)")->required();
  dpt->add_option("--class", a_min, "Class key of area V")->required();
  dpt->add_option("--max-tails", max_tails, "Largest number of D-tails")->required();
  dpt->add_option("--max-x-tails", dpt_x_tails, "Largest number of X-tails");
  add_format(dpt);

  std::string map_file, vector_file;
  bool invert = false;
  auto* solve = app.add_subcommand("solve", "Apply or invert a lower-triangular map");
  solve->add_option("map-file", map_file, "Map JSON")->required();
  solve->add_option("vector-file", vector_file, "Vector JSON")->required();
  solve->add_flag("--invert", invert, "Solve T v = w for v");
  solve->add_option("--context", context_file, "Context JSON overriding the one in the map file");
  add_format(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_status(ErrorCode::PreconditionViolation);
  }
  const bool as_json = format == "json";

  try {
    if (fiber->parsed()) {
      if (k < 1) throw Error(ErrorCode::UnsupportedK, "fiber classes are listed for 1 <= k <= 8, got " + std::to_string(k));
      print_classes(enumerate_fiber_classes(k, expand).classes, as_json);
    } else if (minus_one->parsed()) {
      print_classes(enumerate_minus_one_classes(k, a_bound), as_json);
    } else if (reduce->parsed()) {
      const auto r = cremona_reduce(parse_blowup_class(class_arg));
      if (as_json) {
        json moves = json::array();
        for (const auto& m : r.moves) moves.push_back({{"before", to_json(m.before)}, {"after", to_json(m.after)}});
        std::cout << json{{"reduced", to_json(r.reduced)}, {"moves", moves}}.dump(2) << "\n";
      } else {
        for (const auto& m : r.moves) std::cout << "move: " << to_table(m.before) << " -> " << to_table(m.after) << "\n";
        std::cout << to_table(r.reduced) << "\n";
        std::cout << "moves: " << r.moves.size() << "\n";
      }
    } else if (minimal->parsed()) {
      const json j = read_json(form_file);
      const json coeffs = j.is_object() ? j.value("form", json()) : j;
      const std::string model = j.is_object() ? j.value("model", std::string("blowup")) : "blowup";
      if (model == "blowup") {
        const int blowups = k_opt.value_or(coeffs.is_array() ? static_cast<int>(coeffs.size()) - 1 : 0);
        const auto form = form_from_json(coeffs, SurfaceModel::blowup(blowups));
        print_classes(minimal_fiber_class(form, blowups), as_json);
      } else {
        const auto m = model_named(model, 0);
        const auto best = minimal_uniruled_for_bundle(m, form_from_json(coeffs, m));
        if (as_json) {
          std::cout << json{{"minimal", to_json(best.minimal)}, {"ties", class_list_json(best.ties)}}.dump(2) << "\n";
        } else {
          std::cout << class_text(best.minimal) << "\n";
          if (best.ties.size() > 1) {
            std::cout << "tied:";
            for (const auto& t : best.ties) std::cout << " " << class_text(t);
            std::cout << "\n";
          }
        }
      }
    } else if (check->parsed()) {
      const auto x = parse_class(class_arg, model_name);
      std::optional<std::vector<DivisorClass>> witnesses;
      if (!witness_file.empty()) {
        const json w = read_json(witness_file);
        if (!w.is_array()) throw Error(ErrorCode::ParseError, "witness file must be a JSON array of classes");
        witnesses.emplace();
        for (const auto& c : w) witnesses->push_back(class_from_json(c, x.model()));
      }
      print_report(uniruled_necessary(x, witnesses), as_json);
    } else if (compare->parsed()) {
      const auto ctx = context_from_json(read_json(context_file));
      const json gj = read_json(graphs_file);
      if (!gj.is_array()) throw Error(ErrorCode::ParseError, "graphs file must be a JSON array");
      std::vector<GraphList> graphs;
      for (const auto& g : gj) graphs.push_back(graph_list_from_json(g));
      std::vector<std::vector<GraphOrder>> m(graphs.size(), std::vector<GraphOrder>(graphs.size()));
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = 0; j < graphs.size(); ++j) m[i][j] = graph_compare(graphs[i], graphs[j], ctx, genus_zero);
      }
      if (as_json) {
        json keys = json::array(), rows = json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          keys.push_back(graphs[i].key());
          json row = json::array();
          for (const auto o : m[i]) row.push_back(order_name(o));
          rows.push_back(row);
        }
        std::cout << json{{"graphs", keys}, {"matrix", rows}}.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) std::cout << "g" << i << "  " << graphs[i].key() << "\n";
        std::cout << "\n    ";
        for (std::size_t j = 0; j < graphs.size(); ++j) std::cout << " g" << j;
        std::cout << "\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          std::cout << "g" << i << "  ";
          for (const auto o : m[i]) {
            const auto sym = order_symbol(o);
            std::cout << std::string(3 - sym.size(), ' ') << sym;
          }
          std::cout << "\n";
        }
      }
    } else if (lower->parsed()) {
      const auto ctx = context_from_json(read_json(context_file));
      const auto root = graph_list_from_json(read_json(root_file));
      print_poset(lower_set(root, ctx, genus_zero, LowerSetBounds{max_genus, max_x_tails}), as_json);
    } else if (dpt->parsed()) {
      const auto ctx = context_from_json(read_json(context_file));
      print_poset(build_dpt_index(ctx, a_min, max_tails, dpt_x_tails), as_json);
    } else if (solve->parsed()) {
      std::optional<GraphContext> ctx;
      if (!context_file.empty()) ctx = context_from_json(read_json(context_file));
      const auto t = map_from_json(read_json(map_file), ctx);
      const auto v = vector_from_json(read_json(vector_file), t.poset_ptr());
      print_vector(invert ? invert_triangular(t, v) : apply_triangular(t, v), as_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return exit_status(ErrorCode::ParseError);
  }
  return 0;
}
