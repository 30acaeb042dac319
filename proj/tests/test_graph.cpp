#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toy_contexts.hpp"
#include "unirule/error.hpp"
#include "unirule/graph.hpp"
#include "unirule/graph_io.hpp"

using namespace unirule;

namespace {

DTail tail(long m, int deg, std::string label = "w") { return DTail{m, CohWeight{deg, std::move(label)}}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::CycleDetected;
}

// n = 3 context matching the dimension examples: point class of D in degree 4.
GraphContext dim_context() {
  GraphContext ctx;
  ctx.n = 3;
  ctx.classes = {{"A", ClassData{Rational(1), 2, 1, true}},
                 {"A2", ClassData{Rational(2), 2, 2, true}},
                 {"B", ClassData{Rational(1), 2, 3, false}},
                 {"S", ClassData{Rational(2), 2, 3, true}}};
  ctx.theta = {{0, "one"}, {2, "beta"}, {4, "pt"}};
  ctx.xi = {{0, "x0"}, {4, "xq"}, {6, "xpt"}};
  return ctx;
}

GraphContext graph_context_with_d(long d_dot, bool iota) {
  GraphContext ctx = dim_context();
  ctx.classes = {{"A", ClassData{Rational(1), 2, d_dot, iota}}};
  return ctx;
}

}  // namespace

TEST_CASE("size_compare") {
  CHECK(size_compare(tail(3, 0), tail(2, 4)) == SizeOrder::Greater);
  CHECK(size_compare(tail(2, 4), tail(2, 2)) == SizeOrder::Greater);
  CHECK(size_compare(tail(2, 2), tail(2, 4)) == SizeOrder::Less);
  CHECK(size_compare(tail(2, 2, "d1"), tail(2, 2, "d2")) == SizeOrder::EqualSize);
  CHECK(size_compare(tail(0, 4), tail(1, 0)) == SizeOrder::Less);
}

TEST_CASE("lex_compare") {
  const WeightedPartition mu({tail(2, 2), tail(1, 0)}), nu({tail(1, 4), tail(1, 0)});
  CHECK(lex_compare(mu, nu) == LexOrder::LexGreater);
  CHECK(lex_compare(nu, mu) == LexOrder::LexLess);
  CHECK(lex_compare(mu, mu) == LexOrder::LexEqual);
  CHECK(lex_compare(WeightedPartition({tail(2, 0)}), WeightedPartition({tail(2, 0), tail(1, 0)})) ==
        LexOrder::LexLess);
  CHECK(lex_compare(WeightedPartition(), WeightedPartition({tail(1, 0)})) == LexOrder::LexLess);
  // Equal sizes, different labels.
  CHECK(lex_compare(WeightedPartition({tail(1, 2, "a")}), WeightedPartition({tail(1, 2, "b")})) ==
        LexOrder::LexEqual);
}

TEST_CASE("weighted partitions are canonical") {
  const WeightedPartition a({tail(1, 0, "x"), tail(2, 2, "b"), tail(2, 2, "a")});
  const WeightedPartition b({tail(2, 2, "a"), tail(1, 0, "x"), tail(2, 2, "b")});
  CHECK(a == b);
  CHECK(a.pairs().front().weight.label == "a");
  CHECK(a.total_multiplicity() == 5);
  CHECK(a.total_degree() == 4);
  CHECK(WeightedPartition(a.pairs()) == a);
  CHECK(a.merged(WeightedPartition({tail(3, 0)})).pairs().front() == tail(3, 0));
}

TEST_CASE("property: size and lex agree with integer-code oracles") {
  // Every multiset of at most 4 pairs with multiplicity 1..3 and even degree <= 6.
  std::vector<DTail> atoms;
  for (long m = 1; m <= 3; ++m) {
    for (int d = 0; d <= 6; d += 2) atoms.push_back(tail(m, d));
  }
  std::vector<std::vector<DTail>> parts{{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::vector<DTail>> grown;
    for (const auto& p : parts) {
      if (p.size() != len - 1) continue;
      const std::size_t start =
          p.empty() ? 0 : static_cast<std::size_t>(std::find(atoms.begin(), atoms.end(), p.back()) - atoms.begin());
      for (std::size_t i = start; i < atoms.size(); ++i) {
        auto q = p;
        q.push_back(atoms[i]);
        grown.push_back(std::move(q));
      }
    }
    parts.insert(parts.end(), grown.begin(), grown.end());
  }
  REQUIRE(parts.size() == 1820);
  std::vector<WeightedPartition> canon;
  for (const auto& p : parts) canon.emplace_back(p);

  const auto as_int = [](LexOrder o) { return o == LexOrder::LexLess ? -1 : o == LexOrder::LexEqual ? 0 : 1; };
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (as_int(lex_compare(canon[i], canon[j])) != oracle::lex_order(parts[i], parts[j])) ++mismatches;
    }
  }
  CHECK(mismatches == 0);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> mult(0, 3);
  std::uniform_int_distribution<int> deg(0, 6), lab(0, 1), len(0, 4);
  for (int t = 0; t < 20000; ++t) {
    const auto random_part = [&] {
      std::vector<DTail> p;
      for (int n = len(rng); n > 0; --n) p.push_back(tail(mult(rng), deg(rng), lab(rng) ? "a" : "b"));
      return p;
    };
    const auto p = random_part(), q = random_part();
    CHECK(as_int(lex_compare(WeightedPartition(p), WeightedPartition(q))) == oracle::lex_order(p, q));
    if (!p.empty() && !q.empty()) {
      const auto s = size_compare(p[0], q[0]);
      CHECK((s == SizeOrder::Less ? -1 : s == SizeOrder::EqualSize ? 0 : 1) == oracle::size_order(p[0], q[0]));
    }
  }
}

TEST_CASE("classify") {
  const ColoredGraph three(0, "A", {}, WeightedPartition({tail(1, 0, "one"), tail(2, 2, "beta")}));
  CHECK(classify(three, graph_context_with_d(3, true)) == Admissibility::Admissible);
  const ColoredGraph four(0, "A", {}, WeightedPartition({tail(2, 0, "one"), tail(2, 2, "beta")}));
  CHECK(classify(four, graph_context_with_d(3, true)) == Admissibility::StrictlySupAdmissible);
  CHECK(code_of([&] { (void)classify(four, graph_context_with_d(3, false)); }) == ErrorCode::NotSupAdmissible);
  const ColoredGraph two(0, "A", {}, WeightedPartition({tail(2, 2, "beta")}));
  CHECK(classify(two, graph_context_with_d(3, false)) == Admissibility::StrictlySubAdmissible);
  CHECK(code_of([&] { (void)classify(ColoredGraph(0, "Z"), graph_context_with_d(3, true)); }) ==
        ErrorCode::MissingClassData);
}

TEST_CASE("dimension") {
  const auto ctx = dim_context();
  CHECK(dimension(GraphList(), ctx) == 0);
  const ColoredGraph g(0, "A", {}, WeightedPartition({tail(1, 4, "pt")}));
  CHECK(dimension(g, ctx) == 2);
  const ColoredGraph g2(0, "A2", {}, WeightedPartition({tail(1, 4, "pt"), tail(1, 2, "beta")}));
  CHECK(dimension(g2, ctx) == 2);
  // An X-tail of degree 6 lowers the dimension by 4.
  CHECK(dimension(ColoredGraph(0, "A", {{6, "xpt"}}, WeightedPartition({tail(1, 4, "pt")})), ctx) == -2);
  // Additive over components.
  CHECK(dimension(GraphList({g, g2}), ctx) == 4);

  GraphContext four = ctx;
  four.n = 4;
  CHECK(dimension(ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 4, "pt")})), four) == 4);
  CHECK(dimension(ColoredGraph(2, "A", {}, WeightedPartition({tail(1, 4, "pt")})), four) == 0);
  // Degree-one X-insertions count once.
  CHECK(dimension(ColoredGraph(2, "A", {{1, "odd"}}, WeightedPartition({tail(1, 4, "pt")})), four) == 1);
}

TEST_CASE("is_standard") {
  const auto ctx = dim_context();
  CHECK_FALSE(is_standard(GraphList(), ctx).standard);
  const auto dim2 = is_standard(ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 4, "pt")})), ctx);
  CHECK_FALSE(dim2.standard);
  REQUIRE(dim2.reasons.size() == 1);
  CHECK(dim2.reasons[0].find("dimension") != std::string::npos);

  const auto missing = is_standard(ColoredGraph(0, "nope"), ctx);
  CHECK_FALSE(missing.standard);
  CHECK(missing.reasons[0].find("not effective") != std::string::npos);

  // dim = 2(2 + 1) + (2 - 2 - 4) + (2 - 4) = 0.
  const ColoredGraph ok(0, "A", {{4, "xq"}}, WeightedPartition({tail(1, 4, "pt")}));
  CHECK(is_standard(ok, ctx).standard);

  // Genus bound: g >= 1 - area / c_min = 0 for class A.
  const ColoredGraph low(-1, "A", {{4, "xq"}}, WeightedPartition({tail(1, 4, "pt")}));
  CHECK_FALSE(is_standard(low, ctx).standard);

  // Weights outside the bases.
  CHECK_FALSE(is_standard(ColoredGraph(0, "A", {{4, "zz"}}, WeightedPartition({tail(1, 4, "pt")})), ctx).standard);
  CHECK_FALSE(is_standard(ColoredGraph(0, "A", {{4, "xq"}}, WeightedPartition({tail(1, 4, "qq")})), ctx).standard);

  // Lists: per-component clauses, summed dimension.
  const ColoredGraph plus2(0, "A", {}, WeightedPartition({tail(1, 4, "pt")}));
  const ColoredGraph minus2(0, "A", {{6, "xpt"}}, WeightedPartition({tail(1, 4, "pt")}));
  CHECK(is_standard(GraphList({plus2, minus2}), ctx).standard);
}

TEST_CASE("context validation") {
  auto ctx = dim_context();
  ctx.c_min = 0;
  CHECK(code_of([&] { ctx.validate(); }) == ErrorCode::ContextNotFinite);
  ctx = dim_context();
  ctx.classes["neg"] = ClassData{Rational(-1), 0, 0, false};
  CHECK(code_of([&] { ctx.validate(); }) == ErrorCode::ContextNotFinite);
  ctx = dim_context();
  ctx.theta.push_back({8, "too_big"});
  CHECK(code_of([&] { ctx.validate(); }) == ErrorCode::PreconditionViolation);
  ctx = dim_context();
  CHECK(ctx.point_class().label == "pt");
  CHECK(code_of([&] { (void)ctx.lookup("missing"); }) == ErrorCode::MissingClassData);
}

TEST_CASE("disjoint_union") {
  const ColoredGraph g(2, "A"), h(0, "A"), k(0, "B");
  const auto one = disjoint_union(std::vector{g});
  CHECK(one.component_count() == 1);
  CHECK(one.total_genus() == 2);
  CHECK(disjoint_union(std::vector{h, k}).total_genus() == -1);
  const GraphList hk({h, k});
  CHECK(disjoint_union(hk, GraphList()) == hk);
  CHECK(disjoint_union(GraphList(), hk) == hk);
  CHECK(disjoint_union(GraphList(k), GraphList(h)) == hk);
  CHECK(GraphList().key() == "\"empty\"");
}

TEST_CASE("graph_compare") {
  const auto ctx = toy::three_class();
  const GraphList a(ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 4, "pt")})));
  const GraphList b(ColoredGraph(0, "B", {}, WeightedPartition({tail(1, 4, "pt"), tail(1, 0, "one")})));
  CHECK(graph_compare(GraphList(), a, ctx, false) == GraphOrder::Less);
  CHECK(graph_compare(a, GraphList(), ctx, false) == GraphOrder::Greater);
  CHECK(graph_compare(GraphList(), GraphList(), ctx, false) == GraphOrder::Equal);
  CHECK(graph_compare(a, b, ctx, false) == GraphOrder::Less);
  CHECK(graph_compare(b, a, ctx, false) == GraphOrder::Greater);
  CHECK(graph_compare(a, a, ctx, false) == GraphOrder::Equal);

  // Same area: higher genus is larger.
  const GraphList a1(ColoredGraph(1, "A", {}, WeightedPartition({tail(1, 4, "pt")})));
  CHECK(graph_compare(a, a1, ctx, false) == GraphOrder::Less);
  // More X-tails is larger.
  const GraphList ax(ColoredGraph(0, "A", {{2, "xh"}}, WeightedPartition({tail(1, 4, "pt")})));
  CHECK(graph_compare(a, ax, ctx, false) == GraphOrder::Less);
  // Larger deg mu is smaller.
  const GraphList ah(ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 2, "h")})));
  CHECK(graph_compare(a, ah, ctx, false) == GraphOrder::Less);
  // Equal keys but different labels: Equal without being identical.
  const GraphList ah2(ColoredGraph(0, "A", {{2, "xh"}}, WeightedPartition({tail(1, 2, "h")})));
  const GraphList ah3(ColoredGraph(0, "A", {{0, "x0"}}, WeightedPartition({tail(1, 2, "h")})));
  CHECK(graph_compare(ah2, ah3, ctx, false) == GraphOrder::Equal);

  // Strictly sup-admissible graphs: A and C are in the image.
  const GraphList supA(ColoredGraph(0, "A", {}, WeightedPartition({tail(2, 4, "pt")})));
  const GraphList supC(ColoredGraph(0, "C", {}, WeightedPartition({tail(1, 4, "pt"), tail(1, 2, "h")})));
  CHECK(graph_compare(supA, supC, ctx, false) == GraphOrder::Incomparable);
  CHECK(graph_compare(supA, supA, ctx, false) == GraphOrder::Equal);
  CHECK(graph_compare(a, supA, ctx, false) == GraphOrder::Less);
  CHECK(graph_compare(supA, a, ctx, false) == GraphOrder::Greater);
  CHECK(graph_compare(b, supA, ctx, false) == GraphOrder::Incomparable);
  CHECK(graph_compare(GraphList(), supC, ctx, false) == GraphOrder::Less);

  // Genus-zero mode: more components is smaller at equal area.
  const GraphList two_a({ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 4, "pt")})),
                         ColoredGraph(0, "A", {}, WeightedPartition({tail(1, 4, "pt")}))});
  const GraphList b0(ColoredGraph(0, "B", {}, WeightedPartition({tail(2, 4, "pt")})));
  CHECK(graph_compare(two_a, b0, ctx, true) == GraphOrder::Less);
  // Outside the index set.
  const GraphList sub(ColoredGraph(0, "B"));
  CHECK(code_of([&] { (void)graph_compare(sub, a, ctx, false); }) == ErrorCode::PreconditionViolation);
  CHECK(code_of([&] { (void)graph_compare(GraphList({supA.components()[0], a.components()[0]}), a, ctx, false); }) ==
        ErrorCode::PreconditionViolation);
}

TEST_CASE("json round trips") {
  const auto ctx = toy::three_class();
  const ColoredGraph g(1, "B", {{2, "xh"}, {0, "x0"}}, WeightedPartition({tail(1, 4, "pt"), tail(1, 0, "one")}));
  CHECK(graph_from_json(to_json(g)) == g);
  const GraphList l({g, ColoredGraph(0, "A")});
  CHECK(graph_list_from_json(to_json(l)) == l);
  CHECK(graph_list_from_json(nlohmann::json("empty")).is_empty());
  CHECK(graph_list_from_json(to_json(g)) == GraphList(g));
  const auto back = context_from_json(to_json(ctx));
  CHECK(to_json(back) == to_json(ctx));
  CHECK(back.V == ctx.V);
  CHECK(code_of([] { (void)graph_from_json(nlohmann::json{{"genus", "x"}}); }) == ErrorCode::ParseError);
}
