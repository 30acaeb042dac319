#pragma once

// Independent reference implementations used only by tests. None of these
// share code paths with the library routines they check: enumeration here is
// a plain box search (split in halves to keep it fast), comparators work on
// integer encodings, and the lower-set oracle builds every graph in a box and
// filters.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unirule/graph.hpp"

namespace oracle {

using Row = std::vector<long>;

// All integer vectors (a; b_1..b_k) with a in [a_lo, a_hi], every b_i in
// [b_lo(a), b_hi(a)], sum b = lin(a) and sum b^2 = quad(a). Meet in the
// middle on (sum, sum of squares) of the two halves of b.
template <typename Lin, typename Quad, typename Range>
std::vector<Row> box_search(int k, long a_lo, long a_hi, Range b_range, Lin lin, Quad quad) {
  std::vector<Row> out;
  const int left = k / 2;
  const int right = k - left;
  const auto tuples = [](int len, long lo, long hi) {
    std::vector<Row> all{Row{}};
    for (int i = 0; i < len; ++i) {
      std::vector<Row> next;
      for (const auto& t : all) {
        for (long v = lo; v <= hi; ++v) {
          Row u = t;
          u.push_back(v);
          next.push_back(std::move(u));
        }
      }
      all = std::move(next);
    }
    return all;
  };
  for (long a = a_lo; a <= a_hi; ++a) {
    const auto [lo, hi] = b_range(a);
    std::map<std::pair<long, long>, std::vector<Row>> by_moments;
    for (auto& t : tuples(right, lo, hi)) {
      long s = 0, q = 0;
      for (long v : t) s += v, q += v * v;
      by_moments[{s, q}].push_back(std::move(t));
    }
    for (const auto& t : tuples(left, lo, hi)) {
      long s = 0, q = 0;
      for (long v : t) s += v, q += v * v;
      const auto it = by_moments.find({lin(a) - s, quad(a) - q});
      if (it == by_moments.end()) continue;
      for (const auto& u : it->second) {
        Row row{a};
        row.insert(row.end(), t.begin(), t.end());
        row.insert(row.end(), u.begin(), u.end());
        out.push_back(std::move(row));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -1 classes: a^2 - sum b^2 = -1, 3a - sum b = 1, in the box a in [-6, 12],
// b_i^2 <= a^2 + 1 (each square is at most the sum).
inline std::vector<Row> minus_one_classes(int k) {
  const auto range = [](long a) {
    long r = 0;
    while ((r + 1) * (r + 1) <= a * a + 1) ++r;
    return std::pair<long, long>{-r, r};
  };
  return box_search(k, -6, 12, range, [](long a) { return 3 * a - 1; }, [](long a) { return a * a + 1; });
}

// Fiber classes with all permutations: a in [0, 24], 0 <= b_i <= a,
// a^2 = sum b^2, 3a = sum b + 2, primitive.
inline std::vector<Row> fiber_classes(int k) {
  auto rows = box_search(
      k, 0, 24, [](long a) { return std::pair<long, long>{0, a}; }, [](long a) { return 3 * a - 2; },
      [](long a) { return a * a; });
  std::erase_if(rows, [](const Row& r) {
    long g = 0;
    for (long v : r) g = std::gcd(g, v < 0 ? -v : v);
    return g != 1;
  });
  return rows;
}

// Size of a (multiplicity, degree) pair as a single integer; 0 is reserved
// for "no pair". Degrees must lie in [0, 14].
inline long size_code(const unirule::DTail& p) { return p.multiplicity * 16 + p.weight.degree + 1; }

// -1, 0, 1 for less, equal size, greater.
inline int size_order(const unirule::DTail& p, const unirule::DTail& q) {
  const long a = size_code(p), b = size_code(q);
  return (a > b) - (a < b);
}

// Lexicographic order on weighted partitions via descending size codes padded
// with zeros, so a strict prefix compares below the longer partition.
inline int lex_order(const std::vector<unirule::DTail>& mu, const std::vector<unirule::DTail>& nu) {
  const auto codes = [](const std::vector<unirule::DTail>& p, std::size_t len) {
    std::vector<long> c;
    for (const auto& t : p) c.push_back(size_code(t));
    std::sort(c.rbegin(), c.rend());
    c.resize(len, 0);
    return c;
  };
  const std::size_t len = std::max(mu.size(), nu.size());
  const auto a = codes(mu, len), b = codes(nu, len);
  if (a == b) return 0;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
}

// Every graph list in a generous box, filtered down to the standard
// sup-admissible lists at or below `root`. The box: all classes in the table
// (zero class included), genus from one below the smallest bound up to
// max_genus, every ordered X-tail tuple of length <= max_x_tails, every
// multiset of D-tails with multiplicities and length up to the largest D.A + 1,
// and up to floor(area(root) / smallest positive area) components. Components
// are kept only when admissible or taken from the root, since a list of
// several components must be all admissible and a single strictly
// sup-admissible one must be the root itself.
inline std::set<std::string> lower_set_keys(const unirule::GraphList& root, const unirule::GraphContext& ctx,
                                            bool genus_zero_mode, long max_genus, std::size_t max_x_tails) {
  using namespace unirule;
  std::set<std::string> keys;
  if (root.is_empty()) {
    keys.insert(root.key());
    return keys;
  }

  long mult_cap = 0;
  Rational min_area = 0;
  long genus_lo = 0;
  for (const auto& [key, d] : ctx.classes) {
    mult_cap = std::max(mult_cap, d.d_dot + 1);
    if (sgn(d.area) > 0 && (min_area == 0 || d.area < min_area)) min_area = d.area;
    const Rational floor_bound = Rational(1) - d.area / ctx.c_min;
    long g = 0;
    while (Rational(g) > floor_bound - 1) --g;
    genus_lo = std::min(genus_lo, g);
  }

  std::vector<std::vector<CohWeight>> xs{{}};
  for (std::size_t len = 1; len <= max_x_tails; ++len) {
    std::vector<std::vector<CohWeight>> grown;
    for (const auto& t : xs) {
      if (t.size() != len - 1) continue;
      for (const auto& w : ctx.xi) {
        auto u = t;
        u.push_back(w);
        grown.push_back(std::move(u));
      }
    }
    xs.insert(xs.end(), grown.begin(), grown.end());
  }

  std::vector<DTail> atoms;
  for (long m = 1; m <= mult_cap; ++m) {
    for (const auto& w : ctx.theta) atoms.push_back({m, w});
  }
  std::vector<std::vector<DTail>> mus{{}};
  for (long len = 1; len <= mult_cap; ++len) {
    std::vector<std::vector<DTail>> grown;
    for (const auto& t : mus) {
      if (static_cast<long>(t.size()) != len - 1) continue;
      for (const auto& a : atoms) {
        auto u = t;
        u.push_back(a);
        grown.push_back(std::move(u));
      }
    }
    mus.insert(mus.end(), grown.begin(), grown.end());
  }

  std::set<std::string> in_root;
  for (const auto& c : root.components()) in_root.insert(c.key());
  std::map<std::string, ColoredGraph> unique_components;
  for (const auto& [key, d] : ctx.classes) {
    for (long g = genus_zero_mode ? 0 : genus_lo; g <= (genus_zero_mode ? 0 : max_genus); ++g) {
      for (const auto& x : xs) {
        for (const auto& mu : mus) {
          ColoredGraph c(g, key, x, WeightedPartition(mu));
          // Only the root may hold a non-admissible component.
          long total = 0;
          for (const auto& p : mu) total += p.multiplicity;
          if (total == d.d_dot || in_root.contains(c.key())) unique_components.emplace(c.key(), c);
        }
      }
    }
  }
  std::vector<ColoredGraph> comps;
  std::vector<Rational> areas;
  for (auto& [k, c] : unique_components) {
    areas.push_back(ctx.classes.at(c.class_key()).area);
    comps.push_back(std::move(c));
  }

  const Rational root_area = total_area(root, ctx);
  std::size_t max_parts = 0;
  while (Rational(static_cast<long>(max_parts + 1)) * min_area <= root_area) ++max_parts;

  std::vector<std::size_t> pick;
  const auto visit = [&](auto&& self, std::size_t start, Rational area) -> void {
    if (!pick.empty()) {
      std::vector<ColoredGraph> parts;
      for (std::size_t i : pick) parts.push_back(comps[i]);
      GraphList cand(std::move(parts));
      const ListKind kind = list_kind(cand, ctx);
      const bool indexable = kind == ListKind::Admissible || (kind == ListKind::StrictlySupAdmissible && cand == root);
      if (indexable && cand.x_tail_count() <= max_x_tails && is_standard(cand, ctx).standard) {
        const GraphOrder o = graph_compare(cand, root, ctx, genus_zero_mode);
        if (o == GraphOrder::Less || o == GraphOrder::Equal) keys.insert(cand.key());
      }
    }
    if (pick.size() == max_parts) return;
    for (std::size_t i = start; i < comps.size(); ++i) {
      // Anything heavier than the root is never below it.
      if (area + areas[i] > root_area) continue;
      pick.push_back(i);
      self(self, i, area + areas[i]);
      pick.pop_back();
    }
  };
  visit(visit, 0, Rational(0));
  keys.insert(root.key());
  return keys;
}

}  // namespace oracle
