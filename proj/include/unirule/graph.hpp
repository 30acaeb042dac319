#pragma once

// Colored weighted graphs: bookkeeping indices for relative/absolute
// invariants of a pair (X, D). A connected graph carries a genus, an abstract
// curve class, X-tails weighted by cohomology classes of X and D-tails
// weighted by (multiplicity, class of D). Nothing here evaluates invariants;
// graphs are ordered and classified purely from the data in a GraphContext.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unirule/number.hpp"

namespace unirule {

/// A fixed basis element of H^*(D) (a Theta label) or H^*(X) (a Xi label).
struct CohWeight {
  int degree = 0;
  std::string label;

  auto operator<=>(const CohWeight&) const = default;
};

/// One D-tail: contact multiplicity and the D-insertion attached to it.
struct DTail {
  long multiplicity = 0;
  CohWeight weight;

  bool operator==(const DTail&) const = default;
};

enum class SizeOrder { Greater, Less, EqualSize };

/// (m, d) > (m', d') iff m > m', or m == m' and deg d > deg d'. Labels are
/// ignored. Multiplicity 0 sorts below every positive multiplicity.
SizeOrder size_compare(const DTail& p, const DTail& q);

/// A weighted partition mu, stored in canonical order: decreasing size, ties
/// broken by label so that equal multisets have identical storage.
class WeightedPartition {
 public:
  WeightedPartition() = default;
  explicit WeightedPartition(std::vector<DTail> pairs);

  const std::vector<DTail>& pairs() const { return pairs_; }
  std::size_t length() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  /// Sum of multiplicities.
  long total_multiplicity() const;
  /// deg(mu): sum of the degrees of the D-insertions.
  long total_degree() const;
  WeightedPartition merged(const WeightedPartition& other) const;

  bool operator==(const WeightedPartition&) const = default;

 private:
  std::vector<DTail> pairs_;
};

enum class LexOrder { LexGreater, LexLess, LexEqual };

/// Position-by-position size comparison; the first strict difference
/// decides. If one partition is a size-prefix of the other, the longer one is
/// greater.
LexOrder lex_compare(const WeightedPartition& mu, const WeightedPartition& nu);

struct ClassData {
  Rational area;
  long c1 = 0;
  long d_dot = 0;  // D . A
  bool in_iota_image = false;
};

/// Everything graph operations need to know about (X, D, omega).
struct GraphContext {
  int n = 3;  // complex dimension of X
  /// Effective classes keyed by name. A class with area 0 is the zero class.
  std::map<std::string, ClassData> classes;
  /// c(X, omega): minimal area of a non-constant curve.
  Rational c_min{1};
  /// Minimal divisor area V of a point-inserted invariant; nullopt = infinite.
  std::optional<Rational> V;
  std::vector<CohWeight> theta;  // basis of H^*(D), degrees 0..2n-2
  std::vector<CohWeight> xi;     // basis of H^*(X), degrees 0..2n
  /// Theta label of the point class of D; empty means "the unique Theta
  /// element of degree 2n-2".
  std::string point_label;

  /// MissingClassData when absent.
  const ClassData& lookup(const std::string& key) const;
  const CohWeight& point_class() const;
  bool in_theta(const CohWeight& w) const;
  bool in_xi(const CohWeight& w) const;
  /// ContextNotFinite if c_min <= 0 or a class has negative area;
  /// PreconditionViolation for malformed bases.
  void validate() const;
};

/// A connected colored weighted graph Gamma(varpi | mu) with genus and class.
/// X-tails are kept sorted, so graphs with the same tail multiset are equal.
class ColoredGraph {
 public:
  ColoredGraph(long genus, std::string class_key, std::vector<CohWeight> x_tails = {},
               WeightedPartition d_tails = {});

  long genus() const { return genus_; }
  const std::string& class_key() const { return class_key_; }
  const std::vector<CohWeight>& x_tails() const { return x_tails_; }
  const WeightedPartition& d_tails() const { return d_tails_; }
  /// Canonical serialization; byte-identical for equal graphs.
  const std::string& key() const { return key_; }

  bool operator==(const ColoredGraph& other) const { return key_ == other.key_; }

 private:
  long genus_;
  std::string class_key_;
  std::vector<CohWeight> x_tails_;
  WeightedPartition d_tails_;
  std::string key_;
};

/// A finite disjoint union of connected graphs. No components is the empty
/// graph Gamma(empty | empty).
class GraphList {
 public:
  GraphList() = default;
  explicit GraphList(std::vector<ColoredGraph> components);
  explicit GraphList(ColoredGraph single) : GraphList(std::vector<ColoredGraph>{std::move(single)}) {}

  static GraphList empty_graph() { return {}; }

  bool is_empty() const { return components_.empty(); }
  const std::vector<ColoredGraph>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  /// 1 + sum (g_i - 1).
  long total_genus() const;
  std::size_t x_tail_count() const;
  WeightedPartition merged_d_tails() const;
  /// "empty" or the canonical JSON array.
  std::string key() const;

  bool operator==(const GraphList& other) const { return key() == other.key(); }

 private:
  std::vector<ColoredGraph> components_;  // sorted by key
};

enum class Admissibility { Admissible, StrictlySupAdmissible, StrictlySubAdmissible };

/// Compares sum mu_j with D.A. Throws NotSupAdmissible when sum mu_j > D.A
/// for a class outside the image of H_2(D).
Admissibility classify(const ColoredGraph& g, const GraphContext& ctx);

/// Where a possibly disconnected graph sits relative to the index set of
/// sup-admissible graphs.
enum class ListKind {
  Empty,
  Admissible,             // one or more admissible components
  StrictlySupAdmissible,  // a single strictly sup-admissible component
  Outside,                // anything else
};
ListKind list_kind(const GraphList& g, const GraphContext& ctx);

/// Expected dimension; 0 for the empty graph, additive over components.
long dimension(const ColoredGraph& g, const GraphContext& ctx);
long dimension(const GraphList& g, const GraphContext& ctx);

Rational class_area(const ColoredGraph& g, const GraphContext& ctx);
Rational total_area(const GraphList& g, const GraphContext& ctx);

struct StandardCheck {
  bool standard = false;
  std::vector<std::string> reasons;  // empty iff standard
};

/// Standard graph clauses: nonzero effective class, g >= -omega(A)/c_min + 1,
/// Xi-standard X-tails, Theta-standard D-tails, dimension zero. For a
/// disconnected graph the first four are checked per component and the
/// dimension of the union must vanish.
StandardCheck is_standard(const ColoredGraph& g, const GraphContext& ctx);
StandardCheck is_standard(const GraphList& g, const GraphContext& ctx);

enum class GraphOrder { Less, Greater, Equal, Incomparable };

GraphOrder reversed(GraphOrder order);

/// The partial order on sup-admissible graphs. Empty is below everything.
/// Admissible graphs compare by (area, genus, #X-tails, reversed deg mu,
/// reversed lex mu); in genus-zero mode the genus key becomes the reversed
/// number of components. An admissible graph lies below a strictly
/// sup-admissible one iff its area is not larger; two strictly sup-admissible
/// graphs are only ever Equal (when identical) or Incomparable. Inputs outside
/// the index set throw PreconditionViolation.
GraphOrder graph_compare(const GraphList& lhs, const GraphList& rhs, const GraphContext& ctx,
                         bool genus_zero_mode);

GraphList disjoint_union(std::span<const ColoredGraph> graphs);
GraphList disjoint_union(const GraphList& lhs, const GraphList& rhs);

}  // namespace unirule
