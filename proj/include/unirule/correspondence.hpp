#pragma once

// Finite pieces of the graph index set and exact lower-triangular transforms
// over them. A GraphPoset stores its elements in linear-extension order, so a
// TriangularMap is lower triangular in the ordinary matrix sense as well.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unirule/graph.hpp"

namespace unirule {

class GraphPoset {
 public:
  /// Deduplicates (byte-identical graphs only) and sorts by linear_extension.
  static GraphPoset build(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode);
  /// Keeps the given order. Throws PreconditionViolation on duplicates or if
  /// some element precedes one that is strictly below it.
  static GraphPoset from_ordered(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode);

  std::size_t size() const { return elements_.size(); }
  const std::vector<GraphList>& elements() const { return elements_; }
  const GraphList& element(std::size_t i) const { return elements_.at(i); }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  /// graph_compare(element(i), element(j)).
  GraphOrder relation(std::size_t i, std::size_t j) const { return relation_[i * size() + j]; }
  const GraphContext& context() const { return ctx_; }
  bool genus_zero_mode() const { return genus_zero_mode_; }
  std::optional<std::size_t> index_of(const std::string& key) const;
  bool same_elements(const GraphPoset& other) const { return keys_ == other.keys_; }

 private:
  GraphPoset(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode);

  std::vector<GraphList> elements_;
  std::vector<std::string> keys_;
  std::vector<GraphOrder> relation_;
  GraphContext ctx_;
  bool genus_zero_mode_;
};

/// Kahn's algorithm; among available nodes the smallest tie key goes first.
/// `less(i, j)` must mean node i is strictly below node j. Throws
/// CycleDetected if the relation has a cycle.
std::vector<std::size_t> topological_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                                           const std::vector<std::string>& tie_keys);

/// The poset's elements in a linear extension of graph_compare, ties broken
/// by canonical serialization.
std::vector<GraphList> linear_extension(const GraphPoset& poset);

/// Search window for lower sets. The genus and the number of X-tails of
/// graphs below a root are not bounded by the order alone, so generation is
/// confined to max_genus per component and max_x_tails in total. Defaults:
/// the root's largest component genus (at least 0) and the root's X-tail count.
struct LowerSetBounds {
  std::optional<long> max_genus;
  std::optional<std::size_t> max_x_tails;
};

/// All standard sup-admissible graphs at or below `root` within the window,
/// as a poset. Non-empty roots must be standard; the lower set of the empty
/// graph is {empty}. In genus-zero mode every component has genus 0.
GraphPoset lower_set(const GraphList& root, const GraphContext& ctx, bool genus_zero_mode,
                     const LowerSetBounds& bounds = {});

/// Connected genus-0 standard graphs with a point D-insertion: admissible ones
/// of area <= V, and strictly sup-admissible ones of area exactly V whose
/// multiplicities sum to D.A + 1. At most `max_d_tails` D-tails and
/// `max_x_tails` X-tails. Throws VInfinite when V is infinite.
GraphPoset build_dpt_index(const GraphContext& ctx, const std::string& a_min, int max_d_tails,
                           std::size_t max_x_tails = 0);

/// Exact lower-triangular coefficients over a poset: entry (row, col) may be
/// set only when col == row or element(col) is below or equal to element(row)
/// and precedes it.
class TriangularMap {
 public:
  explicit TriangularMap(std::shared_ptr<const GraphPoset> poset);
  static TriangularMap identity(std::shared_ptr<const GraphPoset> poset);

  /// Throws InvalidCoefficient for pairs outside the lower triangle of the order.
  void set(std::size_t row, std::size_t col, const Rational& value);
  const Rational* coefficient(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Rational>& row(std::size_t i) const { return rows_.at(i); }
  std::size_t entry_count() const;

  const GraphPoset& poset() const { return *poset_; }
  const std::shared_ptr<const GraphPoset>& poset_ptr() const { return poset_; }

 private:
  std::shared_ptr<const GraphPoset> poset_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

class InvariantVector {
 public:
  /// The zero vector.
  explicit InvariantVector(std::shared_ptr<const GraphPoset> poset);
  InvariantVector(std::shared_ptr<const GraphPoset> poset, std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  void set(std::size_t i, const Rational& value) { values_.at(i) = value; }
  const std::vector<Rational>& values() const { return values_; }
  bool is_zero() const;

  const GraphPoset& poset() const { return *poset_; }
  const std::shared_ptr<const GraphPoset>& poset_ptr() const { return poset_; }

  bool operator==(const InvariantVector& other) const;

 private:
  std::shared_ptr<const GraphPoset> poset_;
  std::vector<Rational> values_;
};

/// (Tv)_i = sum over j <= i of T(i, j) v_j. PosetMismatch if the posets differ.
InvariantVector apply_triangular(const TriangularMap& t, const InvariantVector& v);

/// The unique v with apply_triangular(t, v) == w, by forward substitution.
/// SingularDiagonal if any diagonal entry is zero or missing.
InvariantVector invert_triangular(const TriangularMap& t, const InvariantVector& w);

}  // namespace unirule
