#include "unirule/correspondence.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

#include "unirule/error.hpp"

namespace unirule {

GraphPoset::GraphPoset(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode)
    : elements_(std::move(elements)), ctx_(std::move(ctx)), genus_zero_mode_(genus_zero_mode) {
  keys_.reserve(elements_.size());
  for (const auto& e : elements_) keys_.push_back(e.key());
  const std::size_t n = elements_.size();
  relation_.assign(n * n, GraphOrder::Equal);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const GraphOrder o = graph_compare(elements_[i], elements_[j], ctx_, genus_zero_mode_);
      relation_[i * n + j] = o;
      relation_[j * n + i] = reversed(o);
    }
  }
}

namespace {

std::vector<GraphList> deduplicated(std::vector<GraphList> elements) {
  std::set<std::string> seen;
  std::vector<GraphList> out;
  for (auto& e : elements) {
    if (seen.insert(e.key()).second) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

GraphPoset GraphPoset::build(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode) {
  GraphPoset unsorted(deduplicated(std::move(elements)), std::move(ctx), genus_zero_mode);
  auto order = topological_order(
      unsorted.size(), [&](std::size_t i, std::size_t j) { return unsorted.relation(i, j) == GraphOrder::Less; },
      unsorted.keys_);

  std::vector<GraphList> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(unsorted.elements_[i]);
  // Permute the cached relation rather than recomputing it.
  const std::size_t n = order.size();
  GraphPoset result = std::move(unsorted);
  std::vector<GraphOrder> relation(n * n);
  std::vector<std::string> keys(n);
  for (std::size_t a = 0; a < n; ++a) {
    keys[a] = result.keys_[order[a]];
    for (std::size_t b = 0; b < n; ++b) relation[a * n + b] = result.relation_[order[a] * n + order[b]];
  }
  result.elements_ = std::move(sorted);
  result.keys_ = std::move(keys);
  result.relation_ = std::move(relation);
  return result;
}

GraphPoset GraphPoset::from_ordered(std::vector<GraphList> elements, GraphContext ctx, bool genus_zero_mode) {
  GraphPoset poset(std::move(elements), std::move(ctx), genus_zero_mode);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!seen.insert(poset.keys_[i]).second) {
      throw Error(ErrorCode::PreconditionViolation, "poset lists graph " + poset.keys_[i] + " twice");
    }
    for (std::size_t j = i + 1; j < poset.size(); ++j) {
      if (poset.relation(j, i) == GraphOrder::Less) {
        throw Error(ErrorCode::PreconditionViolation, "poset order is not a linear extension: element " +
                                                          std::to_string(j) + " is below element " +
                                                          std::to_string(i));
      }
    }
  }
  return poset;
}

std::optional<std::size_t> GraphPoset::index_of(const std::string& key) const {
  const auto it = std::find(keys_.begin(), keys_.end(), key);
  if (it == keys_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::vector<std::size_t> topological_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                                           const std::vector<std::string>& tie_keys) {
  std::vector<std::vector<std::size_t>> above(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && less(i, j)) {
        above[i].push_back(j);
        ++indegree[j];
      }
    }
  }

  using Item = std::pair<const std::string*, std::size_t>;
  const auto later = [](const Item& l, const Item& r) {
    if (*l.first != *r.first) return *l.first > *r.first;
    return l.second > r.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> ready(later);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.emplace(&tie_keys.at(i), i);
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = ready.top().second;
    ready.pop();
    order.push_back(i);
    for (std::size_t j : above[i]) {
      if (--indegree[j] == 0) ready.emplace(&tie_keys.at(j), j);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::CycleDetected, "order relation has a cycle; the comparator is not a partial order");
  }
  return order;
}

std::vector<GraphList> linear_extension(const GraphPoset& poset) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < poset.size(); ++i) keys.push_back(poset.key(i));
  const auto order = topological_order(
      poset.size(), [&](std::size_t i, std::size_t j) { return poset.relation(i, j) == GraphOrder::Less; }, keys);
  std::vector<GraphList> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(poset.element(i));
  return out;
}

namespace {

// Multisets of size <= max_size drawn from `basis`, as sorted vectors.
std::vector<std::vector<CohWeight>> tail_multisets(const std::vector<CohWeight>& basis, std::size_t max_size) {
  std::vector<std::vector<CohWeight>> out;
  std::vector<CohWeight> current;
  const auto recurse = [&](auto&& self, std::size_t start) -> void {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < basis.size(); ++i) {
      current.push_back(basis[i]);
      self(self, i);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

// Weighted partitions with positive multiplicities summing to `total`, using
// at most `max_length` pairs with weights from `theta`.
std::vector<WeightedPartition> partitions_of(long total, const std::vector<CohWeight>& theta, std::size_t max_length) {
  std::vector<DTail> atoms;
  for (long m = total; m >= 1; --m) {
    for (const auto& w : theta) atoms.push_back(DTail{m, w});
  }
  std::vector<WeightedPartition> out;
  std::vector<DTail> current;
  const auto recurse = [&](auto&& self, std::size_t start, long remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == max_length) return;
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].multiplicity > remaining) continue;
      current.push_back(atoms[i]);
      self(self, i, remaining - atoms[i].multiplicity);
      current.pop_back();
    }
  };
  if (total >= 0) recurse(recurse, 0, total);
  return out;
}

struct Component {
  ColoredGraph graph;
  Rational area;
  long dim;
};

long ceil_of(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

GraphPoset lower_set(const GraphList& root, const GraphContext& ctx, bool genus_zero_mode,
                     const LowerSetBounds& bounds) {
  ctx.validate();
  if (root.is_empty()) return GraphPoset::build({root}, ctx, genus_zero_mode);

  const auto root_check = is_standard(root, ctx);
  if (!root_check.standard) {
    throw Error(ErrorCode::PreconditionViolation, "root is not standard: " + root_check.reasons.front());
  }
  if (list_kind(root, ctx) == ListKind::Outside) {
    throw Error(ErrorCode::PreconditionViolation, "root is not sup-admissible");
  }

  long max_genus = 0;
  for (const auto& c : root.components()) max_genus = std::max(max_genus, c.genus());
  if (bounds.max_genus) max_genus = *bounds.max_genus;
  const std::size_t max_x = bounds.max_x_tails.value_or(root.x_tail_count());
  const Rational budget = total_area(root, ctx);

  // Admissible standard components that could appear in a lower graph.
  std::vector<Component> pool;
  const auto x_choices = tail_multisets(ctx.xi, max_x);
  for (const auto& [key, data] : ctx.classes) {
    if (sgn(data.area) <= 0 || data.area > budget || data.d_dot < 0) continue;
    const long genus_floor = ceil_of(Rational(1) - data.area / ctx.c_min);
    const long g_lo = genus_zero_mode ? 0 : genus_floor;
    const long g_hi = genus_zero_mode ? 0 : max_genus;
    if (g_lo < genus_floor) continue;
    const auto mus = partitions_of(data.d_dot, ctx.theta, static_cast<std::size_t>(data.d_dot));
    for (long g = g_lo; g <= g_hi; ++g) {
      for (const auto& xs : x_choices) {
        for (const auto& mu : mus) {
          ColoredGraph graph(g, key, xs, mu);
          const long dim = dimension(graph, ctx);
          pool.push_back({std::move(graph), data.area, dim});
        }
      }
    }
  }

  std::vector<GraphList> found{root};
  std::vector<ColoredGraph> chosen;
  const auto combine = [&](auto&& self, std::size_t start, const Rational& area_left, std::size_t x_left,
                           long dim) -> void {
    if (!chosen.empty() && dim == 0) {
      GraphList candidate(chosen);
      const GraphOrder o = graph_compare(candidate, root, ctx, genus_zero_mode);
      if (o == GraphOrder::Less || o == GraphOrder::Equal) found.push_back(std::move(candidate));
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      const Component& c = pool[i];
      if (c.area > area_left || c.graph.x_tails().size() > x_left) continue;
      chosen.push_back(c.graph);
      self(self, i, area_left - c.area, x_left - c.graph.x_tails().size(), dim + c.dim);
      chosen.pop_back();
    }
  };
  combine(combine, 0, budget, max_x, 0);

  return GraphPoset::build(std::move(found), ctx, genus_zero_mode);
}

GraphPoset build_dpt_index(const GraphContext& ctx, const std::string& a_min, int max_d_tails, std::size_t max_x_tails) {
  ctx.validate();
  if (!ctx.V) throw Error(ErrorCode::VInfinite, "V is infinite: the divisor is not uniruled and the index is undefined");
  const Rational& V = *ctx.V;
  const ClassData& anchor = ctx.lookup(a_min);
  if (anchor.area != V || !anchor.in_iota_image) {
    throw Error(ErrorCode::PreconditionViolation,
                "class '" + a_min + "' must have area V and lie in the image of H_2(D)");
  }
  if (max_d_tails < 1) throw Error(ErrorCode::PreconditionViolation, "at least one D-tail is needed for a point insertion");

  const CohWeight& pt = ctx.point_class();
  const auto has_point = [&](const WeightedPartition& mu) {
    return std::any_of(mu.pairs().begin(), mu.pairs().end(), [&](const DTail& p) { return p.weight == pt; });
  };
  const auto length = static_cast<std::size_t>(max_d_tails);

  std::vector<GraphList> members;
  const auto x_choices = tail_multisets(ctx.xi, max_x_tails);
  for (const auto& [key, data] : ctx.classes) {
    if (sgn(data.area) <= 0 || data.area > V) continue;
    std::vector<WeightedPartition> mus;
    if (data.d_dot >= 0) mus = partitions_of(data.d_dot, ctx.theta, length);
    if (data.in_iota_image && data.area == V) {
      auto sup = partitions_of(data.d_dot + 1, ctx.theta, length);
      mus.insert(mus.end(), sup.begin(), sup.end());
    }
    for (const auto& mu : mus) {
      if (!has_point(mu)) continue;
      for (const auto& xs : x_choices) {
        GraphList g(ColoredGraph(0, key, xs, mu));
        if (is_standard(g, ctx).standard) members.push_back(std::move(g));
      }
    }
  }
  return GraphPoset::build(std::move(members), ctx, true);
}

TriangularMap::TriangularMap(std::shared_ptr<const GraphPoset> poset)
    : poset_(std::move(poset)), rows_(poset_->size()) {}

TriangularMap TriangularMap::identity(std::shared_ptr<const GraphPoset> poset) {
  TriangularMap t(std::move(poset));
  for (std::size_t i = 0; i < t.rows_.size(); ++i) t.rows_[i][i] = 1;
  return t;
}

void TriangularMap::set(std::size_t row, std::size_t col, const Rational& value) {
  const std::size_t n = poset_->size();
  if (row >= n || col >= n) {
    throw Error(ErrorCode::InvalidCoefficient, "entry (" + std::to_string(row) + ", " + std::to_string(col) +
                                                   ") is outside a poset of size " + std::to_string(n));
  }
  if (row != col) {
    const GraphOrder o = poset_->relation(col, row);
    const bool below = o == GraphOrder::Less || (o == GraphOrder::Equal && col < row);
    if (!below || col > row) {
      throw Error(ErrorCode::InvalidCoefficient, "entry (" + std::to_string(row) + ", " + std::to_string(col) +
                                                     ") is not below the diagonal of the order");
    }
  }
  Rational v = value;
  v.canonicalize();
  if (row != col && sgn(v) == 0) {
    rows_[row].erase(col);
    return;
  }
  rows_[row][col] = v;
}

const Rational* TriangularMap::coefficient(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  const auto it = r.find(col);
  return it == r.end() ? nullptr : &it->second;
}

std::size_t TriangularMap::entry_count() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.size();
  return count;
}

InvariantVector::InvariantVector(std::shared_ptr<const GraphPoset> poset)
    : poset_(std::move(poset)), values_(poset_->size(), Rational(0)) {}

InvariantVector::InvariantVector(std::shared_ptr<const GraphPoset> poset, std::vector<Rational> values)
    : poset_(std::move(poset)), values_(std::move(values)) {
  if (values_.size() != poset_->size()) {
    throw Error(ErrorCode::PosetMismatch, "vector has " + std::to_string(values_.size()) + " entries for a poset of size " +
                                              std::to_string(poset_->size()));
  }
  for (auto& v : values_) v.canonicalize();
}

bool InvariantVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

bool InvariantVector::operator==(const InvariantVector& other) const {
  return poset_->same_elements(*other.poset_) && values_ == other.values_;
}

namespace {

void require_same_poset(const TriangularMap& t, const InvariantVector& v) {
  if (t.poset_ptr() != v.poset_ptr() && !t.poset().same_elements(v.poset())) {
    throw Error(ErrorCode::PosetMismatch, "map and vector are indexed by different posets");
  }
}

}  // namespace

InvariantVector apply_triangular(const TriangularMap& t, const InvariantVector& v) {
  require_same_poset(t, v);
  std::vector<Rational> out(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [j, c] : t.row(i)) out[i] += c * v[j];
  }
  return InvariantVector(v.poset_ptr(), std::move(out));
}

InvariantVector invert_triangular(const TriangularMap& t, const InvariantVector& w) {
  require_same_poset(t, w);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational* d = t.coefficient(i, i);
    if (!d || sgn(*d) == 0) {
      throw Error(ErrorCode::SingularDiagonal, "diagonal entry " + std::to_string(i) + " is zero or missing");
    }
  }
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = w[i];
    const Rational* diagonal = nullptr;
    for (const auto& [j, c] : t.row(i)) {
      if (j == i) {
        diagonal = &c;
      } else {
        acc -= c * v[j];
      }
    }
    v[i] = acc / *diagonal;
  }
  return InvariantVector(w.poset_ptr(), std::move(v));
}

}  // namespace unirule
