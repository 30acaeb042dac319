#include "unirule/graph.hpp"

#include <algorithm>
#include <set>

#include "unirule/error.hpp"
#include "unirule/graph_io.hpp"

namespace unirule {

SizeOrder size_compare(const DTail& p, const DTail& q) {
  if (p.multiplicity != q.multiplicity) {
    return p.multiplicity > q.multiplicity ? SizeOrder::Greater : SizeOrder::Less;
  }
  if (p.weight.degree != q.weight.degree) {
    return p.weight.degree > q.weight.degree ? SizeOrder::Greater : SizeOrder::Less;
  }
  return SizeOrder::EqualSize;
}

WeightedPartition::WeightedPartition(std::vector<DTail> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), [](const DTail& l, const DTail& r) {
    const SizeOrder s = size_compare(l, r);
    if (s != SizeOrder::EqualSize) return s == SizeOrder::Greater;
    return l.weight.label < r.weight.label;
  });
}

long WeightedPartition::total_multiplicity() const {
  long total = 0;
  for (const auto& p : pairs_) total += p.multiplicity;
  return total;
}

long WeightedPartition::total_degree() const {
  long total = 0;
  for (const auto& p : pairs_) total += p.weight.degree;
  return total;
}

WeightedPartition WeightedPartition::merged(const WeightedPartition& other) const {
  std::vector<DTail> all = pairs_;
  all.insert(all.end(), other.pairs_.begin(), other.pairs_.end());
  return WeightedPartition(std::move(all));
}

LexOrder lex_compare(const WeightedPartition& mu, const WeightedPartition& nu) {
  const auto& a = mu.pairs();
  const auto& b = nu.pairs();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    switch (size_compare(a[i], b[i])) {
      case SizeOrder::Greater: return LexOrder::LexGreater;
      case SizeOrder::Less: return LexOrder::LexLess;
      case SizeOrder::EqualSize: break;
    }
  }
  if (a.size() == b.size()) return LexOrder::LexEqual;
  return a.size() > b.size() ? LexOrder::LexGreater : LexOrder::LexLess;
}

const ClassData& GraphContext::lookup(const std::string& key) const {
  const auto it = classes.find(key);
  if (it == classes.end()) throw Error(ErrorCode::MissingClassData, "class '" + key + "' is not in the context");
  return it->second;
}

const CohWeight& GraphContext::point_class() const {
  const CohWeight* found = nullptr;
  for (const auto& w : theta) {
    const bool match = point_label.empty() ? w.degree == 2 * n - 2 : w.label == point_label;
    if (!match) continue;
    if (found) throw Error(ErrorCode::PreconditionViolation, "point class of D is ambiguous; set point_label");
    found = &w;
  }
  if (!found) throw Error(ErrorCode::PreconditionViolation, "Theta has no point class");
  return *found;
}

bool GraphContext::in_theta(const CohWeight& w) const {
  return std::find(theta.begin(), theta.end(), w) != theta.end();
}

bool GraphContext::in_xi(const CohWeight& w) const { return std::find(xi.begin(), xi.end(), w) != xi.end(); }

void GraphContext::validate() const {
  if (n < 2) throw Error(ErrorCode::PreconditionViolation, "X must have complex dimension n >= 2");
  if (sgn(c_min) <= 0) {
    throw Error(ErrorCode::ContextNotFinite, "c_min must be positive, otherwise area bounds do not bound classes");
  }
  if (V && sgn(*V) <= 0) throw Error(ErrorCode::PreconditionViolation, "V must be positive or infinite");
  for (const auto& [key, data] : classes) {
    if (sgn(data.area) < 0) {
      throw Error(ErrorCode::ContextNotFinite, "class '" + key + "' has negative area");
    }
  }
  const auto check_basis = [](const std::vector<CohWeight>& basis, int max_degree, const char* name) {
    std::set<std::string> labels;
    for (const auto& w : basis) {
      if (w.degree < 0 || w.degree > max_degree) {
        throw Error(ErrorCode::PreconditionViolation, std::string(name) + " element '" + w.label +
                                                          "' has degree outside [0, " +
                                                          std::to_string(max_degree) + "]");
      }
      if (!labels.insert(w.label).second) {
        throw Error(ErrorCode::PreconditionViolation, std::string(name) + " label '" + w.label + "' repeated");
      }
    }
  };
  check_basis(theta, 2 * n - 2, "Theta");
  check_basis(xi, 2 * n, "Xi");
}

ColoredGraph::ColoredGraph(long genus, std::string class_key, std::vector<CohWeight> x_tails,
                           WeightedPartition d_tails)
    : genus_(genus), class_key_(std::move(class_key)), x_tails_(std::move(x_tails)), d_tails_(std::move(d_tails)) {
  std::sort(x_tails_.begin(), x_tails_.end());
  key_ = to_json(*this).dump();
}

GraphList::GraphList(std::vector<ColoredGraph> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(),
            [](const ColoredGraph& l, const ColoredGraph& r) { return l.key() < r.key(); });
}

long GraphList::total_genus() const {
  long g = 1;
  for (const auto& c : components_) g += c.genus() - 1;
  return g;
}

std::size_t GraphList::x_tail_count() const {
  std::size_t count = 0;
  for (const auto& c : components_) count += c.x_tails().size();
  return count;
}

WeightedPartition GraphList::merged_d_tails() const {
  std::vector<DTail> all;
  for (const auto& c : components_) all.insert(all.end(), c.d_tails().pairs().begin(), c.d_tails().pairs().end());
  return WeightedPartition(std::move(all));
}

std::string GraphList::key() const {
  if (components_.empty()) return "\"empty\"";
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ",";
    out += components_[i].key();
  }
  return out + "]";
}

namespace {

std::optional<Admissibility> try_classify(const ColoredGraph& g, const ClassData& data) {
  const long total = g.d_tails().total_multiplicity();
  if (total == data.d_dot) return Admissibility::Admissible;
  if (total < data.d_dot) return Admissibility::StrictlySubAdmissible;
  if (data.in_iota_image) return Admissibility::StrictlySupAdmissible;
  return std::nullopt;
}

}  // namespace

Admissibility classify(const ColoredGraph& g, const GraphContext& ctx) {
  const auto kind = try_classify(g, ctx.lookup(g.class_key()));
  if (!kind) {
    throw Error(ErrorCode::NotSupAdmissible, "sum of multiplicities exceeds D.A but class '" + g.class_key() +
                                                 "' is not in the image of H_2(D)");
  }
  return *kind;
}

ListKind list_kind(const GraphList& g, const GraphContext& ctx) {
  if (g.is_empty()) return ListKind::Empty;
  std::size_t admissible = 0;
  std::size_t sup = 0;
  for (const auto& c : g.components()) {
    const auto kind = try_classify(c, ctx.lookup(c.class_key()));
    if (kind == Admissibility::Admissible) ++admissible;
    if (kind == Admissibility::StrictlySupAdmissible) ++sup;
  }
  if (admissible == g.component_count()) return ListKind::Admissible;
  if (sup == 1 && g.component_count() == 1) return ListKind::StrictlySupAdmissible;
  return ListKind::Outside;
}

long dimension(const ColoredGraph& g, const GraphContext& ctx) {
  const ClassData& data = ctx.lookup(g.class_key());
  long dim = 2 * (data.c1 + static_cast<long>(ctx.n - 3) * (1 - g.genus()) + data.d_dot);
  for (const auto& p : g.d_tails().pairs()) dim += 2 - 2 * p.multiplicity - p.weight.degree;
  for (const auto& alpha : g.x_tails()) dim += alpha.degree == 1 ? 1 : 2 - alpha.degree;
  return dim;
}

long dimension(const GraphList& g, const GraphContext& ctx) {
  long dim = 0;
  for (const auto& c : g.components()) dim += dimension(c, ctx);
  return dim;
}

Rational class_area(const ColoredGraph& g, const GraphContext& ctx) { return ctx.lookup(g.class_key()).area; }

Rational total_area(const GraphList& g, const GraphContext& ctx) {
  Rational total = 0;
  for (const auto& c : g.components()) total += class_area(c, ctx);
  return total;
}

namespace {

void check_component(const ColoredGraph& g, const GraphContext& ctx, std::vector<std::string>& reasons) {
  const auto it = ctx.classes.find(g.class_key());
  if (it == ctx.classes.end()) {
    reasons.push_back("class '" + g.class_key() + "' is not effective (absent from context)");
  } else {
    const Rational& omega = it->second.area;
    if (sgn(omega) == 0) reasons.push_back("class '" + g.class_key() + "' is the zero class");
    const Rational bound = Rational(1) - omega / ctx.c_min;
    if (Rational(g.genus()) < bound) {
      reasons.push_back("genus " + std::to_string(g.genus()) + " is below -omega(A)/c_min + 1 = " + to_string(bound));
    }
  }
  for (const auto& alpha : g.x_tails()) {
    if (!ctx.in_xi(alpha)) reasons.push_back("X-tail '" + alpha.label + "' is not a Xi basis element");
  }
  for (const auto& p : g.d_tails().pairs()) {
    if (!ctx.in_theta(p.weight)) reasons.push_back("D-tail weight '" + p.weight.label + "' is not a Theta basis element");
  }
}

}  // namespace

StandardCheck is_standard(const ColoredGraph& g, const GraphContext& ctx) { return is_standard(GraphList(g), ctx); }

StandardCheck is_standard(const GraphList& g, const GraphContext& ctx) {
  StandardCheck check;
  if (g.is_empty()) {
    check.reasons.push_back("the empty graph has no nonzero class");
    return check;
  }
  for (const auto& c : g.components()) check_component(c, ctx, check.reasons);
  // The dimension needs class data; skip it when a class is missing.
  const bool classes_known = std::all_of(g.components().begin(), g.components().end(),
                                         [&](const ColoredGraph& c) { return ctx.classes.contains(c.class_key()); });
  if (classes_known) {
    const long dim = dimension(g, ctx);
    if (dim != 0) check.reasons.push_back("dimension " + std::to_string(dim) + " != 0");
  }
  check.standard = check.reasons.empty();
  return check;
}

GraphOrder reversed(GraphOrder order) {
  switch (order) {
    case GraphOrder::Less: return GraphOrder::Greater;
    case GraphOrder::Greater: return GraphOrder::Less;
    default: return order;
  }
}

namespace {

template <typename T>
std::optional<GraphOrder> by_key(const T& lhs, const T& rhs) {
  if (lhs < rhs) return GraphOrder::Less;
  if (rhs < lhs) return GraphOrder::Greater;
  return std::nullopt;
}

GraphOrder compare_admissible(const GraphList& lhs, const GraphList& rhs, const GraphContext& ctx,
                              bool genus_zero_mode) {
  if (auto o = by_key(total_area(lhs, ctx), total_area(rhs, ctx))) return *o;
  if (genus_zero_mode) {
    // More components means lower in the order.
    if (auto o = by_key(rhs.component_count(), lhs.component_count())) return *o;
  } else {
    if (auto o = by_key(lhs.total_genus(), rhs.total_genus())) return *o;
  }
  if (auto o = by_key(lhs.x_tail_count(), rhs.x_tail_count())) return *o;
  const WeightedPartition mu_l = lhs.merged_d_tails();
  const WeightedPartition mu_r = rhs.merged_d_tails();
  // Larger deg(mu) is lower.
  if (auto o = by_key(mu_r.total_degree(), mu_l.total_degree())) return *o;
  switch (lex_compare(mu_l, mu_r)) {
    case LexOrder::LexGreater: return GraphOrder::Less;
    case LexOrder::LexLess: return GraphOrder::Greater;
    case LexOrder::LexEqual: break;
  }
  return GraphOrder::Equal;
}

ListKind require_indexable(const GraphList& g, const GraphContext& ctx) {
  const ListKind kind = list_kind(g, ctx);
  if (kind == ListKind::Outside) {
    throw Error(ErrorCode::PreconditionViolation, "graph " + g.key() + " is not sup-admissible");
  }
  return kind;
}

}  // namespace

GraphOrder graph_compare(const GraphList& lhs, const GraphList& rhs, const GraphContext& ctx, bool genus_zero_mode) {
  const ListKind kl = require_indexable(lhs, ctx);
  const ListKind kr = require_indexable(rhs, ctx);

  if (kl == ListKind::Empty || kr == ListKind::Empty) {
    if (kl == kr) return GraphOrder::Equal;
    return kl == ListKind::Empty ? GraphOrder::Less : GraphOrder::Greater;
  }
  if (kl == ListKind::Admissible && kr == ListKind::Admissible) {
    return compare_admissible(lhs, rhs, ctx, genus_zero_mode);
  }
  if (kl == ListKind::StrictlySupAdmissible && kr == ListKind::StrictlySupAdmissible) {
    return lhs == rhs ? GraphOrder::Equal : GraphOrder::Incomparable;
  }
  if (kl == ListKind::Admissible) {
    return total_area(lhs, ctx) <= total_area(rhs, ctx) ? GraphOrder::Less : GraphOrder::Incomparable;
  }
  return total_area(rhs, ctx) <= total_area(lhs, ctx) ? GraphOrder::Greater : GraphOrder::Incomparable;
}

GraphList disjoint_union(std::span<const ColoredGraph> graphs) {
  return GraphList(std::vector<ColoredGraph>(graphs.begin(), graphs.end()));
}

GraphList disjoint_union(const GraphList& lhs, const GraphList& rhs) {
  std::vector<ColoredGraph> all = lhs.components();
  all.insert(all.end(), rhs.components().begin(), rhs.components().end());
  return GraphList(std::move(all));
}

}  // namespace unirule
