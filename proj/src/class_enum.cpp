#include "unirule/class_enum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "unirule/error.hpp"

namespace unirule {

namespace {

using Coeffs = std::vector<long long>;

long long isqrt(long long n) {
  if (n <= 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

DivisorClass make_class(int k, const Coeffs& coeffs) {
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (long long c : coeffs) out.emplace_back(static_cast<long>(c));
  return DivisorClass(SurfaceModel::blowup(k), std::move(out));
}

void require_blowup(const DivisorClass& x, const char* what) {
  if (x.model().kind() != SurfaceKind::BlowupOfP2) {
    throw Error(ErrorCode::ModelMismatch, std::string(what) + " needs a class on a blow-up of P2, got " +
                                              x.model().name());
  }
}

// Fills b[pos..] so that the tail sums to `sum` with squares summing to
// `sumsq`. With `descending`, entries are non-negative and at most `cap`
// (the previous entry); otherwise each entry ranges over [-sqrt, sqrt].
void fill_tail(Coeffs& b, std::size_t pos, long long sum, long long sumsq, bool descending, long long cap,
               const std::function<void(const Coeffs&)>& emit) {
  const auto left = static_cast<long long>(b.size() - pos);
  if (left == 0) {
    if (sum == 0 && sumsq == 0) emit(b);
    return;
  }
  if (sumsq < 0 || sum * sum > left * sumsq) return;
  // b^2 and b agree mod 2, so the tail sums must share parity.
  if (((sum - sumsq) % 2) != 0) return;

  const long long reach = isqrt(sumsq);
  const long long hi = descending ? std::min(cap, reach) : reach;
  const long long lo = descending ? 0 : -reach;
  for (long long v = hi; v >= lo; --v) {
    b[pos] = v;
    fill_tail(b, pos + 1, sum - v, sumsq - v * v, descending, v, emit);
  }
}

std::vector<DivisorClass> sorted_classes(int k, std::vector<Coeffs> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<DivisorClass> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(make_class(k, r));
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_minus_one_classes(int k, std::optional<long> a_bound) {
  if (k < 1) throw Error(ErrorCode::UnsupportedK, "k must be at least 1, got " + std::to_string(k));
  if (k > kMaxFiniteBlowups && !a_bound) {
    throw Error(ErrorCode::UnboundedEnumeration,
                "infinitely many -1 classes for k = " + std::to_string(k) + " >= 9; supply an a-bound");
  }
  if (a_bound && (*a_bound < 0 || *a_bound > 1'000'000)) {
    throw Error(ErrorCode::PreconditionViolation, "a-bound must lie in [0, 10^6]");
  }

  // Any solution satisfies (9-k)a^2 - 6a + (1-k) <= 0. For k <= 8 this is a
  // bounded interval well inside [-64, 64].
  long long lo = -64, hi = 64;
  if (a_bound) {
    lo = -*a_bound;
    hi = *a_bound;
    if (k <= kMaxFiniteBlowups) {
      lo = std::max(lo, -64LL);
      hi = std::min(hi, 64LL);
    }
  }

  std::vector<Coeffs> rows;
  Coeffs b(static_cast<std::size_t>(k) + 1);
  for (long long a = lo; a <= hi; ++a) {
    if ((9 - k) * a * a - 6 * a + (1 - k) > 0) continue;
    b[0] = a;
    fill_tail(b, 1, 3 * a - 1, a * a + 1, false, 0, [&](const Coeffs& c) { rows.push_back(c); });
  }
  return sorted_classes(k, std::move(rows));
}

long fiber_a_bound(int k) {
  if (k < 1 || k > kMaxFiniteBlowups) {
    throw Error(ErrorCode::UnsupportedK, "fiber classes are finite only for 1 <= k <= 8");
  }
  long a = 1;
  while ((9 - k) * (a + 1) * (a + 1) - 12 * (a + 1) + 4 <= 0) ++a;
  return a;
}

FiberEnumeration enumerate_fiber_classes(int k, bool expand_permutations) {
  if (k == 0) {
    return {{}, "P2 has no square-zero fiber class; its minimal uniruled class is H (insertion count 1)"};
  }
  if (k < 0 || k > kMaxFiniteBlowups) {
    throw Error(ErrorCode::UnsupportedK, "fiber classes are enumerated only for 0 <= k <= 8 (the set is "
                                         "infinite for k >= 9), got k = " + std::to_string(k));
  }

  std::vector<Coeffs> reps;
  Coeffs row(static_cast<std::size_t>(k) + 1);
  const long amax = fiber_a_bound(k);
  for (long long a = 1; a <= amax; ++a) {
    row[0] = a;
    fill_tail(row, 1, 3 * a - 2, a * a, true, a, [&](const Coeffs& c) { reps.push_back(c); });
  }

  std::vector<Coeffs> rows;
  for (const auto& r : reps) {
    if (!expand_permutations) {
      rows.push_back(r);
      continue;
    }
    Coeffs tail(r.begin() + 1, r.end());
    std::sort(tail.begin(), tail.end());
    do {
      Coeffs full{r[0]};
      full.insert(full.end(), tail.begin(), tail.end());
      rows.push_back(std::move(full));
    } while (std::next_permutation(tail.begin(), tail.end()));
  }

  auto classes = sorted_classes(k, std::move(rows));
  // The equations force gcd | 2 and parity rules out 2; keep the check anyway
  // since primitivity is part of the definition.
  std::erase_if(classes, [](const DivisorClass& c) { return content(c) != 1; });
  return {std::move(classes), std::nullopt};
}

bool is_fiber_class(const DivisorClass& x) {
  if (x.model().kind() != SurfaceKind::BlowupOfP2) return false;
  Integer sum = 0, sumsq = 0;
  for (std::size_t i = 1; i < x.rank(); ++i) {
    if (x.b(i) < 0) return false;
    sum += x.b(i);
    sumsq += x.b(i) * x.b(i);
  }
  return x.a() >= 0 && x.a() * x.a() == sumsq && 3 * x.a() == sum + 2 && content(x) == 1;
}

namespace {

std::vector<Integer> padded_b(const DivisorClass& x) {
  std::vector<Integer> b(x.coeffs().begin() + 1, x.coeffs().end());
  while (b.size() < 3) b.emplace_back(0);
  return b;
}

}  // namespace

bool is_reduced(const DivisorClass& x) {
  require_blowup(x, "is_reduced");
  const auto b = padded_b(x);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) return false;
    if (i + 1 < b.size() && b[i] < b[i + 1]) return false;
  }
  return x.a() >= b[0] + b[1] + b[2];
}

CremonaReduction cremona_reduce(const DivisorClass& x) {
  require_blowup(x, "cremona_reduce");
  const int k = x.model().blowups();
  // Work on at least three exceptional slots; for k < 3 the extra slots must
  // come back to zero and moves are logged on the padded model.
  const int width = std::max(k, 3);
  const auto as_class = [](int slots, const Integer& a, const std::vector<Integer>& b) {
    std::vector<Integer> c{a};
    c.insert(c.end(), b.begin(), b.begin() + slots);
    return DivisorClass(SurfaceModel::blowup(slots), std::move(c));
  };

  Integer a = x.a();
  auto b = padded_b(x);
  CremonaReduction result{x, {}};
  while (true) {
    std::sort(b.begin(), b.end(), [](const Integer& l, const Integer& r) { return l > r; });
    const Integer top3 = b[0] + b[1] + b[2];
    if (a >= top3) {
      if (b.back() < 0) {
        throw Error(ErrorCode::NotReducible, to_table(x) + " keeps a negative coefficient that no Cremona move removes");
      }
      break;
    }
    if (a <= 0) throw Error(ErrorCode::NotReducible, to_table(x) + " reaches a <= 0 before becoming reduced");

    DivisorClass before = as_class(width, a, b);
    for (int i = 0; i < 3; ++i) b[i] = a - (top3 - b[i]);
    a = 2 * a - top3;
    result.moves.push_back({std::move(before), as_class(width, a, b)});
  }

  for (int i = k; i < width; ++i) {
    if (b[i] != 0) throw Error(ErrorCode::NotReducible, to_table(x) + " only reduces after adding blow-up points");
  }
  result.reduced = as_class(k, a, b);
  return result;
}

std::vector<std::pair<DivisorClass, DivisorClass>> decompose_fiber_class(const DivisorClass& x) {
  require_blowup(x, "decompose_fiber_class");
  const int k = x.model().blowups();
  if (k < 2 || k > kMaxFiniteBlowups) {
    throw Error(ErrorCode::PreconditionViolation,
                "decomposition needs 2 <= k <= 8 (k = 1 has a single -1 class), got k = " + std::to_string(k));
  }
  if (!is_fiber_class(x)) throw Error(ErrorCode::PreconditionViolation, to_table(x) + " is not a fiber class");

  const auto minus_one = enumerate_minus_one_classes(k);
  const std::set<DivisorClass> lookup(minus_one.begin(), minus_one.end());
  std::vector<std::pair<DivisorClass, DivisorClass>> pairs;
  for (const auto& p : minus_one) {
    DivisorClass q = x - p;
    if (p < q && lookup.contains(q) && pairing(p, q) == 1) pairs.emplace_back(p, std::move(q));
  }
  if (pairs.empty()) {
    throw Error(ErrorCode::NoDecomposition, to_table(x) + " has no decomposition into two -1 classes");
  }
  return pairs;
}

std::vector<DivisorClass> default_witnesses(int k) {
  auto witnesses = enumerate_minus_one_classes(k);
  std::vector<Integer> h(static_cast<std::size_t>(k) + 1, Integer(0));
  h[0] = 1;
  witnesses.emplace_back(SurfaceModel::blowup(k), std::move(h));
  return witnesses;
}

UniruledReport uniruled_necessary(const DivisorClass& x, const std::optional<std::vector<DivisorClass>>& witnesses) {
  std::vector<DivisorClass> pool;
  if (witnesses) {
    pool = *witnesses;
  } else {
    const auto& m = x.model();
    switch (m.kind()) {
      case SurfaceKind::BlowupOfP2:
        if (m.blowups() == 0) {
          pool.push_back(DivisorClass(m, {Integer(1)}));
        } else if (m.blowups() > kMaxFiniteBlowups) {
          throw Error(ErrorCode::PreconditionViolation, "no default witness list for k >= 9; pass witnesses");
        } else {
          pool = default_witnesses(m.blowups());
        }
        break;
      case SurfaceKind::ProductS2xS2:
      case SurfaceKind::TwistedS2xS2:
        pool = {DivisorClass(m, {Integer(1), Integer(0)}), DivisorClass(m, {Integer(0), Integer(1)})};
        break;
    }
  }

  UniruledReport report;
  report.c1_ok = c1_pairing(x) >= 2;
  report.square_ok = self_intersection(x) >= 0;
  for (const auto& w : pool) {
    if (pairing(x, w) < 0) report.violations.push_back(w);
  }
  report.pairing_ok = report.violations.empty();
  return report;
}

std::vector<DivisorClass> minimal_fiber_class(const SymplecticForm& form, int k) {
  if (k < 1 || k > kMaxFiniteBlowups) {
    throw Error(ErrorCode::UnsupportedK, "minimal fiber class needs 1 <= k <= 8, got k = " + std::to_string(k));
  }
  if (!(form.model() == SurfaceModel::blowup(k))) {
    throw Error(ErrorCode::ModelMismatch, "form lives on " + form.model().name() + ", expected k = " + std::to_string(k));
  }

  std::vector<DivisorClass> best;
  std::optional<Rational> best_area;
  for (auto& c : enumerate_fiber_classes(k, true).classes) {
    const Rational w = area(form, c);
    if (sgn(w) <= 0) continue;
    if (!best_area || w < *best_area) {
      best_area = w;
      best.clear();
    }
    if (w == *best_area) best.push_back(std::move(c));
  }
  if (best.empty()) {
    throw Error(ErrorCode::NoPositiveAreaFiberClass, "no fiber class has positive area under this form");
  }
  return best;
}

BundleMinimum minimal_uniruled_for_bundle(const SurfaceModel& model, const SymplecticForm& form) {
  if (model.kind() == SurfaceKind::BlowupOfP2) {
    throw Error(ErrorCode::ModelMismatch, "expected S2xS2 or S2~xS2, got " + model.name());
  }
  if (!(form.model() == model)) {
    throw Error(ErrorCode::ModelMismatch, "form lives on " + form.model().name() + ", not " + model.name());
  }
  const DivisorClass first(model, {Integer(1), Integer(0)});
  const DivisorClass second(model, {Integer(0), Integer(1)});
  if (model.kind() == SurfaceKind::TwistedS2xS2) return {first, {first}};

  const Rational a1 = area(form, first);
  const Rational a2 = area(form, second);
  if (a1 == a2) return {first, {first, second}};
  return a1 < a2 ? BundleMinimum{first, {first}} : BundleMinimum{second, {second}};
}

}  // namespace unirule
