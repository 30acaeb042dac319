#pragma once

// Exceptional (-1) classes, fiber classes and Cremona reduction on
// P^2 # k(-P^2), plus the minimal-area searches used to pick a uniruled class.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unirule/lattice.hpp"

namespace unirule {

/// Largest k for which the -1 and fiber class sets are finite.
inline constexpr int kMaxFiniteBlowups = 8;

/// All classes with square -1 and c1 = 1 on BlowupOfP2(k), sorted
/// lexicographically by coefficient vector.
///
/// For k <= 8 the a-range comes from Cauchy-Schwarz, (3a-1)^2 <= k(a^2+1).
/// For k >= 9 the set is infinite and a_bound (|a| <= a_bound) is required,
/// otherwise UnboundedEnumeration is thrown. When given for k <= 8 the bound
/// only narrows the search.
std::vector<DivisorClass> enumerate_minus_one_classes(int k, std::optional<long> a_bound = std::nullopt);

struct FiberEnumeration {
  std::vector<DivisorClass> classes;
  /// Set for k = 0, where no fiber class exists but H is the minimal uniruled class.
  std::optional<std::string> note;
};

/// Largest a with (9-k)a^2 - 12a + 4 <= 0; an upper bound on the H
/// coefficient of any fiber class. Requires 1 <= k <= 8.
long fiber_a_bound(int k);

/// Fiber classes on BlowupOfP2(k): primitive, a, b_i >= 0, a^2 = sum b_i^2 and
/// 3a = sum b_i + 2. Without permutation expansion only descending
/// representatives are returned. k outside [0, 8] throws UnsupportedK.
FiberEnumeration enumerate_fiber_classes(int k, bool expand_permutations);

bool is_fiber_class(const DivisorClass& x);

/// b non-negative and non-increasing with a >= b_1 + b_2 + b_3 (missing b's
/// count as zero).
bool is_reduced(const DivisorClass& x);

struct CremonaMove {
  DivisorClass before;  // sorted, prior to the move
  DivisorClass after;   // result of the move, before re-sorting
};

struct CremonaReduction {
  DivisorClass reduced;
  std::vector<CremonaMove> moves;
};

/// Alternates descending sorts of b with the Cremona move
///   a -> 2a - b1 - b2 - b3,  b_i -> a - (b1 + b2 + b3 - b_i)  (i = 1, 2, 3)
/// until the class is reduced. No sign changes are applied. Throws
/// NotReducible if a drops to 0 or below first, or if the class is stuck
/// (negative b with a >= b1 + b2 + b3).
CremonaReduction cremona_reduce(const DivisorClass& x);

/// Unordered pairs {P, Q} of -1 classes with P + Q = x and P.Q = 1, each pair
/// stored with P < Q. Requires a fiber class with 2 <= k <= 8.
std::vector<std::pair<DivisorClass, DivisorClass>> decompose_fiber_class(const DivisorClass& x);

/// Necessary conditions for x to be uniruled: c1 >= 2, x^2 >= 0 and x.B >= 0
/// against every witness B.
struct UniruledReport {
  bool c1_ok = false;
  bool square_ok = false;
  bool pairing_ok = false;
  std::vector<DivisorClass> violations;

  bool passes() const { return c1_ok && square_ok && pairing_ok; }
};

/// Default witnesses (blow-ups with k <= 8 only): the -1 classes plus H.
std::vector<DivisorClass> default_witnesses(int k);

UniruledReport uniruled_necessary(const DivisorClass& x,
                                  const std::optional<std::vector<DivisorClass>>& witnesses = std::nullopt);

/// Fiber classes (all permutations) of least positive area under the form,
/// sorted. Throws NoPositiveAreaFiberClass when no fiber class has positive area.
std::vector<DivisorClass> minimal_fiber_class(const SymplecticForm& form, int k);

struct BundleMinimum {
  DivisorClass minimal;
  /// Every class attaining the minimum, in basis order; size 2 on a tie.
  std::vector<DivisorClass> ties;
};

/// Minimal uniruled class on an S^2 bundle over S^2: the smaller-area factor
/// on S^2 x S^2 (A_1 on a tie), F_0 on the twisted bundle regardless of form.
BundleMinimum minimal_uniruled_for_bundle(const SurfaceModel& model, const SymplecticForm& form);

}  // namespace unirule
