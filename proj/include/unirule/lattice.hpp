#pragma once

// Second homology of the rational surfaces we work with: P^2 blown up in k
// points, S^2 x S^2, and the twisted bundle S^2 ~x S^2. Classes carry exact
// integer coefficients; symplectic form classes carry exact rationals.

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unirule/number.hpp"

namespace unirule {

enum class SurfaceKind { BlowupOfP2, ProductS2xS2, TwistedS2xS2 };

class SurfaceModel {
 public:
  /// P^2 # k(-P^2), basis (H, E_1..E_k). Any k >= 0 is accepted here;
  /// enumeration code applies its own limits.
  static SurfaceModel blowup(int k);
  /// S^2 x S^2, basis (A_1, A_2).
  static SurfaceModel product();
  /// Nontrivial S^2 bundle over S^2, basis (F_0, E) with F_0^2=0, F_0.E=1, E^2=-1.
  static SurfaceModel twisted();

  SurfaceKind kind() const { return kind_; }
  /// Number of exceptional classes; 0 for the bundle models.
  int blowups() const { return blowups_; }
  std::size_t rank() const;
  std::vector<std::string> basis_labels() const;
  /// Entry (i, j) of the intersection matrix.
  int intersection(std::size_t i, std::size_t j) const;
  std::string name() const;

  bool operator==(const SurfaceModel&) const = default;

 private:
  SurfaceModel(SurfaceKind kind, int blowups) : kind_(kind), blowups_(blowups) {}

  SurfaceKind kind_;
  int blowups_;
};

/// Integer class on a fixed basis. For blow-ups the vector (a; b_1..b_k)
/// stands for aH - sum b_i E_i, so b_i are the *negated* E_i coefficients.
class DivisorClass {
 public:
  DivisorClass(SurfaceModel model, std::vector<Integer> coeffs);

  /// Shorthand for BlowupOfP2(b.size()) classes.
  static DivisorClass blowup(long a, const std::vector<long>& b);

  const SurfaceModel& model() const { return model_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }

  /// Blow-up accessors: a is the H coefficient, b(i) for i in [1, k].
  const Integer& a() const { return coeffs_.front(); }
  const Integer& b(std::size_t i) const { return coeffs_.at(i); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass scaled(const Integer& factor) const;

  bool operator==(const DivisorClass& other) const;
  /// Lexicographic on the coefficient vector; models must agree.
  std::strong_ordering operator<=>(const DivisorClass& other) const;

 private:
  SurfaceModel model_;
  std::vector<Integer> coeffs_;
};

class SymplecticForm {
 public:
  /// Rejects non-positive coefficients with PreconditionViolation.
  SymplecticForm(SurfaceModel model, std::vector<Rational> coeffs);

  const SurfaceModel& model() const { return model_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

 private:
  SurfaceModel model_;
  std::vector<Rational> coeffs_;
};

Integer pairing(const DivisorClass& x, const DivisorClass& y);
Integer self_intersection(const DivisorClass& x);
/// First Chern class evaluated on x: 3a - sum b_i on blow-ups,
/// 2(c_1 + c_2) on S^2 x S^2, 2f + e on the twisted bundle.
Integer c1_pairing(const DivisorClass& x);
/// Symplectic area: the form vector paired with x through the intersection
/// matrix, i.e. u*a - sum v_i b_i on blow-ups.
Rational area(const SymplecticForm& form, const DivisorClass& x);

/// F_0 -> H - E_1, E -> E_1. Preserves pairing and c1.
DivisorClass twisted_to_blowup(const DivisorClass& x);

/// Greatest common divisor of all coefficients (0 for the zero class).
Integer content(const DivisorClass& x);

/// "a;b1,b2,...,bk" for blow-ups; plain comma list "c1,c2" otherwise.
std::string to_compact(const DivisorClass& x);
/// Table notation "(a|b1,...,bk)".
std::string to_table(const DivisorClass& x);

/// Accepts "(a|b1,...)" or "a;b1,..." and returns a BlowupOfP2(k) class,
/// k being the number of b entries.
DivisorClass parse_blowup_class(std::string_view text);

nlohmann::json to_json(const DivisorClass& x);
DivisorClass class_from_json(const nlohmann::json& j, const SurfaceModel& model);
nlohmann::json to_json(const SymplecticForm& form);
SymplecticForm form_from_json(const nlohmann::json& j, const SurfaceModel& model);

}  // namespace unirule
