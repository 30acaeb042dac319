#include "unirule/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

#include "unirule/error.hpp"

namespace unirule {

SurfaceModel SurfaceModel::blowup(int k) {
  if (k < 0) throw Error(ErrorCode::PreconditionViolation, "negative number of blow-ups");
  return SurfaceModel(SurfaceKind::BlowupOfP2, k);
}

SurfaceModel SurfaceModel::product() { return SurfaceModel(SurfaceKind::ProductS2xS2, 0); }

SurfaceModel SurfaceModel::twisted() { return SurfaceModel(SurfaceKind::TwistedS2xS2, 0); }

std::size_t SurfaceModel::rank() const {
  return kind_ == SurfaceKind::BlowupOfP2 ? static_cast<std::size_t>(blowups_) + 1 : 2;
}

std::vector<std::string> SurfaceModel::basis_labels() const {
  switch (kind_) {
    case SurfaceKind::ProductS2xS2: return {"A1", "A2"};
    case SurfaceKind::TwistedS2xS2: return {"F0", "E"};
    case SurfaceKind::BlowupOfP2: break;
  }
  std::vector<std::string> labels{"H"};
  for (int i = 1; i <= blowups_; ++i) labels.push_back("E" + std::to_string(i));
  return labels;
}

int SurfaceModel::intersection(std::size_t i, std::size_t j) const {
  switch (kind_) {
    case SurfaceKind::BlowupOfP2:
      if (i != j) return 0;
      return i == 0 ? 1 : -1;
    case SurfaceKind::ProductS2xS2:
      return i == j ? 0 : 1;
    case SurfaceKind::TwistedS2xS2:
      if (i != j) return 1;
      return i == 0 ? 0 : -1;
  }
  return 0;
}

std::string SurfaceModel::name() const {
  switch (kind_) {
    case SurfaceKind::ProductS2xS2: return "S2xS2";
    case SurfaceKind::TwistedS2xS2: return "S2~xS2";
    case SurfaceKind::BlowupOfP2: break;
  }
  return "P2#" + std::to_string(blowups_) + "-P2";
}

namespace {

void require_same_model(const SurfaceModel& x, const SurfaceModel& y) {
  if (!(x == y)) throw Error(ErrorCode::ModelMismatch, x.name() + " vs " + y.name());
}

}  // namespace

DivisorClass::DivisorClass(SurfaceModel model, std::vector<Integer> coeffs)
    : model_(model), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != model_.rank()) {
    throw Error(ErrorCode::ModelMismatch, "class of rank " + std::to_string(coeffs_.size()) +
                                              " on " + model_.name());
  }
}

DivisorClass DivisorClass::blowup(long a, const std::vector<long>& b) {
  std::vector<Integer> coeffs{Integer(a)};
  for (long x : b) coeffs.emplace_back(x);
  return DivisorClass(SurfaceModel::blowup(static_cast<int>(b.size())), std::move(coeffs));
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_model(model_, other.model_);
  std::vector<Integer> sum(coeffs_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = coeffs_[i] + other.coeffs_[i];
  return DivisorClass(model_, std::move(sum));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass DivisorClass::operator-() const { return scaled(Integer(-1)); }

DivisorClass DivisorClass::scaled(const Integer& factor) const {
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * factor;
  return DivisorClass(model_, std::move(out));
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return model_ == other.model_ && coeffs_ == other.coeffs_;
}

std::strong_ordering DivisorClass::operator<=>(const DivisorClass& other) const {
  require_same_model(model_, other.model_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = cmp(coeffs_[i], other.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

SymplecticForm::SymplecticForm(SurfaceModel model, std::vector<Rational> coeffs)
    : model_(model), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != model_.rank()) {
    throw Error(ErrorCode::ModelMismatch, "form of rank " + std::to_string(coeffs_.size()) +
                                              " on " + model_.name());
  }
  for (auto& c : coeffs_) {
    c.canonicalize();
    if (sgn(c) <= 0) {
      throw Error(ErrorCode::PreconditionViolation,
                  "form coefficients must be positive, got " + to_string(c));
    }
  }
}

Integer pairing(const DivisorClass& x, const DivisorClass& y) {
  require_same_model(x.model(), y.model());
  const auto& m = x.model();
  Integer total = 0;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    for (std::size_t j = 0; j < y.rank(); ++j) {
      const int q = m.intersection(i, j);
      if (q != 0) total += q * x.coeffs()[i] * y.coeffs()[j];
    }
  }
  return total;
}

Integer self_intersection(const DivisorClass& x) { return pairing(x, x); }

Integer c1_pairing(const DivisorClass& x) {
  const auto& c = x.coeffs();
  switch (x.model().kind()) {
    case SurfaceKind::BlowupOfP2: {
      Integer total = 3 * c[0];
      for (std::size_t i = 1; i < c.size(); ++i) total -= c[i];
      return total;
    }
    case SurfaceKind::ProductS2xS2:
      return 2 * c[0] + 2 * c[1];
    case SurfaceKind::TwistedS2xS2:
      return 2 * c[0] + c[1];
  }
  return 0;
}

Rational area(const SymplecticForm& form, const DivisorClass& x) {
  require_same_model(form.model(), x.model());
  const auto& m = x.model();
  Rational total = 0;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    for (std::size_t j = 0; j < x.rank(); ++j) {
      const int q = m.intersection(i, j);
      if (q != 0) total += q * form.coeffs()[i] * Rational(x.coeffs()[j]);
    }
  }
  total.canonicalize();
  return total;
}

DivisorClass twisted_to_blowup(const DivisorClass& x) {
  if (x.model().kind() != SurfaceKind::TwistedS2xS2) {
    throw Error(ErrorCode::ModelMismatch, "expected a class on S2~xS2, got " + x.model().name());
  }
  // f F_0 + e E = f(H - E_1) + e E_1 = fH - (f - e)E_1.
  const Integer& f = x.coeffs()[0];
  const Integer& e = x.coeffs()[1];
  return DivisorClass(SurfaceModel::blowup(1), {f, f - e});
}

Integer content(const DivisorClass& x) {
  Integer g = 0;
  for (const auto& c : x.coeffs()) {
    Integer abs_c = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), abs_c.get_mpz_t());
  }
  return g;
}

std::string to_compact(const DivisorClass& x) {
  std::string out;
  const auto& c = x.coeffs();
  const bool blowup = x.model().kind() == SurfaceKind::BlowupOfP2;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += (blowup && i == 1) ? ";" : ",";
    out += c[i].get_str();
  }
  if (blowup && c.size() == 1) out += ";";
  return out;
}

std::string to_table(const DivisorClass& x) {
  std::string out = "(" + x.coeffs()[0].get_str() + "|";
  for (std::size_t i = 1; i < x.rank(); ++i) {
    if (i > 1) out += ",";
    out += x.coeffs()[i].get_str();
  }
  return out + ")";
}

namespace {

Integer parse_coefficient(std::string_view token, std::string_view whole) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  Rational r;
  try {
    r = parse_rational(token);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "bad coefficient in class '" + std::string(whole) + "'");
  }
  if (r.get_den() != 1 || token.find('/') != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "non-integer coefficient in class '" + std::string(whole) + "'");
  }
  return r.get_num();
}

}  // namespace

DivisorClass parse_blowup_class(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

  char separator = ';';
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parenthesis in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
    separator = '|';
  }
  const auto split = body.find(separator);
  if (split == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected '(a|b1,...)' or 'a;b1,...', got '" + std::string(text) + "'");
  }
  std::vector<Integer> coeffs{parse_coefficient(body.substr(0, split), text)};
  std::string_view rest = body.substr(split + 1);
  bool blank = rest.find_first_not_of(" \t") == std::string_view::npos;
  while (!blank) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_coefficient(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  const int k = static_cast<int>(coeffs.size()) - 1;
  return DivisorClass(SurfaceModel::blowup(k), std::move(coeffs));
}

nlohmann::json to_json(const DivisorClass& x) {
  auto arr = nlohmann::json::array();
  for (const auto& c : x.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      // Out of range for a JSON number; the string form is still parseable.
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

DivisorClass class_from_json(const nlohmann::json& j, const SurfaceModel& model) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "class must be a JSON array of integers");
  std::vector<Integer> coeffs;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(v.get<std::int64_t>()));
    } else if (v.is_string()) {
      coeffs.push_back(parse_coefficient(v.get<std::string>(), j.dump()));
    } else {
      throw Error(ErrorCode::ParseError, "class coefficient must be an integer: " + v.dump());
    }
  }
  return DivisorClass(model, std::move(coeffs));
}

nlohmann::json to_json(const SymplecticForm& form) {
  auto arr = nlohmann::json::array();
  for (const auto& c : form.coeffs()) arr.push_back(to_string(c));
  return arr;
}

SymplecticForm form_from_json(const nlohmann::json& j, const SurfaceModel& model) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "form must be a JSON array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& v : j) {
    if (v.is_string()) {
      coeffs.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(v.get<std::int64_t>()));
    } else {
      throw Error(ErrorCode::ParseError, "form coefficient must be a \"p/q\" string: " + v.dump());
    }
  }
  return SymplecticForm(model, std::move(coeffs));
}

}  // namespace unirule
