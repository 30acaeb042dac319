#include "unirule/number.hpp"

#include <cctype>

#include "unirule/error.hpp"

namespace unirule {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::UnboundedEnumeration: return "UnboundedEnumeration";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ContextNotFinite: return "ContextNotFinite";
    case ErrorCode::VInfinite: return "VInfinite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingClassData: return "MissingClassData";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::NoPositiveAreaFiberClass: return "NoPositiveAreaFiberClass";
    case ErrorCode::NotSupAdmissible: return "NotSupAdmissible";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::CycleDetected: return "CycleDetected";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModelMismatch:
    case ErrorCode::UnsupportedK:
    case ErrorCode::UnboundedEnumeration:
    case ErrorCode::PreconditionViolation:
    case ErrorCode::ContextNotFinite:
    case ErrorCode::VInfinite:
      return ErrorCategory::Precondition;
    case ErrorCode::NoDecomposition:
    case ErrorCode::CycleDetected:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Data;
  }
}

int exit_status(ErrorCode code) {
  switch (error_category(code)) {
    case ErrorCategory::Precondition: return 2;
    case ErrorCategory::Data: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace unirule
