#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unirule {

enum class ErrorCode {
  // Caller supplied something outside an operation's domain.
  ModelMismatch,
  UnsupportedK,
  UnboundedEnumeration,
  PreconditionViolation,
  ContextNotFinite,
  VInfinite,
  // Well-formed request, but the data does not admit an answer.
  ParseError,
  MissingClassData,
  NotReducible,
  NoPositiveAreaFiberClass,
  NotSupAdmissible,
  PosetMismatch,
  SingularDiagonal,
  InvalidCoefficient,
  // Should be unreachable; firing means a broken invariant in this library.
  NoDecomposition,
  CycleDetected,
};

enum class ErrorCategory { Precondition, Data, Internal };

std::string_view error_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

/// Process exit status for an error: 2 precondition, 3 data, 4 internal.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unirule
