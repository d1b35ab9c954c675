#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nearby {

enum class ErrorCode {
  AmbientMismatch,
  ShapeMismatch,
  NotCompatible,
  NotContained,
  NotNilpotent,
  NotFiltered,
  InvalidFiltration,
  InconsistentGrading,
  BadSupport,
  NotPure,
  GradedKernelMismatch,
  Singular,
  Validation,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the library raises. Parse errors are the only class that is
// not an invariant violation; the CLI maps them to different exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_parse_error() const noexcept { return code_ == ErrorCode::Parse; }

 private:
  ErrorCode code_;
};

}  // namespace nearby
