#pragma once

#include <stdexcept>
#include <string>

namespace graphex {

enum class ErrorCode {
  InvalidArgument,
  NonIntegrable,
  TruncationUnavailable,
  OutOfRange,
  EmptyGraph,
  NotDilatable,
  DegenerateBins,
  UnknownSuite,
  Config,
  Io,
};

const char* toString(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// the command-line layer can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(toString(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphex
