#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

enum class ErrorCode {
  ZeroWeight,
  InvalidMatrix,
  DuplicateEntries,
  PoleAtSamplePoint,
  ZeroBase,
  IndexOutOfRange,
  WrongFixedPointCount,
  WrongShape,
  InvalidSearchSpec,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every library failure is reported as an Error carrying a code that the CLI
/// maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rigid
