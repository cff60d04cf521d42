#ifndef SUPERENGEL_ERRORS_HPP
#define SUPERENGEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superengel {

enum class ErrorCode {
  ZeroInverse,
  NotAField,
  RingMismatch,
  BudgetExceeded,
  CharTwoRejected,
  MissingPMap,
  NotRestricted,
  WrongCharacteristic,
  ModeMismatch,
  DimensionMismatch,
  VariableBudgetExceeded,
  ValidationFailed,
  OddCharacteristicRequired,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every library failure is reported through this one exception type; the
/// code lets callers (and the CLI exit-code mapping) dispatch on the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace superengel

#endif  // SUPERENGEL_ERRORS_HPP
