#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace douady {

enum class ErrorCode {
  MismatchedWeight,
  InvalidPartition,
  OrderMismatch,
  IndexOutOfRange,
  UnknownVariable,
  MissingHodgeData,
  InvalidSurface,
  UnknownClass,
  ModeNonPositive,
  WrongModel,
  NotCommuting,
  SpectrumNotSplit,
  NotInBidisk,
  ZeroScalar,
  DimensionMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace douady
