#include "douady/error.hpp"

namespace douady {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MismatchedWeight: return "MismatchedWeight";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::MissingHodgeData: return "MissingHodgeData";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::ModeNonPositive: return "ModeNonPositive";
    case ErrorCode::WrongModel: return "WrongModel";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::SpectrumNotSplit: return "SpectrumNotSplit";
    case ErrorCode::NotInBidisk: return "NotInBidisk";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace douady
