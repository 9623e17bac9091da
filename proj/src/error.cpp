#include "chromsym/error.hpp"

namespace chromsym {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidComposition: return "InvalidComposition";
    case ErrorCode::UnequalWeight: return "UnequalWeight";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::OrderIncompatible: return "OrderIncompatible";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoAscent: return "NoAscent";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::LengthOne: return "LengthOne";
    case ErrorCode::IsPositive: return "IsPositive";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace chromsym
