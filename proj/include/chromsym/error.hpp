#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromsym {

enum class ErrorCode {
  InvalidPartition,
  InvalidComposition,
  UnequalWeight,
  EmptyPartition,
  CycleDetected,
  InvalidGraph,
  TooManyVertices,
  OrderIncompatible,
  SizeMismatch,
  NoAscent,
  CapExceeded,
  BadShape,
  LengthOne,
  IsPositive,
  NoWitness,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chromsym
