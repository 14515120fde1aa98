#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsgp {

enum class ErrorCode {
  InvalidArgument,
  EmptyInput,
  NonCoprime,
  TooLarge,
  IsTrivial,
  NotMaxGenerated,
  NotSymmetric,
  EmbeddingDimTooSmall,
  NotAGapSet,
  GapTooSmall,
  BadParameters,
  BoundTooLarge,
  UnknownProperty,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every library operation. The code is stable and
/// maps one-to-one onto the status values of the C interface.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace numsgp
