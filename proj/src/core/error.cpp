#include "numsgp/error.hpp"

namespace numsgp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IsTrivial: return "IsTrivial";
    case ErrorCode::NotMaxGenerated: return "NotMaxGenerated";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EmbeddingDimTooSmall: return "EmbeddingDimTooSmall";
    case ErrorCode::NotAGapSet: return "NotAGapSet";
    case ErrorCode::GapTooSmall: return "GapTooSmall";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "Unknown";
}

}  // namespace numsgp
