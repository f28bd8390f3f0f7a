#include "trinomial/errors.hpp"

namespace trinomial {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NonIrreducible: return "NonIrreducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadGroup: return "BadGroup";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace trinomial
