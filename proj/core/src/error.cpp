#include "plat/error.hpp"

namespace plat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::NotStandardForm: return "NotStandardForm";
    case ErrorCode::AmbiguousLength: return "AmbiguousLength";
    case ErrorCode::EvenPlatUnsupported: return "EvenPlatUnsupported";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::NotAlmostVertical: return "NotAlmostVertical";
    case ErrorCode::ExtremeRegion: return "ExtremeRegion";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateFraction: return "DegenerateFraction";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::InvalidCensus: return "InvalidCensus";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

NotStandardFormError::NotStandardFormError(std::size_t letter_index,
                                           const std::string& detail)
    : Error(ErrorCode::NotStandardForm,
            detail + " (letter " + std::to_string(letter_index) + ")"),
      letter_index_(letter_index) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& detail)
    : Error(ErrorCode::SyntaxError,
            detail + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace plat
