#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plat {

/// Every domain failure the library can raise. The names are part of the
/// CLI contract and are printed verbatim.
enum class ErrorCode {
  ShapeError,
  ParityError,
  SyntaxError,
  HypothesesNotMet,
  NotStandardForm,
  AmbiguousLength,
  EvenPlatUnsupported,
  NotASphere,
  NotAlmostVertical,
  ExtremeRegion,
  IndexOutOfRange,
  DegenerateFraction,
  EmptyDiagram,
  NotAKnot,
  InvalidCensus,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// NotStandardForm carries the offending letter index (0-based).
class NotStandardFormError : public Error {
 public:
  NotStandardFormError(std::size_t letter_index, const std::string& detail);
  std::size_t letter_index() const noexcept { return letter_index_; }

 private:
  std::size_t letter_index_;
};

/// SyntaxError carries a 0-based character offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& detail);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace plat
