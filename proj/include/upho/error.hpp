#ifndef UPHO_ERROR_HPP_
#define UPHO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace upho {

enum class ErrorCode {
  EmptyPoset,
  MalformedInput,
  EdgeRankSkip,
  DanglingVertex,
  DuplicateEdge,
  VertexNotFound,
  InsufficientDepth,
  NonUnitConstantTerm,
  ParseError,
  ScheduleInvalid,
  MissingEmbedding,
  WidthLimitExceeded,
  StructureError,
  InsufficientSeries,
  SizeMismatch,
  NotSymmetric,
  BudgetExceeded,
  IndexTooSmall,
  UnknownConstruction,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::EdgeRankSkip: return "EdgeRankSkip";
    case ErrorCode::DanglingVertex: return "DanglingVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::InsufficientDepth: return "InsufficientDepth";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ScheduleInvalid: return "ScheduleInvalid";
    case ErrorCode::MissingEmbedding: return "MissingEmbedding";
    case ErrorCode::WidthLimitExceeded: return "WidthLimitExceeded";
    case ErrorCode::StructureError: return "StructureError";
    case ErrorCode::InsufficientSeries: return "InsufficientSeries";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IndexTooSmall: return "IndexTooSmall";
    case ErrorCode::UnknownConstruction: return "UnknownConstruction";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace upho

#endif  // UPHO_ERROR_HPP_
