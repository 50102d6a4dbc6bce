#include "rpphilb/error.hpp"

#include <utility>

namespace rpphilb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::BoxNotInDiagram: return "box-not-in-diagram";
    case ErrorCode::DiagramTooLarge: return "diagram-too-large";
    case ErrorCode::DiagramMismatch: return "diagram-mismatch";
    case ErrorCode::ZeroInput: return "zero-input";
    case ErrorCode::SearchTooLarge: return "search-too-large";
    case ErrorCode::NonMonicDivisor: return "non-monic-divisor";
    case ErrorCode::NoEliminableVariable: return "no-eliminable-variable";
    case ErrorCode::UnsupportedCurve: return "unsupported-curve";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::NonprimeModulus: return "nonprime-modulus";
    case ErrorCode::UnsupportedOption: return "unsupported-option";
    case ErrorCode::CorpusError: return "corpus-error";
  }
  return "unknown";
}

bool is_cap_error(ErrorCode code) noexcept {
  return code == ErrorCode::DiagramTooLarge || code == ErrorCode::SearchTooLarge ||
         code == ErrorCode::BudgetExceeded;
}

Error::Error(ErrorCode code, const std::string& message, std::string offending_input)
    : std::runtime_error(message), code_(code), offending_input_(std::move(offending_input)) {}

}  // namespace rpphilb
