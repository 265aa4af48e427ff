#include "plru/error.hpp"

namespace plru {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::malformed_function: return "MalformedFunction";
  case ErrorCode::domain_error: return "DomainError";
  case ErrorCode::invalid_regulator: return "InvalidRegulator";
  case ErrorCode::degenerate_input: return "DegenerateInput";
  case ErrorCode::condition_i_violated: return "ConditionIViolated";
  case ErrorCode::refutation_not_guaranteed: return "RefutationNotGuaranteed";
  case ErrorCode::strict_inclusion_not_witnessed: return "StrictInclusionNotWitnessed";
  case ErrorCode::not_in_h: return "NotInH";
  case ErrorCode::parse_error: return "ParseError";
  case ErrorCode::name_error: return "NameError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, std::string token,
                       const std::string& message)
    : Error(ErrorCode::parse_error,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                (token.empty() ? std::string{} : " near '" + token + "'")),
      line_(line), column_(column), token_(std::move(token)) {}

} // namespace plru
