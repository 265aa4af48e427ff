#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plru {

// Stable error codes. The names are part of the report/CLI surface.
enum class ErrorCode {
  malformed_function,
  domain_error,
  invalid_regulator,
  degenerate_input,
  condition_i_violated,
  refutation_not_guaranteed,
  strict_inclusion_not_witnessed,
  not_in_h,
  parse_error,
  name_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Lexical or syntax error in a DSL program. Positions are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

} // namespace plru
