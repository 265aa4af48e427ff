#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plru/dsl/ast.hpp"

namespace plru::dsl {

enum class TokenKind { identifier, keyword, integer, punct, end };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

/// Splits source into tokens; '#' starts a comment running to end of line.
/// Throws ParseError on a character outside the language.
std::vector<Token> tokenize(std::string_view source);

/// Grammar:
///   program := stmt*
///   stmt    := "let" IDENT "=" expr | query
///   query   := "eval" expr "at" RATIONAL | "norm" expr "wrt" expr
///            | "leq" expr expr | "in_ideal" expr "wrt" expr
///            | "ratio_bounds" tail | "verify" tail ["depth" INT]
///   tail    := ["rho" RATIONAL] ["alpha" RATIONAL]   (any order)
///   expr    := expr ("+"|"-") term | term
///   term    := RATIONAL "*" factor | factor
///   factor  := "max(" expr "," expr ")" | "min(" expr "," expr ")"
///            | "abs(" expr ")" | "pl" "[" point ("," point)* "]"
///            | "u" | "one" | IDENT | "(" expr ")"
///   point   := "(" RATIONAL "," RATIONAL ")"
///   RATIONAL:= INT | INT "/" POSINT      (INT may carry a leading "-")
Program parse(std::string_view source);

/// Parses a single expression spanning the whole input.
ExprRef parse_expression(std::string_view source);

/// Parses a whole-input rational literal such as "-3/4".
Rational parse_rational(std::string_view source);

/// Source text that parses back to an identical tree.
std::string to_source(const Expr& expr);
std::string to_source(const Statement& stmt);
std::string to_source(const Program& program);

} // namespace plru::dsl
