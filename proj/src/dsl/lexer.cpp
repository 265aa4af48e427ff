#include <array>
#include <cctype>

#include "plru/dsl/parser.hpp"
#include "plru/error.hpp"

namespace plru::dsl {

namespace {

constexpr std::array kKeywords = {"let", "eval", "at",  "norm", "wrt", "leq",
                                  "in_ideal", "max", "min", "abs", "pl", "u",
                                  "one", "ratio_bounds", "verify"};

bool is_keyword(std::string_view word) {
  for (std::string_view k : kKeywords)
    if (k == word) return true;
  return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, column};
    std::size_t j = i;
    if (ident_start(c)) {
      while (j < source.size() && ident_char(source[j])) ++j;
      std::string word(source.substr(i, j - i));
      const TokenKind kind = is_keyword(word) ? TokenKind::keyword : TokenKind::identifier;
      tokens.push_back({kind, std::move(word), pos});
    } else if (digit(c)) {
      while (j < source.size() && digit(source[j])) ++j;
      tokens.push_back({TokenKind::integer, std::string(source.substr(i, j - i)), pos});
    } else if (std::string_view("()[],+-*/=").find(c) != std::string_view::npos) {
      j = i + 1;
      tokens.push_back({TokenKind::punct, std::string(1, c), pos});
    } else {
      throw ParseError(line, column, std::string(1, c), "unexpected character");
    }
    advance(j - i);
  }
  tokens.push_back({TokenKind::end, "", SourcePos{line, column}});
  return tokens;
}

} // namespace plru::dsl
