#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsc {

enum class TokenKind { kIdentifier, kKeyword, kLiteral, kOperator, kPunctuation };

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int column = 1;
};

// Raised by both the lexer and the parser. `expected` lists what the parser
// would have accepted at the failure point (empty for lexical errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column, std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Reserved words of the accepted subset. `true`, `false` and `null` lex as
// literals.
const std::vector<std::string>& keywords();
const std::vector<std::string>& operators();
const std::vector<std::string>& punctuation();
bool is_keyword(std::string_view word);
bool is_primitive_type(std::string_view word);

// Splits source text into tokens. Whitespace and // and /* */ comments are
// consumed and not emitted.
std::vector<Token> tokenize(std::string_view text);

}  // namespace gsc
