#include "gsc/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace gsc {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kLiteral: return "literal";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
  }
  return "?";
}

namespace {

std::string format_location(const std::string& message, int line, int column) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : std::runtime_error(format_location(message, line, column)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const std::vector<std::string>& keywords() {
  static const std::vector<std::string> k{
      "class",   "public", "private", "protected", "static", "final", "void",  "int",    "long",
      "double",  "float",  "boolean", "char",      "byte",   "short", "if",    "else",   "while",
      "for",     "return", "new",     "this",
  };
  return k;
}

const std::vector<std::string>& operators() {
  // Longest first so that greedy matching picks e.g. "+=" over "+".
  static const std::vector<std::string> ops{
      "==", "!=", "<=", ">=", "&&", "||", "+=", "-=", "*=", "/=", "%=", "++", "--",
      "=",  "+",  "-",  "*",  "/",  "%",  "<",  ">",  "!",
  };
  return ops;
}

const std::vector<std::string>& punctuation() {
  static const std::vector<std::string> p{"(", ")", "{", "}", ";", ",", "."};
  return p;
}

bool is_keyword(std::string_view word) {
  const auto& k = keywords();
  return std::find(k.begin(), k.end(), word) != k.end();
}

bool is_primitive_type(std::string_view word) {
  static const std::vector<std::string_view> p{"int", "long", "double", "float", "boolean", "char", "byte", "short"};
  return std::find(p.begin(), p.end(), word) != p.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1, column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      const int start_line = line, start_col = column;
      advance(2);
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) advance(1);
      if (i + 1 >= text.size()) throw ParseError("unterminated comment", start_line, start_col);
      advance(2);
      continue;
    }

    const int tok_line = line, tok_col = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_part(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      TokenKind kind = TokenKind::kIdentifier;
      if (word == "true" || word == "false" || word == "null") {
        kind = TokenKind::kLiteral;
      } else if (is_keyword(word)) {
        kind = TokenKind::kKeyword;
      }
      tokens.push_back({kind, std::move(word), tok_line, tok_col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < text.size() && (text[j] == 'L' || text[j] == 'l' || text[j] == 'd' || text[j] == 'f')) ++j;
      tokens.push_back({TokenKind::kLiteral, std::string(text.substr(i, j - i)), tok_line, tok_col});
      advance(j - i);
      continue;
    }
    if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != c && text[j] != '\n') {
        if (text[j] == '\\') ++j;
        ++j;
      }
      if (j >= text.size() || text[j] != c) {
        throw ParseError(c == '"' ? "unterminated string literal" : "unterminated character literal", tok_line,
                         tok_col);
      }
      tokens.push_back({TokenKind::kLiteral, std::string(text.substr(i, j + 1 - i)), tok_line, tok_col});
      advance(j + 1 - i);
      continue;
    }
    bool matched = false;
    for (const auto& op : operators()) {
      if (text.substr(i, op.size()) == op) {
        tokens.push_back({TokenKind::kOperator, op, tok_line, tok_col});
        advance(op.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& p : punctuation()) {
      if (text[i] == p[0]) {
        tokens.push_back({TokenKind::kPunctuation, p, tok_line, tok_col});
        advance(1);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw ParseError(std::string("unexpected character '") + c + "'", tok_line, tok_col);
  }
  return tokens;
}

}  // namespace gsc
