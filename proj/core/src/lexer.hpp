#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nihdl/diagnostic.hpp"

namespace nihdl::detail {

enum class TokenKind {
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Colon,
  Comma,
  String,   // text holds the unescaped value
  Integer,  // text holds the digits
  Word,     // bare keyword, including true/false
  Ratio,    // relation-like token such as 1:1 or n:m
  End,
};

std::string_view describe(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token on success
  std::optional<Diagnostic> error;
};

/// Tokenizes the whole input. Stops at the first lexical error (E001 for a
/// stray character or bad escape, E002 for an unterminated string).
LexResult tokenize(std::string_view text, const std::string& file_name);

}  // namespace nihdl::detail
