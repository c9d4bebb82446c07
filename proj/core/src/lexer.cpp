#include "lexer.hpp"

namespace nihdl::detail {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_word_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; }
bool is_continuation_byte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& file) : text_(text), file_(file) {}

  LexResult run() {
    LexResult result;
    while (true) {
      skip_trivia();
      if (at_end()) {
        result.tokens.push_back(Token{TokenKind::End, "", line_, column_});
        return result;
      }
      auto token = next();
      if (!token) {
        result.error = error_;
        return result;
      }
      result.tokens.push_back(std::move(*token));
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if (!is_continuation_byte(c)) {
      ++column_;
    }
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::optional<Token> fail(const char* code, std::string message, int line, int column) {
    error_ = make_diagnostic(code, std::move(message), SourceLocation{file_, line, column});
    return std::nullopt;
  }

  // Length of a relation operand ([0-9]+ or a single n/m) starting at `at`.
  std::size_t operand_length(std::size_t at) const {
    std::size_t n = 0;
    while (at + n < text_.size() && is_word_char(text_[at + n])) ++n;
    if (n == 0) return 0;
    const auto piece = text_.substr(at, n);
    bool digits = true;
    for (char c : piece) digits = digits && is_digit(c);
    if (digits || piece == "n" || piece == "m") return n;
    return 0;
  }

  // Recognizes `a:b` where both sides are relation operands with no spaces.
  std::size_t ratio_length() const {
    const std::size_t left = operand_length(pos_);
    if (left == 0 || pos_ + left >= text_.size() || text_[pos_ + left] != ':') return 0;
    std::size_t right_start = pos_ + left + 1;
    std::size_t right = 0;
    while (right_start + right < text_.size() && is_word_char(text_[right_start + right])) {
      ++right;
    }
    if (right == 0) return 0;
    return left + 1 + right;
  }

  std::optional<Token> next() {
    const int line = line_;
    const int column = column_;
    const char c = peek();

    auto single = [&](TokenKind kind) {
      advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '{': return single(TokenKind::LBrace);
      case '}': return single(TokenKind::RBrace);
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case ':': return single(TokenKind::Colon);
      case ',': return single(TokenKind::Comma);
      case '"': return string_literal();
      default: break;
    }

    if (is_digit(c) || c == 'n' || c == 'm') {
      if (const std::size_t n = ratio_length(); n > 0) {
        std::string text(text_.substr(pos_, n));
        for (std::size_t i = 0; i < n; ++i) advance();
        return Token{TokenKind::Ratio, std::move(text), line, column};
      }
    }
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_digit(peek())) advance();
      if (!at_end() && is_word_char(peek())) {
        return fail("E001", "malformed number", line, column);
      }
      return Token{TokenKind::Integer, std::string(text_.substr(start, pos_ - start)), line,
                   column};
    }
    if (is_alpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && is_word_char(peek())) advance();
      return Token{TokenKind::Word, std::string(text_.substr(start, pos_ - start)), line,
                   column};
    }
    return fail("E001", "unexpected character", line, column);
  }

  std::optional<Token> string_literal() {
    const int line = line_;
    const int column = column_;
    advance();  // opening quote
    std::string value;
    while (true) {
      if (at_end() || peek() == '\n' || (peek() == '\r' && peek(1) == '\n')) {
        return fail("E002", "unterminated string", line, column);
      }
      const char c = peek();
      if (c == '"') {
        advance();
        return Token{TokenKind::String, std::move(value), line, column};
      }
      if (c == '\\') {
        const int esc_line = line_;
        const int esc_column = column_;
        advance();
        if (at_end()) return fail("E002", "unterminated string", line, column);
        const char e = peek();
        if (e != '"' && e != '\\') {
          return fail("E001", "invalid escape sequence in string", esc_line, esc_column);
        }
        value += e;
        advance();
        continue;
      }
      value += c;
      advance();
    }
  }

  std::string_view text_;
  const std::string& file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::optional<Diagnostic> error_;
};

}  // namespace

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::String: return "string";
    case TokenKind::Integer: return "integer";
    case TokenKind::Word: return "keyword";
    case TokenKind::Ratio: return "relation";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

LexResult tokenize(std::string_view text, const std::string& file_name) {
  return Lexer(text, file_name).run();
}

}  // namespace nihdl::detail
