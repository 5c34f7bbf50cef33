#include "tptp/lexer.hpp"

#include <cctype>
#include <optional>

namespace tptp {

const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::LowerWord: return "lower word";
    case TokenKind::UpperWord: return "variable";
    case TokenKind::DollarWord: return "defined word";
    case TokenKind::DollarDollarWord: return "system word";
    case TokenKind::SingleQuoted: return "quoted atom";
    case TokenKind::DistinctObject: return "distinct object";
    case TokenKind::Number: return "number";
    case TokenKind::ModalName: return "modal operator";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Question: return "'?'";
    case TokenKind::Vline: return "'|'";
    case TokenKind::Ampersand: return "'&'";
    case TokenKind::Implies: return "'=>'";
    case TokenKind::ImpliedBy: return "'<='";
    case TokenKind::Iff: return "'<=>'";
    case TokenKind::Xor: return "'<~>'";
    case TokenKind::Nor: return "'~|'";
    case TokenKind::Nand: return "'~&'";
    case TokenKind::Equals: return "'='";
    case TokenKind::NotEquals: return "'!='";
    case TokenKind::At: return "'@'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Greater: return "'>'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Identical: return "'=='";
    case TokenKind::Assign: return "':='";
    case TokenKind::Error: return "invalid token";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : src_(text) {}

  // Returns the next token; End at end of input. Throws SyntaxError.
  Token next() {
    skip_layout();
    Token t;
    t.pos = {line_, col_};
    t.offset = i_;
    if (i_ >= src_.size()) {
      t.kind = TokenKind::End;
      return t;
    }
    scan(t);
    t.length = i_ - t.offset;
    return t;
  }

  // Skips past the current character after a lexical error.
  void skip_char() {
    if (i_ < src_.size()) advance();
  }
  void skip_line() {
    while (i_ < src_.size() && src_[i_] != '\n') advance();
  }

 private:
  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) advance();
  }

  [[noreturn]] void fail(const std::string& code, const std::string& msg, SourcePos pos) const {
    throw SyntaxError(Diagnostic{Severity::Error, code, msg, pos});
  }

  void skip_layout() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        skip_line();
      } else if (c == '/' && peek(1) == '*') {
        const SourcePos start{line_, col_};
        advance(2);
        while (i_ < src_.size() && !(src_[i_] == '*' && peek(1) == '/')) advance();
        if (i_ >= src_.size()) fail("UnterminatedComment", "block comment is not closed", start);
        advance(2);
      } else {
        break;
      }
    }
  }

  void scan_word(Token& t) {
    while (i_ < src_.size() && is_alnum(src_[i_])) advance();
    t.text = std::string(src_.substr(t.offset, i_ - t.offset));
  }

  void scan_quoted(Token& t, char quote) {
    const SourcePos start = t.pos;
    advance();  // opening quote
    std::string payload;
    while (true) {
      if (i_ >= src_.size() || src_[i_] == '\n')
        fail("UnterminatedQuote", std::string("missing closing ") + quote, start);
      const char c = src_[i_];
      if (c == '\\') {
        if (i_ + 1 >= src_.size()) fail("UnterminatedQuote", std::string("missing closing ") + quote, start);
        payload += c;
        payload += src_[i_ + 1];
        advance(2);
        continue;
      }
      if (c == quote) {
        advance();
        break;
      }
      payload += c;
      advance();
    }
    if (quote == '\'') {
      if (payload.empty()) fail("IllegalCharacter", "empty quoted atom", start);
      t.kind = TokenKind::SingleQuoted;
      t.text = "'" + payload + "'";
    } else {
      t.kind = TokenKind::DistinctObject;
      t.text = std::move(payload);
    }
  }

  void scan_digits() {
    while (i_ < src_.size() && is_digit(src_[i_])) advance();
  }

  void scan_number(Token& t) {
    if (peek() == '+' || peek() == '-') advance();
    scan_digits();
    if (peek() == '/' && is_digit(peek(1))) {
      advance();
      scan_digits();
    } else {
      if (peek() == '.' && is_digit(peek(1))) {
        advance();
        scan_digits();
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
        advance(2);
        scan_digits();
      }
    }
    t.kind = TokenKind::Number;
    t.text = std::string(src_.substr(t.offset, i_ - t.offset));
  }

  void punct(Token& t, TokenKind k, std::size_t n) {
    t.kind = k;
    t.text = std::string(src_.substr(i_, n));
    advance(n);
  }

  void scan(Token& t) {
    const char c = src_[i_];
    if (is_lower(c)) {
      t.kind = TokenKind::LowerWord;
      scan_word(t);
      return;
    }
    if (is_upper(c)) {
      t.kind = TokenKind::UpperWord;
      scan_word(t);
      return;
    }
    if (c == '$') {
      const bool sys = peek(1) == '$';
      const std::size_t start = sys ? 2 : 1;
      if (!is_alnum(peek(start))) fail("IllegalCharacter", "'$' must start a defined word", t.pos);
      advance(start);
      t.kind = sys ? TokenKind::DollarDollarWord : TokenKind::DollarWord;
      scan_word(t);
      return;
    }
    if (c == '\'' || c == '"') {
      scan_quoted(t, c);
      return;
    }
    if (is_digit(c) || ((c == '-' || c == '+') && is_digit(peek(1)))) {
      scan_number(t);
      return;
    }
    if (c == '{') {
      // Short-form modal operator {$name}
      std::size_t j = 1;
      while (std::isspace(static_cast<unsigned char>(peek(j)))) ++j;
      if (peek(j) == '$' && is_alnum(peek(j + 1))) {
        std::size_t k = j + 1;
        while (is_alnum(peek(k))) ++k;
        std::string name(src_.substr(i_ + j + 1, k - j - 1));
        while (std::isspace(static_cast<unsigned char>(peek(k)))) ++k;
        if (peek(k) == '}') {
          advance(k + 1);
          t.kind = TokenKind::ModalName;
          t.text = std::move(name);
          return;
        }
      }
      fail("IllegalCharacter", "'{' must open a modal operator such as {$box}", t.pos);
    }
    switch (c) {
      case '(': return punct(t, TokenKind::LParen, 1);
      case ')': return punct(t, TokenKind::RParen, 1);
      case '[': return punct(t, TokenKind::LBracket, 1);
      case ']': return punct(t, TokenKind::RBracket, 1);
      case ',': return punct(t, TokenKind::Comma, 1);
      case '.': return punct(t, TokenKind::Dot, 1);
      case '|': return punct(t, TokenKind::Vline, 1);
      case '&': return punct(t, TokenKind::Ampersand, 1);
      case '@': return punct(t, TokenKind::At, 1);
      case '^': return punct(t, TokenKind::Caret, 1);
      case '>': return punct(t, TokenKind::Greater, 1);
      case '*': return punct(t, TokenKind::Star, 1);
      case '?': return punct(t, TokenKind::Question, 1);
      case '-': return punct(t, TokenKind::Minus, 1);
      case '+': return punct(t, TokenKind::Plus, 1);
      case ':': return peek(1) == '=' ? punct(t, TokenKind::Assign, 2) : punct(t, TokenKind::Colon, 1);
      case '!': return peek(1) == '=' ? punct(t, TokenKind::NotEquals, 2) : punct(t, TokenKind::Bang, 1);
      case '~':
        if (peek(1) == '|') return punct(t, TokenKind::Nor, 2);
        if (peek(1) == '&') return punct(t, TokenKind::Nand, 2);
        return punct(t, TokenKind::Tilde, 1);
      case '=':
        if (peek(1) == '>') return punct(t, TokenKind::Implies, 2);
        if (peek(1) == '=') return punct(t, TokenKind::Identical, 2);
        return punct(t, TokenKind::Equals, 1);
      case '<':
        if (peek(1) == '=' && peek(2) == '>') return punct(t, TokenKind::Iff, 3);
        if (peek(1) == '~' && peek(2) == '>') return punct(t, TokenKind::Xor, 3);
        if (peek(1) == '=') return punct(t, TokenKind::ImpliedBy, 2);
        break;
      default:
        break;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte " + std::to_string(static_cast<unsigned char>(c))
                            : std::string("'") + c + "'";
    fail("IllegalCharacter", "unexpected character " + shown, t.pos);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  Lexer lx(text);
  std::vector<Token> out;
  while (true) {
    Token t = lx.next();
    if (t.kind == TokenKind::End) break;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Token> tokenize_recovering(std::string_view text, std::vector<Diagnostic>& diags) {
  Lexer lx(text);
  std::vector<Token> out;
  while (true) {
    try {
      Token t = lx.next();
      if (t.kind == TokenKind::End) break;
      out.push_back(std::move(t));
    } catch (const SyntaxError& e) {
      diags.push_back(e.diagnostic());
      Token bad;
      bad.kind = TokenKind::Error;
      bad.pos = e.diagnostic().pos;
      out.push_back(bad);
      if (e.diagnostic().code == "UnterminatedQuote")
        lx.skip_line();
      else if (e.diagnostic().code == "UnterminatedComment")
        break;
      else
        lx.skip_char();
    }
  }
  return out;
}

}  // namespace tptp
