#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tptp/diagnostics.hpp"

namespace tptp {

enum class TokenKind {
  LowerWord,
  UpperWord,
  DollarWord,        // $true, $int, $distinct
  DollarDollarWord,  // $$fomlModel
  SingleQuoted,      // 'text' (text keeps the quotes)
  DistinctObject,    // "text" (text is the payload without quotes)
  Number,
  ModalName,         // {$box}; text is the name without `$`
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  Tilde,
  Bang,
  Question,
  Vline,
  Ampersand,
  Implies,    // =>
  ImpliedBy,  // <=
  Iff,        // <=>
  Xor,        // <~>
  Nor,        // ~|
  Nand,       // ~&
  Equals,
  NotEquals,
  At,
  Caret,
  Greater,
  Star,
  Minus,
  Plus,
  Identical,  // ==
  Assign,     // :=
  Error,      // only produced in recovering mode
  End,
};

const char* to_string(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
  std::size_t offset = 0;  // byte offset of the first character
  std::size_t length = 0;  // bytes in the source
};

// Splits TPTP text into tokens, skipping whitespace and comments.
// Throws SyntaxError (UnterminatedQuote, IllegalCharacter) on the first
// lexical error.
std::vector<Token> tokenize(std::string_view text);

// As tokenize, but lexical errors become Error tokens plus a diagnostic, and
// scanning resumes after the offending character (or line, for quotes).
std::vector<Token> tokenize_recovering(std::string_view text, std::vector<Diagnostic>& diags);

}  // namespace tptp
