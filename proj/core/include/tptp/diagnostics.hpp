#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tptp {

// 1-based line and column of the first character of a token.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool known() const { return line != 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { Error, Warning, Note };

const char* to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  // stable machine-readable name, e.g. "UnterminatedQuote"
  std::string message;
  SourcePos pos;

  bool is_error() const { return severity == Severity::Error; }
};

// "line:col: severity: [Code] message" (position omitted when unknown).
std::string format(const Diagnostic& d);
std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

// Thrown by the lexer and parser. Carries the diagnostic that describes it.
class SyntaxError : public std::runtime_error {
 public:
  explicit SyntaxError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace tptp
