#pragma once

#include <string_view>
#include <vector>

#include "tptp/ast.hpp"
#include "tptp/diagnostics.hpp"

namespace tptp {

struct ParseResult {
  std::vector<AnnotatedFormula> units;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

// Parses a whole TPTP file. Each syntactically valid annotated formula yields
// one unit. After an error the parser skips to the next `language(` that
// starts a unit, so one bad unit never hides the rest of the file.
ParseResult parse_file(std::string_view text);

// Parses a single formula (no annotation), e.g. for command-line queries.
// Throws SyntaxError.
Formula parse_formula(std::string_view text);

// Parses a single annotated formula. Throws SyntaxError.
AnnotatedFormula parse_unit(std::string_view text);

// Parses a type expression such as `( human * cat ) > $o`. Throws SyntaxError.
TypePtr parse_type(std::string_view text);

}  // namespace tptp
