#pragma once

#include <vector>

#include "tptp/lexer.hpp"
#include "tptp/role.hpp"

namespace tptp::detail {

// Builds a Role from the tokens between the name and formula commas.
// Throws SyntaxError (MalformedArgs, UnexpectedToken).
Role role_from_tokens(const std::vector<Token>& toks, SourcePos where, std::vector<Diagnostic>* warnings);

}  // namespace tptp::detail
