#pragma once

#include <string>
#include <vector>

#include "tptp/ast.hpp"

namespace tptp {

// Canonical text. Parenthesization is chosen so that parsing the output
// gives back an identical tree.
std::string print_expr(const ExprPtr& e);
std::string print_type(const TypePtr& t);
std::string print_type_declaration(const TypeDeclaration& d);
std::string print_unit(const AnnotatedFormula& u);
// Units separated by blank lines.
std::string print_units(const std::vector<AnnotatedFormula>& units);

}  // namespace tptp
