#pragma once

// Syntactic helpers shared by assembly, regraining, evaluation and checking.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tptp/assemble.hpp"
#include "tptp/ast.hpp"
#include "tptp/interpretation.hpp"

namespace tptp::detail {

// Strips leading universal quantifiers, appending their variables to `vars`.
ExprPtr strip_forall(const ExprPtr& e, std::vector<TypedVariable>* vars = nullptr);

bool is_var(const ExprPtr& e, std::string_view name);
// Printed type of a variable; `$i` when untyped.
std::string type_name(const TypedVariable& v);
std::string type_name(const TypePtr& t);

bool is_lambda(const ExprPtr& e);
// Atom with a non-defined head: `p`, `p(a)`, `p @ a`.
bool is_plain_atom(const ExprPtr& e);
std::string atom_head(const ExprPtr& e);

// Flattened argument and result types of a (possibly curried) signature:
// `(a * b) > c` and `a > b > c` both give {a, b} and c.
void flatten_signature(const TypePtr& t, std::vector<std::string>& args, std::string& result);

// What a top-level conjunct looks like, with the parts later stages need.
struct ComponentShape {
  ComponentKind kind = ComponentKind::Unclassified;
  std::vector<TypedVariable> vars;  // leading universal variables
  std::string type;                 // variable type of enumerations, closures, existence, injectivity
  std::string problem_type;         // surjectivity only
  std::string symbol;               // promotion function, mapping head guess, or world of $in_world
  std::string world_var;            // variable of `! [W: $world] : $in_world(W, ...)`
  ExprPtr body;                     // enumeration body, closure body, $in_world body
  std::vector<ExprPtr> terms;       // enumerated elements, $distinct arguments, existing element
  std::vector<std::pair<std::string, std::size_t>> constructors;  // element closures
  bool implied = false;             // distinctness stated by a quantified implication
};

ComponentShape analyze_component(const ExprPtr& conjunct, const std::set<std::string>& world_constants);

std::set<std::string> world_constants(const std::vector<TypeDeclaration>& decls);

}  // namespace tptp::detail

namespace tptp::detail {

// Promotion applications `d2cat(e)` / `d2cat @ e` are replaced by `e`.
ExprPtr strip_promotions(const ExprPtr& t, const TarskianInterpretation& interp);

// The domain a ground term denotes an element of, if it is one: an
// enumerated element, an integer of a `$int` domain, or a constructor term of
// a term-generated domain.
const DomainSpec* element_domain(const ExprPtr& t, const TarskianInterpretation& interp);

// Symbol whose mapping a mapping component defines, with element and
// promotion knowledge used to pick the side of an equality.
std::string mapping_symbol(const ExprPtr& conjunct, const TarskianInterpretation& interp);

// Grouping key of a domain component: the domain type it talks about.
std::string domain_key(const ComponentShape& shape, const TarskianInterpretation& interp);

}  // namespace tptp::detail
