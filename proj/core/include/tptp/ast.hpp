#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tptp/diagnostics.hpp"
#include "tptp/role.hpp"

namespace tptp {

enum class Language { Cnf, Fof, Tff, Thf };

const char* to_string(Language l);
std::optional<Language> language_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Types (monomorphic only). A base type is a name; an arrow type maps one or
// more argument types (a product when more than one) to a result type.

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  std::string name;               // base types only
  std::vector<TypePtr> args;      // arrow types only, never empty
  TypePtr result;                 // arrow types only

  bool is_arrow() const { return result != nullptr; }
  // Number of arguments of the outermost arrow; 0 for base types.
  std::size_t arity() const { return is_arrow() ? args.size() : 0; }
  // Innermost result of curried arrows.
  const Type& final_result() const;
};

TypePtr make_base_type(std::string name);
TypePtr make_arrow_type(std::vector<TypePtr> args, TypePtr result);

bool operator==(const Type& a, const Type& b);
bool same_type(const TypePtr& a, const TypePtr& b);

// ---------------------------------------------------------------------------
// Expressions. Terms and formulae share one node type: TPTP's higher-order
// and extended forms put formulae in argument positions (`$in_world(w, f)`),
// so a single tree keeps parsing and printing uniform. Nodes are immutable
// and shared.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
using Formula = ExprPtr;
using Term = ExprPtr;

enum class ExprKind {
  Variable,        // text = name
  Apply,           // text = functor (plain, 'quoted', $defined or $$system); children = args
  DistinctObject,  // text = payload between the double quotes, escapes kept verbatim
  Number,          // text = literal
  Quantified,      // quantifier, vars, children[0] = body
  Not,             // children[0]
  Binary,          // connective, children = {lhs, rhs}
  Equality,        // negated for !=, children = {lhs, rhs}
  Modal,           // text = operator name without `$` (box, possible, ...), children[0] = body
  HoApply,         // THF `@`, children = {function, argument}
};

enum class Quantifier { Forall, Exists, Lambda };
enum class Connective { Or, And, Implies, ImpliedBy, Iff, Xor, Nor, Nand };

const char* to_string(Connective c);  // TPTP glyph
const char* to_string(Quantifier q);  // TPTP glyph

struct TypedVariable {
  std::string name;
  TypePtr type;  // null when untyped

  friend bool operator==(const TypedVariable& a, const TypedVariable& b) {
    return a.name == b.name && same_type(a.type, b.type);
  }
};

struct Expr {
  ExprKind kind = ExprKind::Apply;
  std::string text;
  std::vector<ExprPtr> children;
  std::vector<TypedVariable> vars;
  Quantifier quantifier = Quantifier::Forall;
  Connective connective = Connective::And;
  bool negated = false;

  const ExprPtr& lhs() const { return children.at(0); }
  const ExprPtr& rhs() const { return children.at(1); }
  const ExprPtr& body() const { return children.at(0); }
  const std::vector<ExprPtr>& args() const { return children; }

  bool is(ExprKind k) const { return kind == k; }
  bool is_constant() const { return kind == ExprKind::Apply && children.empty(); }
  bool is_apply_of(std::string_view functor) const { return kind == ExprKind::Apply && text == functor; }
  bool is_binary(Connective c) const { return kind == ExprKind::Binary && connective == c; }
  // Defined symbols start with `$` (including `$$` system symbols).
  bool is_defined() const { return kind == ExprKind::Apply && !text.empty() && text[0] == '$'; }
  bool is_term_like() const {
    return kind == ExprKind::Variable || kind == ExprKind::Apply || kind == ExprKind::DistinctObject ||
           kind == ExprKind::Number;
  }
};

ExprPtr make_variable(std::string name);
ExprPtr make_apply(std::string functor, std::vector<ExprPtr> args = {});
ExprPtr make_distinct_object(std::string payload);
ExprPtr make_number(std::string literal);
ExprPtr make_quantified(Quantifier q, std::vector<TypedVariable> vars, ExprPtr body);
ExprPtr make_not(ExprPtr body);
ExprPtr make_binary(Connective c, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_equality(ExprPtr lhs, ExprPtr rhs, bool negated = false);
ExprPtr make_modal(std::string op, ExprPtr body);
ExprPtr make_ho_apply(ExprPtr fn, ExprPtr arg);

ExprPtr make_true();
ExprPtr make_false();
// Left-associated conjunction; `$true` for an empty list.
ExprPtr make_conjunction(const std::vector<ExprPtr>& conjuncts);

// Deep structural equality (variable names matter).
bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

// Flattens nested `&` into its conjuncts, left to right.
void flatten_conjunction(const ExprPtr& e, std::vector<ExprPtr>& out);
std::vector<ExprPtr> conjuncts_of(const ExprPtr& e);

// Flattens a `|` chain into its disjuncts.
std::vector<ExprPtr> disjuncts_of(const ExprPtr& e);

// Views Apply nodes and THF `@` chains uniformly: `f(a,b)` and `f @ a @ b`
// both give head "f" and args {a, b}. Returns false when the head is not a
// plain (non-variable) symbol.
struct Spine {
  std::string head;
  std::vector<ExprPtr> args;
};
bool application_spine(const ExprPtr& e, Spine& out);

bool is_ground(const ExprPtr& e);
bool mentions_symbol(const ExprPtr& e, std::string_view functor);
// Substitutes free occurrences of variables; bound variables shadow.
ExprPtr substitute(const ExprPtr& e, const std::vector<std::pair<std::string, ExprPtr>>& bindings);

// ---------------------------------------------------------------------------
// Annotated formula bodies.

struct TypeDeclaration {
  std::string symbol;
  TypePtr type;

  bool declares_type() const { return type && !type->is_arrow() && type->name == "$tType"; }
  friend bool operator==(const TypeDeclaration& a, const TypeDeclaration& b) {
    return a.symbol == b.symbol && same_type(a.type, b.type);
  }
};

struct LogicSpecification {
  std::string name;  // name of the unit that carries it
  std::string raw;   // body text, verbatim

  bool is_foml_model() const { return raw == "$$fomlModel"; }
  friend bool operator==(const LogicSpecification& a, const LogicSpecification& b) { return a.raw == b.raw; }
};

using UnitBody = std::variant<Formula, TypeDeclaration, LogicSpecification>;

struct AnnotatedFormula {
  Language language = Language::Fof;
  std::string name;
  Role role;
  UnitBody body;
  std::optional<std::string> source;       // raw text, reprinted verbatim
  std::optional<std::string> useful_info;  // raw text, reprinted verbatim
  SourcePos pos;                           // not part of equality

  const Formula* formula() const { return std::get_if<Formula>(&body); }
  const TypeDeclaration* type_declaration() const { return std::get_if<TypeDeclaration>(&body); }
  const LogicSpecification* logic_specification() const { return std::get_if<LogicSpecification>(&body); }
};

bool operator==(const AnnotatedFormula& a, const AnnotatedFormula& b);

}  // namespace tptp
