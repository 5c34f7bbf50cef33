#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tptp/ast.hpp"
#include "tptp/interpretation.hpp"

namespace tptp {

enum class ComponentKind {
  DomainEnumeration,
  Distinctness,
  Surjectivity,
  Injectivity,
  FunctionMapping,
  PredicateMapping,
  ElementClosure,
  WorldEnumeration,
  WorldDistinctness,
  AccessibilityLiteral,
  LocalWorldAssignment,
  InWorldWrapper,
  ElementExistence,  // `? [D: t] : D = e` inside a world
  Unclassified,
};

const char* to_string(ComponentKind k);

// Purely syntactic classification of one top-level conjunct. Type
// declarations are used only to recognize `$world` constants.
ComponentKind classify_component(const Formula& conjunct, const std::vector<TypeDeclaration>& type_decls);

struct ClassifiedComponent {
  Formula conjunct;
  ComponentKind kind = ComponentKind::Unclassified;
  std::string unit;  // name of the interpretation unit it came from
};

struct AssemblyReport {
  std::vector<ClassifiedComponent> classified;
  std::vector<ClassifiedComponent> unclassified;
  std::vector<Diagnostic> warnings;
};

// ConflictingEntry, UnknownElement, MissingWorld, NoInterpretation.
class AssemblyError : public std::runtime_error {
 public:
  explicit AssemblyError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

enum class Flavor { Auto, Tarskian, Kripke };

struct AssembleOptions {
  Flavor flavor = Flavor::Auto;
};

struct AssemblyResult {
  Interpretation interpretation;
  AssemblyReport report;
};

bool is_interpretation_unit(const AnnotatedFormula& u);
// True when the units use `$world`, `$in_world`, `$accessible_world`,
// `$local_world` or the worlds subrole.
bool looks_kripke(const std::vector<AnnotatedFormula>& units);

// Builds the interpretation from the interpretation units among `units`;
// type declarations and logic specifications are picked up as context,
// other units are ignored. Legacy fi_* roles are accepted as is.
// Throws AssemblyError.
AssemblyResult assemble(const std::vector<AnnotatedFormula>& units, const AssembleOptions& options = {});

// fi_domain -> interpretation-domains; fi_functors, fi_predicates ->
// interpretation-mappings. Everything else is returned unchanged.
std::vector<AnnotatedFormula> upgrade_legacy(const std::vector<AnnotatedFormula>& units);

}  // namespace tptp
