#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tptp/assemble.hpp"
#include "tptp/ast.hpp"
#include "tptp/evaluator.hpp"
#include "tptp/szs.hpp"

namespace tptp {

enum class Stage { Parse, TypeCheck, Structure, Validation, SatisfiabilityEmitted, ModelChecked };
enum class Outcome { Passed, Failed, NotCheckable, Emitted, GaveUp, Skipped };

const char* to_string(Stage s);
const char* to_string(Outcome o);

struct StageResult {
  Stage stage = Stage::Parse;
  Outcome outcome = Outcome::Passed;
  std::vector<Diagnostic> diagnostics;
};

struct CheckReport {
  std::vector<StageResult> stages;
  std::optional<SzsStatus> szs;                  // set by check_model
  std::optional<ProblemEvaluation> evaluation;   // when the model was checked by evaluation
  std::optional<Gap> gave_up;                    // why the model could not be checked
  std::vector<AnnotatedFormula> verification_problem;  // attached when giving up
  std::vector<AnnotatedFormula> satisfiability_problem;

  const StageResult* stage(Stage s) const;
  bool has_errors() const;
  std::vector<Diagnostic> diagnostics() const;
};

// Well-formedness of a model (plus any problem units given with it): symbol
// and type declarations, distinctness of domain elements, promotion
// bijections, world declarations and distinctness.
CheckReport check_structure(const std::vector<AnnotatedFormula>& units, const AssembleOptions& options = {});

// Structure checks, then evaluation of the problem in the model when every
// domain is finite. Infinite and Herbrand models give GaveUp together with a
// verification problem for an external prover.
CheckReport check_model(const std::vector<AnnotatedFormula>& problem, const std::vector<AnnotatedFormula>& model,
                        const AssembleOptions& options = {});

enum class VerificationFlavor { Tarskian, KripkeFoml };

struct VerificationProblem {
  std::vector<AnnotatedFormula> units;
  VerificationFlavor flavor = VerificationFlavor::Tarskian;
  std::optional<LogicSpecification> logic_header;

  std::size_t goal_count() const;
  std::string text() const;
};

// MissingLogicSpec.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

struct EmitOptions {
  bool conjoin_goals = false;  // one conjecture instead of one per obligation
  Flavor flavor = Flavor::Auto;
};

// Interpretation units become axioms; every problem axiom and the negated
// problem conjecture become separate conjectures.
VerificationProblem emit_verification_problem(const std::vector<AnnotatedFormula>& problem,
                                              const std::vector<AnnotatedFormula>& model,
                                              const EmitOptions& options = {});

// The `$$fomlModel` form: global axioms become conjecture-global, local
// axioms and the negated conjecture become conjecture-local. Throws
// VerificationError when the problem has no logic specification.
VerificationProblem emit_kripke_verification_problem(const std::vector<AnnotatedFormula>& problem,
                                                     const std::vector<AnnotatedFormula>& model,
                                                     const EmitOptions& options = {});

// Picks the Kripke form when the model looks Kripke (or the flavor says so).
VerificationProblem emit_for_model(const std::vector<AnnotatedFormula>& problem,
                                   const std::vector<AnnotatedFormula>& model, const EmitOptions& options = {});

// Interpretation units together with the problem axioms and negated
// conjecture, all as axioms, for a trusted model finder.
std::vector<AnnotatedFormula> emit_satisfiability_problem(const std::vector<AnnotatedFormula>& problem,
                                                          const std::vector<AnnotatedFormula>& model);

}  // namespace tptp
