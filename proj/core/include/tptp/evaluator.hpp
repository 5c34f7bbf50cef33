#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tptp/ast.hpp"
#include "tptp/interpretation.hpp"
#include "tptp/szs.hpp"

namespace tptp {

enum class Truth { True, False, Unknown };

const char* to_string(Truth t);

enum class GapReason {
  InfiniteQuantifier,
  MissingMapping,
  UnsupportedConstruct,
  NonExistingDesignation,
  MissingLocalWorld,
  RecursionLimit,
};

const char* to_string(GapReason r);

// Why a value could not be decided.
struct Gap {
  GapReason reason = GapReason::MissingMapping;
  std::string detail;
};

struct Verdict {
  Truth value = Truth::Unknown;
  std::optional<Gap> gap;  // set exactly when value is Unknown

  static Verdict of(bool b) { return Verdict{b ? Truth::True : Truth::False, std::nullopt}; }
  static Verdict unknown(GapReason r, std::string detail) { return Verdict{Truth::Unknown, Gap{r, std::move(detail)}}; }

  bool is_true() const { return value == Truth::True; }
  bool is_false() const { return value == Truth::False; }
  bool is_unknown() const { return value == Truth::Unknown; }
};

// "true", "false" or "unknown (Reason: detail)".
std::string describe(const Verdict& v);

// Variables map to values: domain elements, `$true`/`$false`, integers, or
// closed lambda terms. Later bindings shadow earlier ones.
struct Environment {
  std::vector<std::pair<std::string, ExprPtr>> bindings;
  std::optional<std::string> world;  // Kripke evaluation only

  const ExprPtr* lookup(const std::string& name) const;
  Environment bind(std::string name, ExprPtr value) const;
};

// The value of a term: a domain element (promotions removed), an integer,
// `$true`/`$false` for formulae, or a lambda. `value` is null when unknown.
struct TermValue {
  ExprPtr value;
  std::optional<Gap> gap;

  bool known() const { return value != nullptr; }
  ElementId key() const { return value ? element_key(value) : ElementId(); }
};

TermValue eval_term(const Term& t, const TarskianInterpretation& interp, const Environment& env = {});
Verdict eval_formula(const Formula& f, const TarskianInterpretation& interp, const Environment& env = {});

// Evaluates at world `w` of a finite Kripke interpretation. Quantifiers range
// over the elements that exist in the current world; modal operators move
// along positive accessibility pairs.
Verdict eval_at_world(const Formula& f, const KripkeInterpretation& k, const std::string& w,
                      const Environment& env = {});
// At the local world; unknown with MissingLocalWorld when there is none.
Verdict eval_at_local_world(const Formula& f, const KripkeInterpretation& k, const Environment& env = {});
// True at every world.
Verdict eval_globally(const Formula& f, const KripkeInterpretation& k, const Environment& env = {});

struct UnitVerdict {
  std::string name;
  Role role;
  bool obligation = false;  // the conjecture; everything else must hold
  std::string where;        // "", "all worlds" or a world name
  Verdict verdict;
};

struct ProblemEvaluation {
  std::vector<UnitVerdict> units;
  SzsStatus status = SzsStatus::GaveUp;
};

// Axiom-like units must be true and the conjecture, if any, is judged.
// Error: an axiom is false. GaveUp: some needed verdict is unknown.
// CounterSatisfiable: axioms true, conjecture false. Satisfiable otherwise.
// Under Kripke semantics axioms are global unless subroled local, the
// conjecture is local unless subroled global.
ProblemEvaluation eval_problem(const std::vector<AnnotatedFormula>& problem, const Interpretation& interp);

}  // namespace tptp
