#include "tptp/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "patterns.hpp"
#include "tptp/printer.hpp"

namespace tptp {

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Parse: return "parse";
    case Stage::TypeCheck: return "type_check";
    case Stage::Structure: return "structure";
    case Stage::Validation: return "validation";
    case Stage::SatisfiabilityEmitted: return "satisfiability_emitted";
    case Stage::ModelChecked: return "model_checked";
  }
  return "parse";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Passed: return "passed";
    case Outcome::Failed: return "failed";
    case Outcome::NotCheckable: return "not checkable";
    case Outcome::Emitted: return "emitted";
    case Outcome::GaveUp: return "gave up";
    case Outcome::Skipped: return "skipped";
  }
  return "passed";
}

const StageResult* CheckReport::stage(Stage s) const {
  for (const auto& r : stages)
    if (r.stage == s) return &r;
  return nullptr;
}

bool CheckReport::has_errors() const {
  return std::any_of(stages.begin(), stages.end(), [](const StageResult& r) { return tptp::has_errors(r.diagnostics); });
}

std::vector<Diagnostic> CheckReport::diagnostics() const {
  std::vector<Diagnostic> out;
  for (const auto& r : stages) out.insert(out.end(), r.diagnostics.begin(), r.diagnostics.end());
  return out;
}

VerificationError::VerificationError(Diagnostic d) : std::runtime_error(format(d)), diag_(std::move(d)) {}

namespace {

bool is_defined_type(const std::string& t) { return !t.empty() && t[0] == '$'; }

// Symbol and type declarations of typed units, checked against their uses.
class TypeChecker {
 public:
  explicit TypeChecker(const std::vector<AnnotatedFormula>& units) {
    for (const auto& u : units) {
      const auto* d = u.type_declaration();
      if (!d) continue;
      if (d->declares_type())
        types_.insert(d->symbol);
      else
        symbols_.emplace(d->symbol, d->type);
    }
  }

  std::vector<Diagnostic> run(const std::vector<AnnotatedFormula>& units) {
    for (const auto& u : units) {
      pos_ = u.pos;
      if (const auto* d = u.type_declaration()) {
        check_type(d->type);
        continue;
      }
      const Formula* f = u.formula();
      if (!f || u.language == Language::Fof || u.language == Language::Cnf) continue;
      std::vector<std::string> bound;
      walk(*f, bound);
    }
    return std::move(diags_);
  }

 private:
  void report(const std::string& code, const std::string& msg) {
    const bool dup = std::any_of(diags_.begin(), diags_.end(),
                                 [&](const Diagnostic& d) { return d.code == code && d.message == msg; });
    if (!dup) diags_.push_back(Diagnostic{Severity::Error, code, msg, pos_});
  }

  void check_type(const TypePtr& t) {
    if (!t) return;
    if (t->is_arrow()) {
      for (const auto& a : t->args) check_type(a);
      check_type(t->result);
      return;
    }
    if (!is_defined_type(t->name) && !types_.count(t->name))
      report("UndeclaredType", "type " + t->name + " is not declared");
  }

  void check_symbol(const std::string& sym, std::size_t nargs, bool curried) {
    if (sym.empty() || sym[0] == '$') return;
    auto it = symbols_.find(sym);
    if (it == symbols_.end()) {
      report("UndeclaredSymbol", "symbol " + sym + " has no type declaration");
      return;
    }
    std::vector<std::string> args;
    std::string result;
    detail::flatten_signature(it->second, args, result);
    const bool bad = curried ? nargs > args.size() : (nargs > 0 && nargs != args.size());
    if (bad)
      report("ArityMismatch", sym + " is declared with " + std::to_string(args.size()) + " argument(s) but applied to " +
                                  std::to_string(nargs));
  }

  void walk(const ExprPtr& e, std::vector<std::string>& bound) {
    switch (e->kind) {
      case ExprKind::Quantified: {
        for (const auto& v : e->vars) {
          check_type(v.type);
          bound.push_back(v.name);
        }
        walk(e->body(), bound);
        bound.resize(bound.size() - e->vars.size());
        return;
      }
      case ExprKind::Apply:
        check_symbol(e->text, e->children.size(), false);
        break;
      case ExprKind::HoApply: {
        Spine s;
        if (application_spine(e, s)) {
          check_symbol(s.head, s.args.size(), true);
          for (const auto& a : s.args) walk(a, bound);
          return;
        }
        break;
      }
      default:
        break;
    }
    for (const auto& c : e->children) walk(c, bound);
  }

  std::set<std::string> types_;
  std::map<std::string, TypePtr> symbols_;
  std::vector<Diagnostic> diags_;
  SourcePos pos_;
};

void add_unique(std::vector<Diagnostic>& into, Diagnostic d) {
  const bool dup = std::any_of(into.begin(), into.end(),
                               [&](const Diagnostic& x) { return x.code == d.code && x.message == d.message; });
  if (!dup) into.push_back(std::move(d));
}

void check_domains(const TarskianInterpretation& t, std::vector<Diagnostic>& out) {
  for (const auto& d : t.domains) {
    if (d.is_finite() && d.elements.size() > 1 && !d.fully_distinct())
      add_unique(out, Diagnostic{Severity::Warning, "DistinctnessUnstated",
                                 "elements of domain " + d.domain_type + " are not all stated to be distinct", {}});
    if (d.promotion) {
      const std::string& f = d.promotion->function_symbol;
      if (!d.promotion->surjectivity)
        add_unique(out, Diagnostic{Severity::Error, "PromotionNotSurjective",
                                   "no formula makes " + f + " a surjection onto " + d.problem_type, {}});
      if (!d.promotion->injectivity)
        add_unique(out, Diagnostic{Severity::Error, "PromotionNotInjective",
                                   "no formula makes " + f + " an injection from " + d.domain_type, {}});
    }
  }
}

void check_kripke(const KripkeInterpretation& k, std::vector<Diagnostic>& out) {
  std::set<std::string> typed;
  for (const auto& d : k.type_decls)
    if (d.type && !d.type->is_arrow() && d.type->name == "$world") typed.insert(d.symbol);
  for (const auto& w : k.worlds)
    if (!typed.count(w))
      out.push_back(Diagnostic{Severity::Error, "WorldNotTyped", "world " + w + " is not declared of type $world", {}});
  if (k.worlds.size() > 1 && !k.worlds_distinct())
    out.push_back(Diagnostic{Severity::Error, "WorldsNotDistinct",
                             "the worlds are not all stated to be distinct (use $distinct or inequalities)", {}});
  std::size_t unspecified = 0;
  for (const auto& a : k.worlds)
    for (const auto& b : k.worlds)
      if (!k.accessible.count({a, b}) && !k.inaccessible.count({a, b})) ++unspecified;
  if (unspecified)
    out.push_back(Diagnostic{Severity::Note, "AccessibilityUnspecified",
                             std::to_string(unspecified) + " world pair(s) are neither asserted nor denied accessible; "
                                                           "they are taken as not accessible",
                             {}});
  for (const auto& w : k.worlds) check_domains(k.per_world.at(w).tarskian, out);
}

bool outcome_ok(const std::vector<Diagnostic>& d) { return !has_errors(d); }

struct Structure {
  std::optional<AssemblyResult> assembled;
};

Structure structure_stages(const std::vector<AnnotatedFormula>& units, const AssembleOptions& options,
                           CheckReport& report) {
  report.stages.push_back(StageResult{Stage::Parse, Outcome::Passed, {}});
  auto types = TypeChecker(units).run(units);
  report.stages.push_back(StageResult{Stage::TypeCheck, outcome_ok(types) ? Outcome::Passed : Outcome::Failed, types});

  Structure s;
  StageResult st{Stage::Structure, Outcome::Passed, {}};
  try {
    s.assembled = assemble(units, options);
    st.diagnostics = s.assembled->report.warnings;
    if (const auto* k = std::get_if<KripkeInterpretation>(&s.assembled->interpretation))
      check_kripke(*k, st.diagnostics);
    else
      check_domains(std::get<TarskianInterpretation>(s.assembled->interpretation), st.diagnostics);
  } catch (const AssemblyError& e) {
    st.diagnostics.push_back(e.diagnostic());
  }
  st.outcome = outcome_ok(st.diagnostics) ? Outcome::Passed : Outcome::Failed;
  report.stages.push_back(std::move(st));
  return s;
}

bool all_finite(const Interpretation& i) {
  if (const auto* t = std::get_if<TarskianInterpretation>(&i)) return t->all_finite();
  const auto& k = std::get<KripkeInterpretation>(i);
  return std::all_of(k.per_world.begin(), k.per_world.end(),
                     [](const auto& w) { return w.second.tarskian.all_finite(); });
}

bool is_herbrand(const Interpretation& i) {
  const auto* t = std::get_if<TarskianInterpretation>(&i);
  return t && t->herbrand;
}

// ---------------------------------------------------------------------------
// Problem emission

void free_variables(const ExprPtr& e, std::vector<std::string>& bound, std::vector<std::string>& out) {
  if (e->is(ExprKind::Variable)) {
    if (std::find(bound.begin(), bound.end(), e->text) == bound.end() &&
        std::find(out.begin(), out.end(), e->text) == out.end())
      out.push_back(e->text);
    return;
  }
  if (e->is(ExprKind::Quantified)) {
    for (const auto& v : e->vars) bound.push_back(v.name);
    free_variables(e->body(), bound, out);
    bound.resize(bound.size() - e->vars.size());
    return;
  }
  for (const auto& c : e->children) free_variables(c, bound, out);
}

// Clauses are written as universally closed FOF so they can be conjectures.
AnnotatedFormula as_closed(const AnnotatedFormula& u) {
  AnnotatedFormula out = u;
  if (u.language != Language::Cnf) return out;
  out.language = Language::Fof;
  std::vector<std::string> bound;
  std::vector<std::string> free;
  free_variables(*u.formula(), bound, free);
  if (!free.empty()) {
    std::vector<TypedVariable> vars;
    for (const auto& v : free) vars.push_back(TypedVariable{v, nullptr});
    out.body = make_quantified(Quantifier::Forall, std::move(vars), *u.formula());
  }
  return out;
}

AnnotatedFormula with_role(AnnotatedFormula u, Role r) {
  u.role = std::move(r);
  u.source.reset();
  u.useful_info.reset();
  return u;
}

class Emitter {
 public:
  void add(AnnotatedFormula u) {
    std::string name = u.name;
    for (int n = 2; names_.count(name); ++n) name = u.name + "_" + std::to_string(n);
    names_.insert(name);
    u.name = name;
    units_.push_back(std::move(u));
  }

  // Declarations of both files, identical repeats dropped.
  void add_declarations(const std::vector<AnnotatedFormula>& a, const std::vector<AnnotatedFormula>& b) {
    for (const auto* src : {&a, &b})
      for (const auto& u : *src) {
        const auto* d = u.type_declaration();
        if (!d) continue;
        const std::string key = print_type_declaration(*d);
        if (decls_.insert(key).second) add(with_role(u, Role(RoleBase::Type)));
      }
  }

  std::vector<AnnotatedFormula> take() { return std::move(units_); }

 private:
  std::vector<AnnotatedFormula> units_;
  std::set<std::string> names_;
  std::set<std::string> decls_;
};

bool is_problem_formula(const AnnotatedFormula& u) {
  return u.formula() && !u.role.is_interpretation() && !u.role.is_legacy_interpretation() &&
         (u.role.is(RoleBase::Conjecture) || u.role.is_axiom_like());
}

AnnotatedFormula negated(const AnnotatedFormula& conjecture) {
  AnnotatedFormula out = as_closed(conjecture);
  out.body = make_not(*out.formula());
  return out;
}

Language widest(const std::vector<AnnotatedFormula>& units) {
  Language l = Language::Fof;
  for (const auto& u : units) {
    if (u.language == Language::Thf) return Language::Thf;
    if (u.language == Language::Tff) l = Language::Tff;
  }
  return l;
}

// Replaces the conjectures by one conjecture of their conjunction.
void conjoin(std::vector<AnnotatedFormula>& units, Role role) {
  std::vector<ExprPtr> goals;
  std::vector<AnnotatedFormula> goal_units;
  std::vector<AnnotatedFormula> kept;
  for (auto& u : units) {
    if (u.role.is(RoleBase::Conjecture)) {
      goals.push_back(*u.formula());
      goal_units.push_back(u);
    } else {
      kept.push_back(std::move(u));
    }
  }
  if (goals.empty()) {
    units = std::move(kept);
    return;
  }
  AnnotatedFormula g;
  g.language = widest(goal_units);
  g.name = "verification_goals";
  g.role = std::move(role);
  g.body = make_conjunction(goals);
  kept.push_back(std::move(g));
  units = std::move(kept);
}

}  // namespace

CheckReport check_structure(const std::vector<AnnotatedFormula>& units, const AssembleOptions& options) {
  CheckReport report;
  structure_stages(units, options, report);
  return report;
}

namespace {

std::vector<std::pair<Formula, Verdict>> constraint_verdicts(const Interpretation& interp) {
  std::vector<std::pair<Formula, Verdict>> out;
  if (const auto* t = std::get_if<TarskianInterpretation>(&interp)) {
    for (const auto& c : t->constraints) out.emplace_back(c, eval_formula(c, *t));
    return out;
  }
  const auto& k = std::get<KripkeInterpretation>(interp);
  for (const auto& c : k.constraints) out.emplace_back(c, eval_globally(c, k));
  for (const auto& [w, state] : k.per_world)
    for (const auto& c : state.tarskian.constraints) out.emplace_back(c, eval_at_world(c, k, w));
  return out;
}

}  // namespace

CheckReport check_model(const std::vector<AnnotatedFormula>& problem, const std::vector<AnnotatedFormula>& model,
                        const AssembleOptions& options) {
  CheckReport report;
  std::vector<AnnotatedFormula> all = problem;
  all.insert(all.end(), model.begin(), model.end());
  Structure s = structure_stages(all, options, report);

  report.stages.push_back(StageResult{
      Stage::Validation,
      Outcome::NotCheckable,
      {Diagnostic{Severity::Note, "NotCheckable",
                  "whether the formulae represent the model the finder built needs insight into the finder", {}}}});

  report.satisfiability_problem = emit_satisfiability_problem(problem, model);
  report.stages.push_back(StageResult{Stage::SatisfiabilityEmitted, Outcome::Emitted, {}});

  if (report.has_errors() || !s.assembled) {
    report.stages.push_back(StageResult{Stage::ModelChecked, Outcome::Skipped, {}});
    report.szs = SzsStatus::Error;
    return report;
  }
  const Interpretation& interp = s.assembled->interpretation;
  auto give_up = [&](GapReason r, const std::string& why) {
    report.gave_up = Gap{r, why};
    report.szs = SzsStatus::GaveUp;
    try {
      EmitOptions eo;
      eo.flavor = options.flavor;
      report.verification_problem = emit_for_model(problem, model, eo).units;
    } catch (const VerificationError& e) {
      report.stages.back().diagnostics.push_back(e.diagnostic());
    }
  };
  if (is_herbrand(interp)) {
    report.stages.push_back(StageResult{Stage::ModelChecked, Outcome::GaveUp, {}});
    give_up(GapReason::UnsupportedConstruct, "Herbrand interpretation-formulae are not evaluated directly");
    return report;
  }
  if (!all_finite(interp)) {
    report.stages.push_back(StageResult{Stage::ModelChecked, Outcome::GaveUp, {}});
    give_up(GapReason::InfiniteQuantifier, "the model has an infinite domain");
    return report;
  }
  // Conjuncts kept as general constraints are claims about the model too.
  for (const auto& [c, v] : constraint_verdicts(interp)) {
    if (v.is_false()) {
      report.stages.push_back(StageResult{
          Stage::ModelChecked,
          Outcome::Failed,
          {Diagnostic{Severity::Error, "ConstraintViolated", "false in the assembled model: " + print_expr(c), {}}}});
      report.szs = SzsStatus::Error;
      return report;
    }
  }
  for (const auto& [c, v] : constraint_verdicts(interp)) {
    if (v.is_unknown()) {
      report.stages.push_back(StageResult{Stage::ModelChecked, Outcome::GaveUp, {}});
      give_up(v.gap->reason, "constraint " + print_expr(c) + ": " + v.gap->detail);
      return report;
    }
  }

  ProblemEvaluation ev = eval_problem(problem, interp);
  report.szs = ev.status;
  const bool undecided = ev.status == SzsStatus::GaveUp;
  report.stages.push_back(StageResult{Stage::ModelChecked, undecided ? Outcome::GaveUp : Outcome::Passed, {}});
  if (undecided) {
    for (const auto& u : ev.units)
      if (u.verdict.is_unknown()) {
        give_up(u.verdict.gap->reason, u.name + ": " + u.verdict.gap->detail);
        break;
      }
  }
  report.evaluation = std::move(ev);
  return report;
}

std::size_t VerificationProblem::goal_count() const {
  return static_cast<std::size_t>(
      std::count_if(units.begin(), units.end(), [](const AnnotatedFormula& u) { return u.role.is(RoleBase::Conjecture); }));
}

std::string VerificationProblem::text() const { return print_units(units) + "\n"; }

VerificationProblem emit_verification_problem(const std::vector<AnnotatedFormula>& problem,
                                              const std::vector<AnnotatedFormula>& model, const EmitOptions& options) {
  Emitter em;
  em.add_declarations(problem, model);
  std::optional<LogicSpecification> logic;
  for (const auto* src : {&problem, &model})
    for (const auto& u : *src)
      if (const auto* l = u.logic_specification(); l && !logic) {
        logic = *l;
        em.add(u);
      }
  for (const auto& u : model)
    if (is_interpretation_unit(u)) em.add(with_role(u, Role(RoleBase::Axiom)));
  for (const auto& u : problem) {
    if (!is_problem_formula(u)) continue;
    if (u.role.is(RoleBase::Conjecture))
      em.add(with_role(negated(u), Role(RoleBase::Conjecture)));
    else
      em.add(with_role(as_closed(u), Role(RoleBase::Conjecture)));
  }
  VerificationProblem vp;
  vp.units = em.take();
  vp.logic_header = logic;
  if (options.conjoin_goals) conjoin(vp.units, Role(RoleBase::Conjecture));
  return vp;
}

VerificationProblem emit_kripke_verification_problem(const std::vector<AnnotatedFormula>& problem,
                                                     const std::vector<AnnotatedFormula>& model,
                                                     const EmitOptions& options) {
  const auto has_logic = std::any_of(problem.begin(), problem.end(),
                                     [](const AnnotatedFormula& u) { return u.logic_specification() != nullptr; });
  if (!has_logic)
    throw VerificationError(Diagnostic{Severity::Error, "MissingLogicSpec",
                                       "the problem has no logic specification; a Kripke verification problem needs one",
                                       {}});
  Emitter em;
  AnnotatedFormula header;
  header.language = Language::Tff;
  header.name = "foml_model";
  header.role = Role(RoleBase::Logic);
  header.body = LogicSpecification{"foml_model", "$$fomlModel"};
  em.add(header);
  em.add_declarations(problem, model);
  for (const auto& u : model)
    if (is_interpretation_unit(u)) em.add(with_role(u, Role(RoleBase::Axiom)));
  for (const auto& u : problem) {
    if (!is_problem_formula(u)) continue;
    if (u.role.is(RoleBase::Conjecture)) {
      em.add(with_role(negated(u), Role(RoleBase::Conjecture, Subrole::Local)));
      continue;
    }
    const bool local = u.role.subrole == Subrole::Local;
    em.add(with_role(as_closed(u), Role(RoleBase::Conjecture, local ? Subrole::Local : Subrole::Global)));
  }
  VerificationProblem vp;
  vp.units = em.take();
  vp.flavor = VerificationFlavor::KripkeFoml;
  vp.logic_header = LogicSpecification{"foml_model", "$$fomlModel"};
  if (options.conjoin_goals) {
    // One global conjecture cannot carry local obligations, so the local
    // ones are conjoined separately from the global ones.
    std::vector<AnnotatedFormula> rest;
    std::vector<ExprPtr> global;
    std::vector<ExprPtr> local;
    for (auto& u : vp.units) {
      if (!u.role.is(RoleBase::Conjecture)) {
        rest.push_back(std::move(u));
        continue;
      }
      (u.role.subrole == Subrole::Global ? global : local).push_back(*u.formula());
    }
    auto goal = [&](const char* name, Subrole sr, const std::vector<ExprPtr>& fs) {
      if (fs.empty()) return;
      AnnotatedFormula g;
      g.language = Language::Tff;
      g.name = name;
      g.role = Role(RoleBase::Conjecture, sr);
      g.body = make_conjunction(fs);
      rest.push_back(std::move(g));
    };
    goal("verification_goals_global", Subrole::Global, global);
    goal("verification_goals_local", Subrole::Local, local);
    vp.units = std::move(rest);
  }
  return vp;
}

VerificationProblem emit_for_model(const std::vector<AnnotatedFormula>& problem,
                                   const std::vector<AnnotatedFormula>& model, const EmitOptions& options) {
  const bool kripke =
      options.flavor == Flavor::Kripke || (options.flavor == Flavor::Auto && looks_kripke(model));
  return kripke ? emit_kripke_verification_problem(problem, model, options)
                : emit_verification_problem(problem, model, options);
}

std::vector<AnnotatedFormula> emit_satisfiability_problem(const std::vector<AnnotatedFormula>& problem,
                                                          const std::vector<AnnotatedFormula>& model) {
  const bool kripke = looks_kripke(model);
  Emitter em;
  if (kripke) {
    AnnotatedFormula header;
    header.language = Language::Tff;
    header.name = "foml_model";
    header.role = Role(RoleBase::Logic);
    header.body = LogicSpecification{"foml_model", "$$fomlModel"};
    em.add(header);
  } else {
    for (const auto& u : problem)
      if (u.logic_specification()) {
        em.add(u);
        break;
      }
  }
  em.add_declarations(problem, model);
  for (const auto& u : model)
    if (is_interpretation_unit(u)) em.add(with_role(u, Role(RoleBase::Axiom)));
  for (const auto& u : problem) {
    if (!is_problem_formula(u)) continue;
    if (u.role.is(RoleBase::Conjecture)) {
      Role r(RoleBase::Axiom);
      if (kripke) r.subrole = Subrole::Local;
      em.add(with_role(negated(u), r));
    } else {
      Role r = u.role;
      if (!kripke) r.subrole.reset();
      em.add(with_role(as_closed(u), r));
    }
  }
  return em.take();
}

}  // namespace tptp
