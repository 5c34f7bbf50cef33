// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tptp/assemble.hpp"
#include "tptp/evaluator.hpp"
#include "tptp/parser.hpp"
#include "tptp/printer.hpp"
#include "tptp/regrain.hpp"
#include "tptp/verifier.hpp"

using namespace tptp;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << what << "; ";
    }
  }
};

std::size_t count_role(const std::vector<AnnotatedFormula>& units, const std::string& role) {
  std::size_t n = 0;
  for (const auto& u : units) n += print_role(u.role) == role ? 1 : 0;
  return n;
}

bool is_model_fixture(const std::string& name) { return name.size() > 2 && name.substr(name.size() - 2) == ".s"; }

// Replaces distinct objects by oracle element markers.
ExprPtr with_markers(const ExprPtr& e, const std::map<std::string, int>& elements) {
  if (e->is(ExprKind::DistinctObject)) return oracle::element_marker(elements.at(e->text));
  if (e->children.empty()) return e;
  auto copy = std::make_shared<Expr>(*e);
  for (auto& c : copy->children) c = with_markers(c, elements);
  return copy;
}

// ---------------------------------------------------------------------------

void corpus_round_trip(Result& r) {
  std::size_t units = 0;
  for (const auto& name : test::corpus()) {
    ParseResult first = test::parse_fixture(name);
    r.require(first.diagnostics.empty(), name + " has diagnostics");
    const std::string once = print_units(first.units);
    ParseResult second = parse_file(once);
    r.require(second.ok() && second.units == first.units, name + " parse(print) differs");
    r.require(print_units(second.units) == once, name + " text is not a fixpoint");
    units += first.units.size();
  }
  if (r.pass) r.detail << test::corpus().size() << " files, " << units << " units identical after parse(print)";
}

void fof_countermodel(Result& r) {
  const auto start = std::chrono::steady_clock::now();
  auto problem = test::load("FOF_Finite.p");
  auto model = test::load("FOF_Finite.s");
  CheckReport report = check_model(problem, model);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string line = report.szs ? szs_report(*report.szs, "FOF_Finite") : "";
  r.require(line == "% SZS status CounterSatisfiable for FOF_Finite", "SZS line '" + line + "'");
  r.require(report.evaluation.has_value(), "not evaluated");
  r.require(seconds < 1.0, "took " + std::to_string(seconds) + " s");

  // The same model as oracle tables.
  const std::map<std::string, int> el{{"a", 0}, {"f", 1}, {"john", 2}, {"gotA", 3}};
  oracle::FiniteModel m;
  m.size = 4;
  oracle::TableSymbol grade{"grade_of", 1, {{{0}, 1}, {{1}, 0}, {{2}, 1}, {{3}, 1}}};
  oracle::TableSymbol eq{"created_equal", 2, {}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) eq.table[{a, b}] = (a == b || (a >= 2 && b >= 2)) ? 1 : 0;
  m.functions.push_back(grade);
  m.predicates.push_back(eq);

  std::size_t compared = 0;
  if (report.evaluation)
    for (const auto& u : report.evaluation->units) {
      const AnnotatedFormula* unit = nullptr;
      for (const auto& p : problem)
        if (p.name == u.name) unit = &p;
      const bool expected = oracle::eval(m, with_markers(*unit->formula(), el));
      r.require(u.verdict.value == (expected ? Truth::True : Truth::False), u.name + " disagrees with the oracle");
      r.require(u.obligation ? u.verdict.is_false() : u.verdict.is_true(), u.name + " " + describe(u.verdict));
      ++compared;
    }
  r.require(compared == 3, "expected 3 unit verdicts");
  if (r.pass) r.detail << line << ", " << compared << "/3 verdicts match the oracle, " << seconds * 1000 << " ms";
}

void kripke_countermodel(Result& r) {
  auto problem = test::load("NXF_Finite-Finite-Global.p");
  auto interp = assemble(test::load("NXF_Finite-Finite-Global.s")).interpretation;
  const auto& k = std::get<KripkeInterpretation>(interp);

  // The fixture in the oracle's vocabulary: rains is p0, sleepy(adult_1) is
  // p1, quiet is q over the single child.
  oracle::KripkeModel o;
  o.worlds = 3;
  o.size = 1;
  o.local = 0;
  o.access = {{0, 0}, {1, 1}, {0, 1}, {1, 2}, {2, 0}};
  o.exists = {{true}, {true}, {true}};
  o.prop = {{true, false}, {true, false}, {true, true}};
  o.q = {{true}, {false}, {true}};

  const std::vector<std::pair<std::string, std::string>> formulas{
      {"{$possible} @ ( ~ rains )", "{$possible} @ ( ~ p0 )"},
      {"{$box} @ ( rains )", "{$box} @ ( p0 )"},
      {"rains", "p0"},
      {"! [C: child] : ~ ( ~ quiet(C) & ? [A: adult] : sleepy(A) )", "! [X: t] : ~ ( ~ q(X) & p1 )"},
      {"{$possible} @ ( ~ quiet(charly) )", "{$possible} @ ( ~ q(C) )"},
      {"{$box} @ ( {$box} @ ( quiet(charly) ) )", "{$box} @ ( {$box} @ ( q(C) ) )"},
  };
  std::size_t compared = 0;
  for (const auto& [lib, orc] : formulas)
    for (int w = 0; w < 3; ++w) {
      // C stands for charly, the only element.
      const bool expected = oracle::eval_kripke(o, w, oracle::subst(parse_formula(orc), "C", oracle::element_marker(0)));
      Verdict got = eval_at_world(parse_formula(lib), k, "w" + std::to_string(w + 1));
      r.require(!got.is_unknown() && got.is_true() == expected,
                lib + " at w" + std::to_string(w + 1) + ": " + describe(got));
      ++compared;
    }
  r.require(eval_at_local_world(parse_formula("{$possible} @ ( ~ rains )"), k).is_false(),
            "conjecture not false at w1");

  ProblemEvaluation ev = eval_problem(problem, interp);
  for (const auto& u : ev.units)
    if (!u.obligation) r.require(u.verdict.is_true() && u.where == "all worlds", u.name + " not globally true");
  r.require(ev.status == SzsStatus::CounterSatisfiable, std::string("status ") + to_string(ev.status));
  if (r.pass) r.detail << compared << " world verdicts match the Kripke oracle, conjecture false at w1";
}

void oracle_equivalence(Result& r) {
  constexpr int kCases = 1000;
  int agreed = 0;
  for (int seed = 1; seed <= kCases; ++seed) {
    oracle::Generator gen(static_cast<unsigned>(seed));
    oracle::RandomCase c = gen.random_case(4, 3, 4);
    ParseResult parsed = parse_file(oracle::render(c));
    if (!parsed.ok()) continue;
    const auto t = std::get<TarskianInterpretation>(assemble(parsed.units).interpretation);
    Verdict got = eval_formula(c.formula, t);
    agreed += !got.is_unknown() && got.is_true() == oracle::eval(c.model, c.formula) ? 1 : 0;
  }
  r.require(agreed == kCases, std::to_string(kCases - agreed) + " disagreements");
  r.detail << agreed << "/" << kCases << " seeded cases agree";
}

void granularity_invariance(Result& r) {
  std::size_t compared = 0;
  std::size_t equal = 0;
  for (const auto& name : test::corpus()) {
    if (!is_model_fixture(name)) continue;
    auto units = test::load(name);
    std::optional<Interpretation> first;
    for (Granularity g : {Granularity::Coarse, Granularity::Medium, Granularity::Fine}) {
      ParseResult again = parse_file(print_units(regrain(units, g)));
      if (!again.ok()) {
        r.require(false, name + " regrained to " + to_string(g) + " does not parse");
        continue;
      }
      Interpretation i = assemble(again.units).interpretation;
      if (!first) {
        first = std::move(i);
        continue;
      }
      ++compared;
      if (i == *first)
        ++equal;
      else
        r.require(false, name + " differs at " + to_string(g));
    }
  }
  r.detail << equal << "/" << compared << " regrained interpretations equal to coarse";
}

void legacy_upgrade(Result& r) {
  auto legacy = test::load("FOF_Finite_Legacy.s");
  auto upgraded = upgrade_legacy(legacy);
  std::map<std::string, std::string> expected_roles{{"fi_domain", "interpretation-domains"},
                                                     {"fi_functors", "interpretation-mappings"},
                                                     {"fi_predicates", "interpretation-mappings"}};
  r.require(upgraded.size() == legacy.size(), "unit count changed");
  for (std::size_t i = 0; i < legacy.size() && i < upgraded.size(); ++i) {
    const std::string from = print_role(legacy[i].role);
    const std::string to = print_role(upgraded[i].role);
    auto want = expected_roles.find(from);
    r.require(want != expected_roles.end() && want->second == to, from + " became " + to);
  }
  const Interpretation up = assemble(upgraded).interpretation;
  for (const char* paired : {"FOF_Finite.s", "FOF_Finite_Medium.s", "FOF_Finite_Fine.s"})
    r.require(up == assemble(test::load(paired)).interpretation, std::string("differs from ") + paired);
  if (r.pass) r.detail << "fi_domain/fi_functors/fi_predicates upgraded, equal to the coarse, medium and fine models";
}

void kripke_emission(Result& r) {
  std::size_t checked = 0;
  for (const char* stem : {"NXF_Finite-Finite-Global", "NXF_Finite-Finite-Local"}) {
    const std::string s = stem;
    auto problem = test::load(s + ".p");
    VerificationProblem vp = emit_kripke_verification_problem(problem, test::load(s + ".s"));
    std::size_t global_axioms = 0;
    std::size_t local_axioms = 0;
    for (const auto& u : problem) {
      if (u.role.base != RoleBase::Axiom) continue;
      (u.role.subrole == Subrole::Local ? local_axioms : global_axioms)++;
    }
    std::size_t foml = 0;
    for (const auto& u : vp.units)
      if (u.role.base == RoleBase::Logic && print_unit(u).find("$$fomlModel") != std::string::npos) ++foml;
    r.require(foml == 1, s + ": " + std::to_string(foml) + " $$fomlModel units");
    r.require(count_role(vp.units, "conjecture-global") == global_axioms, s + ": conjecture-global count");
    r.require(count_role(vp.units, "conjecture-local") == local_axioms + 1, s + ": conjecture-local count");
    ParseResult again = parse_file(vp.text());
    r.require(again.ok() && again.units.size() == vp.units.size(), s + ": emitted problem does not re-parse");
    ++checked;
  }
  if (r.pass) r.detail << checked << " Kripke problems emitted and re-parsed";
}

std::size_t count_code(const CheckReport& rep, const std::string& code) {
  std::size_t n = 0;
  for (const auto& d : rep.diagnostics()) n += d.code == code ? 1 : 0;
  return n;
}

void structure_checks(Result& r) {
  CheckReport clean = check_structure(test::load("TFF_Finite_SeparateDomains.s"));
  r.require(!clean.has_errors(), "clean fixture has errors");
  const auto t = std::get<TarskianInterpretation>(assemble(test::load("TFF_Finite_SeparateDomains.s")).interpretation);
  for (const char* type : {"human", "cat"}) {
    const DomainSpec* d = t.domain_by_problem_type(type);
    r.require(d && d->promotion && d->promotion->surjectivity && d->promotion->injectivity,
              std::string("promotion for ") + type + " not recognised");
  }

  std::string text = test::read_fixture("TFF_Finite_SeparateDomains.s");
  const std::string injectivity = "\n    & ! [DC1: d_cat,DC2: d_cat] :\n        ( d2cat(DC1) = d2cat(DC2)\n       => DC1 = DC2 )";
  const auto at = text.find(injectivity);
  r.require(at != std::string::npos, "injectivity conjunct not found");
  if (at != std::string::npos) text.erase(at, injectivity.size());
  CheckReport no_inj = check_structure(parse_file(text).units);
  const std::size_t inj = count_code(no_inj, "PromotionNotInjective");
  r.require(inj == 1, std::to_string(inj) + " PromotionNotInjective diagnostics");

  std::string worlds = test::read_fixture("NXF_Finite-Finite-Global.s");
  const std::string distinct = "\n    & $distinct(w1,w2,w3)";
  const auto wat = worlds.find(distinct);
  r.require(wat != std::string::npos, "$distinct(w1,w2,w3) not found");
  if (wat != std::string::npos) worlds.erase(wat, distinct.size());
  CheckReport no_distinct = check_structure(parse_file(worlds).units);
  r.require(count_code(no_distinct, "WorldsNotDistinct") >= 1, "no WorldsNotDistinct");
  if (r.pass) r.detail << "bijections recognised, 1 PromotionNotInjective, WorldsNotDistinct reported";
}

void infinite_models(Result& r) {
  CheckReport rep = check_model(test::load("TFF_Infinite.p"), test::load("TFF_Integer.s"));
  r.require(rep.szs == SzsStatus::GaveUp, "status is not GaveUp");
  r.require(rep.gave_up && rep.gave_up->reason == GapReason::InfiniteQuantifier, "reason is not InfiniteQuantifier");

  const auto t = std::get<TarskianInterpretation>(assemble(test::load("TFF_Integer.s")).interpretation);
  r.require(eval_formula(parse_formula("child_of(int2person(5)) = int2person(6)"), t).is_true(),
            "child_of(int2person(5)) = int2person(6) is not true");
  r.require(eval_formula(parse_formula("child_of(int2person(5)) = int2person(7)"), t).is_false(),
            "child_of(int2person(5)) = int2person(7) is not false");
  TermValue neg = eval_term(parse_formula("child_of(int2person(-1))"), t);
  r.require(!neg.known(), "child_of(int2person(-1)) has a value");
  r.require(eval_formula(parse_formula("is_descendant(int2person(-3),int2person(2))"), t).is_unknown(),
            "negative is_descendant tuple is not unknown");

  ParseResult again = parse_file(print_units(rep.verification_problem));
  r.require(!rep.verification_problem.empty() && again.ok(), "verification problem missing or unparsable");
  if (r.pass)
    r.detail << "GaveUp(InfiniteQuantifier), exact ground evaluation, negative tuples unknown, "
             << rep.verification_problem.size() << "-unit verification problem parses";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria{
      {"corpus round-trip", corpus_round_trip},
      {"FOF countermodel check", fof_countermodel},
      {"Kripke countermodel check", kripke_countermodel},
      {"oracle equivalence", oracle_equivalence},
      {"granularity invariance", granularity_invariance},
      {"legacy upgrade", legacy_upgrade},
      {"Kripke verification emission", kripke_emission},
      {"structure checks", structure_checks},
      {"infinite-model handling", infinite_models},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.require(false, std::string("threw: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.str().c_str());
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
