#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tptp/assemble.hpp"
#include "tptp/evaluator.hpp"
#include "tptp/parser.hpp"
#include "tptp/printer.hpp"

using namespace tptp;

namespace {

const TarskianInterpretation& tarskian_of(const std::string& fixture) {
  static std::map<std::string, Interpretation> cache;
  auto it = cache.find(fixture);
  if (it == cache.end()) it = cache.emplace(fixture, assemble(test::load(fixture)).interpretation).first;
  return std::get<TarskianInterpretation>(it->second);
}

Verdict eval_in(const std::string& fixture, const std::string& formula) {
  return eval_formula(parse_formula(formula), tarskian_of(fixture));
}

}  // namespace

TEST_CASE("ground atoms and equalities") {
  CHECK(eval_in("FOF_Finite.s", R"(grade_of("john") = "f")").is_true());
  CHECK(eval_in("FOF_Finite.s", R"(grade_of("john") = "a")").is_false());
  CHECK(eval_in("FOF_Finite.s", R"(created_equal("john","gotA"))").is_true());
  CHECK(eval_in("FOF_Finite.s", R"(created_equal("a","john"))").is_false());
  CHECK(eval_in("FOF_Finite.s", R"(grade_of(grade_of("f")) = "f")").is_true());
  CHECK(eval_in("FOF_Finite.s", R"("a" != "f")").is_true());
}

TEST_CASE("quantifiers over finite domains") {
  CHECK(eval_in("FOF_Finite.s", "! [X] : created_equal(X,X)").is_true());
  CHECK(eval_in("FOF_Finite.s", "? [X] : grade_of(X) = \"a\"").is_true());
  CHECK(eval_in("FOF_Finite.s", "! [X,Y] : ( created_equal(X,Y) => created_equal(Y,X) )").is_true());
  CHECK(eval_in("TFF_Finite.s", "! [C: cat] : owns(jon,C)").is_false());
  CHECK(eval_in("TFF_Finite.s", "? [C: cat] : ~ owns(jon,C)").is_true());
  CHECK(eval_in("TFF_Finite_SeparateDomains.s", "! [C: cat] : loves(C) = garfield").is_true());
  CHECK(eval_in("TFF_Finite_SeparateDomains.s", "! [H: human] : H = jon").is_true());
  // Quantifying over the domain type itself.
  CHECK(eval_in("TFF_Finite_SeparateDomains.s", "! [D: d_cat] : loves(d2cat(D)) = d2cat(d_garfield)").is_true());
}

TEST_CASE("compacted mapping agrees with the expanded one") {
  const auto& compact = tarskian_of("TFF_Finite_Compact.s");
  const auto& full = tarskian_of("TFF_Finite_SeparateDomains.s");
  for (const char* f : {"loves(arlene) = garfield", "loves(nermal) = nermal", "! [C: cat] : loves(loves(C)) = C",
                        "? [C: cat] : ( loves(C) = C & owns(jon,C) )"}) {
    CAPTURE(f);
    CHECK(eval_formula(parse_formula(f), compact).value == eval_formula(parse_formula(f), full).value);
  }
}

TEST_CASE("lambda mappings are beta reduced") {
  CHECK(eval_in("THF_Finite.s", "( mix @ ( ^ [S: syrup] : coffee ) ) = coffee").is_true());
  CHECK(eval_in("THF_Finite.s", "hot @ ( heated_mix @ ( ^ [S: syrup] : coffee ) )").is_true());
  CHECK(eval_in("THF_Finite.s", "hot @ ( heat @ coffee )").is_true());
  Verdict v = eval_in("THF_Finite.s", "! [F: syrup > beverage] : ( ( mix @ F ) = coffee )");
  CHECK(v.is_unknown());
  CHECK(v.gap->reason == GapReason::UnsupportedConstruct);
}

TEST_CASE("infinite domains") {
  Verdict v = eval_in("TFF_Peano.s", "! [P: person] : is_descendant(P,child_of(P))");
  CHECK(v.is_unknown());
  CHECK(v.gap->reason == GapReason::InfiniteQuantifier);
  CHECK(eval_in("TFF_Peano.s", "child_of(peano2person(zero)) = peano2person(s(zero))").is_true());
  CHECK(eval_in("TFF_Peano.s", "is_descendant(peano2person(zero),peano2person(s(s(zero))))").is_true());
  CHECK(eval_in("TFF_Peano.s", "is_descendant(peano2person(s(zero)),peano2person(s(zero)))").is_false());

  CHECK(eval_in("TFF_Integer.s", "child_of(int2person(5)) = int2person(6)").is_true());
  CHECK(eval_in("TFF_Integer.s", "child_of(int2person(5)) = int2person(7)").is_false());
  CHECK(eval_in("TFF_Integer.s", "child_of(child_of(int2person(0))) = int2person($sum(1,1))").is_true());
  CHECK(eval_in("TFF_Integer.s", "is_descendant(int2person(3),int2person(10))").is_true());
  CHECK(eval_in("TFF_Integer.s", "is_descendant(int2person(10),int2person(3))").is_false());
  // No interpretation is given for negative integers.
  CHECK(eval_in("TFF_Integer.s", "child_of(int2person(-1)) = int2person(0)").is_unknown());
  CHECK(eval_in("TFF_Integer.s", "is_descendant(int2person(-2),int2person(3))").is_unknown());
}

TEST_CASE("integer arithmetic is exact") {
  const TarskianInterpretation empty;
  CHECK(eval_formula(parse_formula("$sum(123456789012345678901234567890,1) = 123456789012345678901234567891"), empty)
            .is_true());
  CHECK(eval_formula(parse_formula("$product(-3,7) = -21"), empty).is_true());
  CHECK(eval_formula(parse_formula("$less($uminus(5),$difference(0,4))"), empty).is_true());
  CHECK(eval_formula(parse_formula("+007 = 7"), empty).is_true());
}

TEST_CASE("Kleene connectives around unknowns") {
  const char* u = "child_of(int2person(-1)) = int2person(0)";
  CHECK(eval_in("TFF_Integer.s", std::string("$false & ") + u).is_false());
  CHECK(eval_in("TFF_Integer.s", std::string("$true | ") + u).is_true());
  CHECK(eval_in("TFF_Integer.s", std::string(u) + " => $true").is_true());
  CHECK(eval_in("TFF_Integer.s", std::string("~ ( ") + u + " )").is_unknown());
  CHECK(eval_in("TFF_Integer.s", std::string("$true <=> ( ") + u + " )").is_unknown());
}

TEST_CASE("missing mappings give unknown") {
  Verdict v = eval_in("FOF_Finite.s", R"(unmapped("a"))");
  CHECK(v.is_unknown());
  CHECK(v.gap->reason == GapReason::MissingMapping);
  CHECK(describe(v).rfind("unknown (MissingMapping", 0) == 0);
}

TEST_CASE("problem evaluation") {
  auto problem = test::load("FOF_Finite.p");
  ProblemEvaluation ev = eval_problem(problem, assemble(test::load("FOF_Finite.s")).interpretation);
  CHECK(ev.status == SzsStatus::CounterSatisfiable);
  REQUIRE(ev.units.size() == 3);
  CHECK(ev.units[0].verdict.is_true());
  CHECK(ev.units[1].verdict.is_true());
  CHECK(ev.units[2].obligation);
  CHECK(ev.units[2].verdict.is_false());

  auto axioms_only = parse_file("fof(a,axiom,$true).").units;
  CHECK(eval_problem(axioms_only, TarskianInterpretation{}).status == SzsStatus::Satisfiable);
  auto false_axiom = parse_file("fof(a,axiom,$false).").units;
  CHECK(eval_problem(false_axiom, TarskianInterpretation{}).status == SzsStatus::Error);
}

// ---------------------------------------------------------------------------

TEST_CASE("random finite interpretations agree with the brute-force oracle") {
  constexpr int kCases = 1500;
  int agreed = 0;
  int held = 0;
  std::set<oracle::Encoding> encodings;
  for (int seed = 1; seed <= kCases; ++seed) {
    oracle::Generator gen(static_cast<unsigned>(seed));
    oracle::RandomCase c = gen.random_case(4, 3, 4);
    const std::string text = oracle::render(c);
    ParseResult parsed = parse_file(text);
    REQUIRE_MESSAGE(parsed.ok(), text);
    const auto t = std::get<TarskianInterpretation>(assemble(parsed.units).interpretation);
    const bool expected = oracle::eval(c.model, c.formula);
    held += expected ? 1 : 0;
    encodings.insert(c.encoding);
    Verdict got = eval_formula(c.formula, t);
    const bool same = !got.is_unknown() && got.is_true() == expected;
    if (!same) {
      MESSAGE("seed " << seed << ": " << print_expr(c.formula) << " oracle " << expected << " evaluator "
                      << describe(got) << "\n" << text);
    }
    agreed += same ? 1 : 0;
  }
  CHECK(agreed == kCases);
  // The corpus is not degenerate.
  CHECK(held > kCases / 10);
  CHECK(kCases - held > kCases / 10);
  CHECK(encodings.size() == 3);
}

TEST_CASE("random Kripke interpretations agree with the world-enumerating oracle") {
  constexpr int kCases = 1000;
  int agreed = 0;
  int compared = 0;
  for (int seed = 1; seed <= kCases; ++seed) {
    oracle::KripkeGenerator gen(static_cast<unsigned>(seed));
    oracle::KripkeCase c = gen.random_case(4);
    const std::string text = oracle::render(c.model);
    ParseResult parsed = parse_file(text);
    REQUIRE_MESSAGE(parsed.ok(), text);
    const auto k = std::get<KripkeInterpretation>(assemble(parsed.units).interpretation);
    for (int w = 0; w < c.model.worlds; ++w) {
      ++compared;
      const bool expected = oracle::eval_kripke(c.model, w, c.formula);
      Verdict got = eval_at_world(c.formula, k, "w" + std::to_string(w));
      const bool same = !got.is_unknown() && got.is_true() == expected;
      if (!same)
        MESSAGE("seed " << seed << " world w" << w << ": " << print_expr(c.formula) << " oracle " << expected
                        << " evaluator " << describe(got) << "\n" << text);
      agreed += same ? 1 : 0;
    }
  }
  CHECK(agreed == compared);
}

TEST_CASE("Kripke countermodel") {
  auto k = std::get<KripkeInterpretation>(assemble(test::load("NXF_Finite-Finite-Global.s")).interpretation);
  CHECK(eval_at_local_world(parse_formula("{$possible} @ ( ~ rains )"), k).is_false());
  CHECK(eval_globally(parse_formula("{$box} @ ( rains )"), k).is_true());
  CHECK(eval_at_world(parse_formula("quiet(charly)"), k, "w2").is_false());
  CHECK(eval_at_world(parse_formula("{$possible} @ ( ~ quiet(charly) )"), k, "w1").is_true());
  CHECK(eval_at_world(parse_formula("{$box} @ ( quiet(charly) )"), k, "w3").is_true());
  // Defined symbols are usable in formulae too.
  CHECK(eval_at_world(parse_formula("$local_world = w1"), k, "w3").is_true());
  CHECK(eval_at_world(parse_formula("$accessible_world(w2,w3)"), k, "w1").is_true());
  CHECK(eval_at_world(parse_formula("$in_world(w2, ~ quiet(charly))"), k, "w1").is_true());

  KripkeInterpretation no_local = k;
  no_local.local_world.reset();
  Verdict v = eval_at_local_world(parse_formula("rains"), no_local);
  CHECK(v.is_unknown());
  CHECK(v.gap->reason == GapReason::MissingLocalWorld);
}

TEST_CASE("local and global axioms") {
  auto problem = test::load("NXF_Finite-Finite-Local.p");
  auto interp = assemble(test::load("NXF_Finite-Finite-Local.s")).interpretation;
  ProblemEvaluation ev = eval_problem(problem, interp);
  CHECK(ev.status == SzsStatus::CounterSatisfiable);
  for (const auto& u : ev.units) {
    CAPTURE(u.name);
    if (u.name == "dry_here") CHECK(u.where == "w1");
    if (u.name == "rain_nearby") CHECK(u.where == "all worlds");
  }
  // The local axiom does not hold everywhere.
  const auto& k = std::get<KripkeInterpretation>(interp);
  CHECK(eval_globally(parse_formula("~ rains"), k).is_false());
}

TEST_CASE("ground terms naming elements absent from a world") {
  auto k = std::get<KripkeInterpretation>(assemble(parse_file(R"(
tff(t_type,type,t: $tType).
tff(t_d_type,type,t_d: $tType).
tff(d2t_decl,type,d2t: t_d > t).
tff(e1_decl,type,e1: t_d).
tff(e2_decl,type,e2: t_d).
tff(c_decl,type,c: t).
tff(p_decl,type,p: t > $o).
tff(w1_decl,type,w1: $world).
tff(w2_decl,type,w2: $world).
tff(m,interpretation,
    ( ! [W: $world] : ( W = w1 | W = w2 )
    & $distinct(w1,w2)
    & $accessible_world(w1,w2)
    & ~ $accessible_world(w1,w1)
    & ~ $accessible_world(w2,w1)
    & ~ $accessible_world(w2,w2)
    & $local_world = w1
    & $in_world(w1,
        ( ! [X: t] : ? [D: t_d] : X = d2t(D)
        & ! [D: t_d] : ( D = e1 | D = e2 )
        & $distinct(e1,e2)
        & ! [D1: t_d,D2: t_d] : ( d2t(D1) = d2t(D2) => D1 = D2 )
        & ? [D: t_d] : D = e1
        & ? [D: t_d] : D = e2
        & c = d2t(e2)
        & p(d2t(e1))
        & p(d2t(e2)) ) )
    & $in_world(w2,
        ( ! [X: t] : ? [D: t_d] : X = d2t(D)
        & ! [D: t_d] : ( D = e1 | D = e2 )
        & $distinct(e1,e2)
        & ! [D1: t_d,D2: t_d] : ( d2t(D1) = d2t(D2) => D1 = D2 )
        & ? [D: t_d] : D = e1
        & c = d2t(e2)
        & p(d2t(e1))
        & ~ p(d2t(e2)) ) ) ) ).
)").units).interpretation);
  CHECK(eval_at_world(parse_formula("p(c)"), k, "w1").is_true());
  Verdict v = eval_at_world(parse_formula("p(c)"), k, "w2");
  CHECK(v.is_unknown());
  CHECK(v.gap->reason == GapReason::NonExistingDesignation);
  // Quantifiers only see the elements that exist.
  CHECK(eval_at_world(parse_formula("! [X: t] : p(X)"), k, "w2").is_true());
}
