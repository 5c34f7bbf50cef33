#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tptp/assemble.hpp"
#include "tptp/completeness.hpp"
#include "tptp/parser.hpp"
#include "tptp/printer.hpp"
#include "tptp/regrain.hpp"

using namespace tptp;

namespace {

Interpretation assemble_file(const std::string& name) { return assemble(test::load(name)).interpretation; }

TarskianInterpretation tarskian(Interpretation i) { return std::get<TarskianInterpretation>(std::move(i)); }

Interpretation assemble_text(const std::string& text) {
  ParseResult r = parse_file(text);
  REQUIRE(r.ok());
  return assemble(r.units).interpretation;
}

}  // namespace

TEST_CASE("untyped finite model") {
  auto i = assemble_file("FOF_Finite.s");
  const auto& t = tarskian(i);
  REQUIRE(t.domains.size() == 1);
  const DomainSpec& d = t.domains[0];
  CHECK(d.domain_type == "$i");
  CHECK(d.element_ids() == std::vector<ElementId>{"\"a\"", "\"f\"", "\"john\"", "\"gotA\""});
  CHECK(d.distinctness == Distinctness::DistinctObjects);
  CHECK(d.fully_distinct());

  const SymbolMapping* g = t.mapping("grade_of");
  REQUIRE(g);
  CHECK_FALSE(g->predicate);
  CHECK(g->arity == 1);
  CHECK(*g->lookup({"\"john\""}) == "\"f\"");
  CHECK(*g->lookup({"\"f\""}) == "\"a\"");

  const SymbolMapping* c = t.mapping("created_equal");
  REQUIRE(c);
  CHECK(c->predicate);
  CHECK(*c->lookup({"\"john\"", "\"gotA\""}) == kTrueValue);
  CHECK(*c->lookup({"\"a\"", "\"john\""}) == kFalseValue);
  CHECK(c->entries.size() == 16);
  CHECK(completeness_check(t).complete());
}

TEST_CASE("finite model reusing problem types") {
  const auto& t = tarskian(assemble_file("TFF_Finite.s"));
  const DomainSpec* cat = t.domain_for("cat");
  REQUIRE(cat);
  CHECK(cat->problem_type == "cat");
  CHECK(cat->domain_type == "cat");
  CHECK(cat->distinctness == Distinctness::DistinctPredicate);
  CHECK_FALSE(cat->promotion);
  CHECK(*t.mapping("loves")->lookup({"d_garfield"}) == "d_garfield");
  CHECK(*t.mapping("owns")->lookup({"d_jon", "d_nermal"}) == kFalseValue);
}

TEST_CASE("finite model with domain types and promotions") {
  const auto& t = tarskian(assemble_file("TFF_Finite_SeparateDomains.s"));
  const DomainSpec* cat = t.domain_by_problem_type("cat");
  REQUIRE(cat);
  CHECK(cat->domain_type == "d_cat");
  REQUIRE(cat->promotion);
  CHECK(cat->promotion->function_symbol == "d2cat");
  CHECK(cat->promotion->surjectivity);
  CHECK(cat->promotion->injectivity);
  const DomainSpec* human = t.domain_by_problem_type("human");
  REQUIRE(human);
  CHECK(human->element_ids() == std::vector<ElementId>{"d_jon"});
  // Promotions are stripped from mapping keys and values.
  CHECK(*t.mapping("loves")->lookup({"d_arlene"}) == "d_garfield");
  CHECK(*t.mapping("jon")->lookup({}) == "d_jon");
  CHECK(completeness_check(t).complete());
}

TEST_CASE("THF model keeps lambda mappings as general clauses") {
  const auto& t = tarskian(assemble_file("THF_Finite.s"));
  const SymbolMapping* mix = t.mapping("mix");
  REQUIRE(mix);
  CHECK(mix->entries.empty());
  CHECK(mix->general_clauses.size() == 1);
  CHECK(*t.mapping("hot")->lookup({"d_coffee"}) == kTrueValue);
  CHECK(*t.mapping("heat")->lookup({"d_coffee"}) == "d_coffee");
}

TEST_CASE("infinite domains") {
  const auto& peano = tarskian(assemble_file("TFF_Peano.s"));
  const DomainSpec* d = peano.domain_by_problem_type("person");
  REQUIRE(d);
  CHECK(d->domain_type == "peano");
  REQUIRE(d->infinite);
  CHECK(d->infinite->kind == InfiniteDescriptor::Kind::TermGenerated);
  CHECK(d->distinctness == Distinctness::ImpliedByFormula);
  CHECK(std::find(d->infinite->constructors.begin(), d->infinite->constructors.end(),
                  std::pair<std::string, std::size_t>{"s", 1}) != d->infinite->constructors.end());
  CHECK_FALSE(peano.all_finite());

  const auto& ints = tarskian(assemble_file("TFF_Integer.s"));
  const DomainSpec* di = ints.domain_by_problem_type("person");
  REQUIRE(di);
  CHECK(di->domain_type == "$int");
  REQUIRE(di->infinite);
  CHECK(di->infinite->kind == InfiniteDescriptor::Kind::Builtin);
  CHECK(di->distinctness == Distinctness::ByBuiltinType);
  CHECK(ints.mapping("child_of")->general_clauses.size() == 1);
}

TEST_CASE("Herbrand interpretation-formulae are carried verbatim") {
  const auto& t = tarskian(assemble_file("FOF_Formulae.s"));
  CHECK(t.herbrand);
  CHECK(t.domains.empty());
  CHECK(t.mappings.empty());
  CHECK(t.herbrand_formulae.size() == 1);
  const auto& s = tarskian(assemble_file("FOF_Saturation.s"));
  CHECK(s.herbrand);
  CHECK(s.herbrand_formulae.size() == 4);
}

TEST_CASE("Kripke model") {
  auto i = assemble_file("NXF_Finite-Finite-Global.s");
  REQUIRE(is_kripke(i));
  const auto& k = std::get<KripkeInterpretation>(i);
  CHECK(k.worlds == std::vector<std::string>{"w1", "w2", "w3"});
  CHECK(k.worlds_distinct());
  CHECK(k.accessible.size() == 5);
  CHECK(k.inaccessible.size() == 4);
  CHECK(k.local_world == "w1");
  CHECK(k.is_accessible("w2", "w3"));
  CHECK_FALSE(k.is_accessible("w3", "w3"));
  CHECK(k.successors("w1") == std::vector<std::string>{"w1", "w2"});
  for (const auto& w : k.worlds) {
    CAPTURE(w);
    const WorldState& ws = k.per_world.at(w);
    CHECK(*ws.tarskian.mapping("rains")->lookup({}) == kTrueValue);
    CHECK(ws.existing.at("child_d") == std::set<ElementId>{"child_1"});
  }
  CHECK(*k.per_world.at("w2").tarskian.mapping("quiet")->lookup({"child_1"}) == kFalseValue);
}

TEST_CASE("every conjunct is classified exactly once") {
  for (const auto& name : {"FOF_Finite.s", "TFF_Finite_SeparateDomains.s", "NXF_Finite-Finite-Global.s"}) {
    CAPTURE(name);
    auto units = test::load(name);
    AssemblyResult r = assemble(units);
    std::size_t conjuncts = 0;
    for (const auto& u : units)
      if (is_interpretation_unit(u)) conjuncts += conjuncts_of(*u.formula()).size();
    CHECK(r.report.classified.size() + r.report.unclassified.size() == conjuncts);
    CHECK(r.report.unclassified.empty());
  }
}

TEST_CASE("hand-split fixtures assemble to the coarse interpretation") {
  for (const auto& fam : test::grain_families()) {
    Interpretation coarse = assemble_file(fam.coarse);
    for (const auto& v : fam.variants) {
      CAPTURE(v);
      CHECK(assemble_file(v) == coarse);
    }
  }
}

TEST_CASE("regrain preserves the assembled interpretation") {
  for (const auto& fam : test::grain_families()) {
    std::vector<std::string> files{fam.coarse};
    files.insert(files.end(), fam.variants.begin(), fam.variants.end());
    for (const auto& f : files) {
      auto units = test::load(f);
      Interpretation base = assemble(units).interpretation;
      for (Granularity g : {Granularity::Coarse, Granularity::Medium, Granularity::Fine}) {
        CAPTURE(f);
        CAPTURE(to_string(g));
        auto out = regrain(units, g);
        // The output is ordinary TPTP text again.
        ParseResult reparsed = parse_file(print_units(out));
        REQUIRE(reparsed.ok());
        CHECK(assemble(reparsed.units).interpretation == base);
      }
    }
  }
}

TEST_CASE("regrain shapes") {
  auto units = test::load("TFF_Finite_SeparateDomains.s");
  auto count = [](const std::vector<AnnotatedFormula>& us) {
    return std::count_if(us.begin(), us.end(), [](const AnnotatedFormula& u) { return is_interpretation_unit(u); });
  };
  CHECK(count(regrain(units, Granularity::Coarse)) == 1);
  CHECK(count(regrain(units, Granularity::Medium)) == 2);
  auto fine = regrain(units, Granularity::Fine);
  // two domains, six symbols
  CHECK(count(fine) == 8);
  bool found = false;
  for (const auto& u : fine)
    if (u.role.subrole == Subrole::Domains && u.role.subrole_args &&
        *u.role.subrole_args == std::pair<std::string, std::string>{"cat", "d_cat"})
      found = true;
  CHECK(found);
  // Coarse on coarse input is idempotent.
  auto coarse = test::load("FOF_Finite.s");
  CHECK(assemble(regrain(coarse, Granularity::Coarse)).interpretation == assemble(coarse).interpretation);
}

TEST_CASE("legacy upgrade") {
  auto legacy = test::load("FOF_Finite_Legacy.s");
  auto upgraded = upgrade_legacy(legacy);
  REQUIRE(upgraded.size() == 3);
  CHECK(print_role(upgraded[0].role) == "interpretation-domains");
  CHECK(print_role(upgraded[1].role) == "interpretation-mappings");
  CHECK(print_role(upgraded[2].role) == "interpretation-mappings");
  CHECK(assemble(upgraded).interpretation == assemble_file("FOF_Finite.s"));
  // fi_* roles are also accepted as they are.
  CHECK(assemble(legacy).interpretation == assemble_file("FOF_Finite.s"));
}

TEST_CASE("conflicting entries are rejected") {
  CHECK_THROWS_AS(assemble_text("fof(m,interpretation,( ! [X] : ( X = \"a\" | X = \"b\" ) & f(\"a\") = \"a\" & "
                                "f(\"a\") = \"b\" ))."),
                  AssemblyError);
  try {
    assemble_text("fof(m,interpretation,( ! [X] : ( X = \"a\" ) & p(\"a\") & ~ p(\"a\") )).");
    FAIL("expected ConflictingEntry");
  } catch (const AssemblyError& e) {
    CHECK(e.diagnostic().code == "ConflictingEntry");
  }
}

TEST_CASE("empty input gives an empty interpretation with a warning") {
  AssemblyResult r = assemble({});
  CHECK(tarskian(r.interpretation).empty());
  REQUIRE(r.report.warnings.size() == 1);
  CHECK(r.report.warnings[0].code == "NoInterpretation");
}

TEST_CASE("completeness reports missing tuples") {
  auto i = assemble_text(
      "fof(m,interpretation,( ! [X] : ( X = \"a\" | X = \"b\" ) & f(\"a\") = \"b\" & p(\"a\",\"b\") ))."
      "fof(n,interpretation,( ! [X] : q(X) )).");
  CompletenessReport r = completeness_check(tarskian(i));
  CHECK_FALSE(r.complete());
  std::vector<MissingTuple> expected{{"f", {"\"b\""}},
                                     {"p", {"\"a\"", "\"a\""}},
                                     {"p", {"\"b\"", "\"a\""}},
                                     {"p", {"\"b\"", "\"b\""}}};
  CHECK(r.missing == expected);
}

TEST_CASE("flavor override") {
  auto units = test::load("FOF_Finite.s");
  CHECK_FALSE(is_kripke(assemble(units, {Flavor::Tarskian}).interpretation));
  CHECK(looks_kripke(test::load("NXF_Finite-Finite-Global_Compact.s")));
  CHECK_FALSE(looks_kripke(test::load("TFF_Finite.s")));
}

TEST_CASE("unclassified conjuncts inside worlds are warned about") {
  ParseResult r = parse_file(R"(
tff(p_decl,type,p: $o).
tff(w1_decl,type,w1: $world).
tff(w2_decl,type,w2: $world).
tff(m,interpretation,
    ( ! [W: $world] : ( W = w1 | W = w2 )
    & $distinct(w1,w2)
    & $local_world = w1
    & $in_world(w1, ( p & $in_world(w2, ~ p) ))
    & $in_world(w2, p) ) ).
)");
  REQUIRE(r.ok());
  AssemblyResult a = assemble(r.units);
  std::size_t n = 0;
  for (const auto& d : a.report.warnings) n += d.code == "UnclassifiedComponent" ? 1 : 0;
  CHECK(n == 1);
  const auto& k = std::get<KripkeInterpretation>(a.interpretation);
  CHECK(k.per_world.at("w1").tarskian.constraints.size() == 1);
  CHECK(k.per_world.at("w2").tarskian.constraints.empty());
}
