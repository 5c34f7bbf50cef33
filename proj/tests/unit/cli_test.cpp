#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tptp/parser.hpp"
#include "tptp_cli/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = tptp::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return tptp::test::fixture_path(name); }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("tptp_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

using tptp::cli::ExitCode;

TEST_CASE("usage errors") {
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({"check", "-p", fx("FOF_Finite.p")}).code == ExitCode::kUsage);
  CHECK(run({"lint", fx("no_such_file.p")}).code == ExitCode::kUsage);
  CHECK(run({"--help"}).code == ExitCode::kOk);
}

TEST_CASE("lint") {
  Run ok = run({"lint", fx("FOF_Finite.p"), fx("FOF_Finite.s"), fx("NXF_Finite-Finite-Global.s")});
  CHECK(ok.code == ExitCode::kOk);

  Run syntax = run({"lint", temp_file("bad.p", "fof(a,axiom,p &).\n")});
  CHECK(syntax.code == ExitCode::kUsage);
  CHECK(contains(syntax.err, "tptp_cli_test_bad.p:1:"));

  std::string text = tptp::test::read_fixture("NXF_Finite-Finite-Global.s");
  text.erase(text.find("\n    & $distinct(w1,w2,w3)"), std::string("\n    & $distinct(w1,w2,w3)").size());
  Run structure = run({"lint", temp_file("nodistinct.s", text)});
  CHECK(structure.code == ExitCode::kCheckFailed);
  CHECK(contains(structure.err, "WorldsNotDistinct"));
}

TEST_CASE("assemble") {
  Run r = run({"assemble", fx("TFF_Finite_SeparateDomains.s")});
  CHECK(r.code == ExitCode::kOk);
  CHECK(contains(r.out, "d_cat"));
  CHECK(contains(r.out, "loves"));
}

TEST_CASE("eval") {
  Run t = run({"eval", "-m", fx("FOF_Finite.s"), "-f", R"(grade_of("john") = "f")"});
  CHECK(t.code == ExitCode::kOk);
  CHECK(contains(t.out, "true"));
  Run u = run({"eval", "-m", fx("TFF_Integer.s"), "-f", "child_of(int2person(-1)) = int2person(0)"});
  CHECK(u.code == ExitCode::kGaveUp);
  CHECK(contains(u.out, "MissingMapping"));
  Run w = run({"eval", "-m", fx("NXF_Finite-Finite-Global.s"), "-f", "quiet(charly)", "-w", "w2"});
  CHECK(w.code == ExitCode::kOk);
  CHECK(contains(w.out, "false"));
  Run p = run({"eval", "-m", fx("FOF_Finite.s"), "-p", fx("FOF_Finite.p")});
  CHECK(p.code == ExitCode::kOk);
  CHECK(contains(p.out, "CounterSatisfiable"));
}

TEST_CASE("check") {
  Run r = run({"check", "-p", fx("TFF_Finite.p"), "-m", fx("TFF_Finite.s")});
  CHECK(r.code == ExitCode::kOk);
  CHECK(contains(r.out, "% SZS status CounterSatisfiable for TFF_Finite"));

  Run named = run({"check", "-p", fx("TFF_Finite.p"), "-m", fx("TFF_Finite.s"), "--name", "cats"});
  CHECK(contains(named.out, "% SZS status CounterSatisfiable for cats"));

  CHECK(run({"check", "-p", fx("TFF_Finite.p"), "-m", fx("TFF_Finite.s"), "--expect", "CounterSatisfiable"}).code ==
        ExitCode::kOk);
  CHECK(run({"check", "-p", fx("TFF_Finite.p"), "-m", fx("TFF_Finite.s"), "--expect", "Satisfiable"}).code ==
        ExitCode::kCheckFailed);

  Run gave_up = run({"check", "-p", fx("TFF_Infinite.p"), "-m", fx("TFF_Peano.s")});
  CHECK(gave_up.code == ExitCode::kGaveUp);
  CHECK(contains(gave_up.out, "% SZS status GaveUp for TFF_Infinite"));
}

TEST_CASE("emit-verify") {
  Run r = run({"emit-verify", "-p", fx("TFF_Infinite.p"), "-m", fx("TFF_Peano.s")});
  CHECK(r.code == ExitCode::kOk);
  tptp::ParseResult parsed = tptp::parse_file(r.out);
  CHECK(parsed.ok());
  CHECK(parsed.units.size() > 3);

  auto out = (std::filesystem::temp_directory_path() / "tptp_cli_test_verify.p").string();
  CHECK(run({"emit-verify", "-p", fx("NXF_Finite-Finite-Global.p"), "-m", fx("NXF_Finite-Finite-Global.s"), "-o", out,
             "--conjoin-goals"})
            .code == ExitCode::kOk);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contains(text, "$$fomlModel"));
  CHECK(contains(text, "verification_goals_global"));

  Run sat = run({"emit-verify", "-p", fx("FOF_Finite.p"), "-m", fx("FOF_Finite.s"), "--satisfiability"});
  CHECK(sat.code == ExitCode::kOk);
  CHECK_FALSE(contains(sat.out, "conjecture"));

  Run missing = run({"emit-verify", "-p", temp_file("nologic.p", "tff(c,conjecture,$true).\n"), "-m",
                     fx("NXF_Finite-Finite-Global.s"), "--flavor", "kripke"});
  CHECK(missing.code == ExitCode::kUsage);
  CHECK(contains(missing.err, "MissingLogicSpec"));
}

TEST_CASE("upgrade and regrain") {
  Run up = run({"upgrade", fx("FOF_Finite_Legacy.s")});
  CHECK(up.code == ExitCode::kOk);
  CHECK(contains(up.out, "interpretation-domains"));
  CHECK_FALSE(contains(up.out, "fi_domain"));

  Run fine = run({"regrain", fx("FOF_Finite.s"), "--to", "fine"});
  CHECK(fine.code == ExitCode::kOk);
  CHECK(contains(fine.out, "interpretation-mappings"));
  CHECK(run({"regrain", fx("FOF_Finite.s"), "--to", "sideways"}).code == ExitCode::kUsage);
}

TEST_CASE("dot") {
  Run d = run({"dot", fx("NXF_Finite-Finite-Global.s"), "--view", "worlds"});
  CHECK(d.code == ExitCode::kOk);
  CHECK(d.out.rfind("digraph", 0) == 0);
  Run p = run({"dot", fx("FOF_Finite.p")});
  CHECK(p.code == ExitCode::kOk);
  CHECK(p.out.rfind("digraph", 0) == 0);
}
