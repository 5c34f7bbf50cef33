#include "tptp_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tptp/assemble.hpp"
#include "tptp/dot.hpp"
#include "tptp/evaluator.hpp"
#include "tptp/parser.hpp"
#include "tptp/printer.hpp"
#include "tptp/regrain.hpp"
#include "tptp/szs.hpp"
#include "tptp/verifier.hpp"

namespace tptp::cli {

namespace {

// Ends a command early with an exit code; the message has been printed.
struct Exit {
  int code;
};

class Context {
 public:
  Context(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& err() { return err_; }

  std::vector<AnnotatedFormula> load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err_ << path << ": cannot read file\n";
      throw Exit{kUsage};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ParseResult r = parse_file(buf.str());
    report(path, r.diagnostics);
    if (!r.ok()) throw Exit{kUsage};
    return std::move(r.units);
  }

  void report(const std::string& path, const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) err_ << path << (d.pos.known() ? ":" : ": ") << format(d) << "\n";
  }

  // Writes to the -o file, or standard output when none was given.
  void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err_ << path << ": cannot write file\n";
      throw Exit{kUsage};
    }
    f << text;
  }

  AssemblyResult assemble_or_exit(const std::vector<AnnotatedFormula>& units, const AssembleOptions& opts,
                                  const std::string& path) {
    try {
      AssemblyResult r = assemble(units, opts);
      report(path, r.report.warnings);
      return r;
    } catch (const AssemblyError& e) {
      report(path, {e.diagnostic()});
      throw Exit{kCheckFailed};
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

const std::map<std::string, Flavor> kFlavors{
    {"auto", Flavor::Auto}, {"tarskian", Flavor::Tarskian}, {"kripke", Flavor::Kripke}};

int exit_for(SzsStatus s) {
  switch (s) {
    case SzsStatus::GaveUp: return kGaveUp;
    case SzsStatus::Error: return kCheckFailed;
    default: return kOk;
  }
}

std::string verdict_table(const ProblemEvaluation& ev) {
  std::size_t name_w = 4;
  std::size_t role_w = 4;
  for (const auto& u : ev.units) {
    name_w = std::max(name_w, u.name.size());
    role_w = std::max(role_w, print_role(u.role).size());
  }
  std::ostringstream s;
  s << std::left << std::setw(static_cast<int>(name_w) + 2) << "unit" << std::setw(static_cast<int>(role_w) + 2)
    << "role" << std::setw(12) << "where"
    << "verdict\n";
  for (const auto& u : ev.units) {
    s << std::setw(static_cast<int>(name_w) + 2) << u.name << std::setw(static_cast<int>(role_w) + 2)
      << print_role(u.role) << std::setw(12) << (u.where.empty() ? "-" : u.where) << describe(u.verdict) << "\n";
  }
  return s.str();
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

bool has_interpretation(const std::vector<AnnotatedFormula>& units) {
  return std::any_of(units.begin(), units.end(), [](const AnnotatedFormula& u) { return is_interpretation_unit(u); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  CLI::App app{"Parse, assemble, evaluate and verify TPTP interpretations", "tptp-interp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tptp-interp 0.1.0");

  std::string flavor_name = "auto";
  auto add_flavor = [&](CLI::App* sub) {
    sub->add_option("--flavor", flavor_name, "Interpretation flavor")
        ->check(CLI::IsMember({"auto", "tarskian", "kripke"}));
  };
  auto options = [&] { return AssembleOptions{kFlavors.at(flavor_name)}; };

  std::vector<std::string> files;
  std::string file, problem, model, output, expect, name, formula, world, level, view = "domains";
  bool conjoin = false;
  bool satisfiability = false;

  auto* lint = app.add_subcommand("lint", "Parse and check the structure of TPTP files");
  lint->add_option("files", files, "Input files")->required();
  add_flavor(lint);

  auto* assemble_cmd = app.add_subcommand("assemble", "Print the assembled interpretation");
  assemble_cmd->add_option("file", file, "Interpretation file")->required();
  add_flavor(assemble_cmd);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula or a problem in a finite model");
  eval->add_option("-m,--model", model, "Interpretation file")->required();
  auto* eval_problem_opt = eval->add_option("-p,--problem", problem, "Problem file");
  eval->add_option("-f,--formula", formula, "Formula text")->excludes(eval_problem_opt);
  eval->add_option("-w,--world", world, "World for Kripke models (default: the local world)");
  add_flavor(eval);

  auto* check = app.add_subcommand("check", "Check that a model is a (counter)model of a problem");
  check->add_option("-p,--problem", problem, "Problem file")->required();
  check->add_option("-m,--model", model, "Interpretation file")->required();
  check->add_option("--expect", expect, "Expected SZS status");
  check->add_option("--name", name, "Problem name for the SZS line (default: problem file stem)");
  add_flavor(check);

  auto* emit = app.add_subcommand("emit-verify", "Write the verification problem for a model");
  emit->add_option("-p,--problem", problem, "Problem file")->required();
  emit->add_option("-m,--model", model, "Interpretation file")->required();
  emit->add_option("-o,--output", output, "Output file (default: standard output)");
  emit->add_flag("--conjoin-goals", conjoin, "Emit one conjecture instead of one per obligation");
  emit->add_flag("--satisfiability", satisfiability, "Emit the satisfiability problem for a model finder instead");
  add_flavor(emit);

  auto* upgrade = app.add_subcommand("upgrade", "Rewrite fi_domain/fi_functors/fi_predicates roles");
  upgrade->add_option("file", file, "Input file")->required();
  upgrade->add_option("-o,--output", output, "Output file");

  auto* regrain_cmd = app.add_subcommand("regrain", "Split or merge interpretation-formulae");
  regrain_cmd->add_option("file", file, "Input file")->required();
  regrain_cmd->add_option("--to", level, "coarse, medium or fine")
      ->required()
      ->check(CLI::IsMember({"coarse", "medium", "fine"}));
  regrain_cmd->add_option("-o,--output", output, "Output file");
  add_flavor(regrain_cmd);

  auto* dot = app.add_subcommand("dot", "Write a Graphviz view of a model");
  dot->add_option("file", file, "Interpretation file")->required();
  dot->add_option("--view", view, "domains or worlds")->check(CLI::IsMember({"domains", "worlds"}));
  dot->add_option("-o,--output", output, "Output file");
  add_flavor(dot);

  std::vector<const char*> argv{"tptp-interp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "tptp-interp 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    if (lint->parsed()) {
      int code = kOk;
      for (const auto& f : files) {
        auto units = ctx.load(f);
        if (!has_interpretation(units)) {
          // Problems only get the type check.
          CheckReport r = check_structure(units, options());
          for (const auto& s : r.stages)
            if (s.stage != Stage::Structure) ctx.report(f, s.diagnostics);
          if (const auto* tc = r.stage(Stage::TypeCheck); tc && has_errors(tc->diagnostics)) code = kCheckFailed;
          continue;
        }
        CheckReport r = check_structure(units, options());
        ctx.report(f, r.diagnostics());
        if (r.has_errors()) code = kCheckFailed;
      }
      return code;
    }

    if (assemble_cmd->parsed()) {
      auto units = ctx.load(file);
      AssemblyResult r = ctx.assemble_or_exit(units, options(), file);
      ctx.emit(describe(r.interpretation), "");
      return kOk;
    }

    if (eval->parsed()) {
      auto model_units = ctx.load(model);
      AssemblyResult r = ctx.assemble_or_exit(model_units, options(), model);
      if (!problem.empty()) {
        ProblemEvaluation ev = eval_problem(ctx.load(problem), r.interpretation);
        ctx.emit(verdict_table(ev) + "status: " + to_string(ev.status) + "\n", "");
        return exit_for(ev.status);
      }
      if (formula.empty()) {
        err << "eval: one of --problem or --formula is required\n";
        return kUsage;
      }
      Formula f;
      try {
        f = parse_formula(formula);
      } catch (const SyntaxError& e) {
        err << "formula:" << e.what() << "\n";
        return kUsage;
      }
      Verdict v;
      if (const auto* k = std::get_if<KripkeInterpretation>(&r.interpretation))
        v = world.empty() ? eval_at_local_world(f, *k) : eval_at_world(f, *k, world);
      else
        v = eval_formula(f, std::get<TarskianInterpretation>(r.interpretation));
      ctx.emit(describe(v) + "\n", "");
      return v.is_unknown() ? kGaveUp : kOk;
    }

    if (check->parsed()) {
      std::optional<SzsStatus> expected;
      if (!expect.empty()) {
        expected = szs_from_string(expect);
        if (!expected) {
          err << "--expect: unknown SZS status " << expect << "\n";
          return kUsage;
        }
      }
      auto problem_units = ctx.load(problem);
      auto model_units = ctx.load(model);
      CheckReport r = check_model(problem_units, model_units, options());
      ctx.report(model, r.diagnostics());
      std::ostringstream text;
      if (r.evaluation) text << verdict_table(*r.evaluation);
      if (r.gave_up) {
        err << "gave up: " << to_string(r.gave_up->reason) << ": " << r.gave_up->detail << "\n";
        err << "a verification problem for an external prover is available with emit-verify\n";
      }
      const SzsStatus status = r.szs.value_or(SzsStatus::Error);
      text << szs_report(status, name.empty() ? stem(problem) : name) << "\n";
      ctx.emit(text.str(), "");
      if (status == SzsStatus::GaveUp) return kGaveUp;
      if (expected) return *expected == status ? kOk : kCheckFailed;
      return exit_for(status);
    }

    if (emit->parsed()) {
      auto problem_units = ctx.load(problem);
      auto model_units = ctx.load(model);
      if (satisfiability) {
        ctx.emit(print_units(emit_satisfiability_problem(problem_units, model_units)) + "\n", output);
        return kOk;
      }
      EmitOptions eo;
      eo.conjoin_goals = conjoin;
      eo.flavor = kFlavors.at(flavor_name);
      try {
        ctx.emit(emit_for_model(problem_units, model_units, eo).text(), output);
      } catch (const VerificationError& e) {
        ctx.report(problem, {e.diagnostic()});
        return kUsage;
      }
      return kOk;
    }

    if (upgrade->parsed()) {
      auto units = upgrade_legacy(ctx.load(file));
      try {
        assemble(units);
      } catch (const AssemblyError& e) {
        ctx.report(file, {e.diagnostic()});
        return kCheckFailed;
      }
      ctx.emit(print_units(units) + "\n", output);
      return kOk;
    }

    if (regrain_cmd->parsed()) {
      auto units = ctx.load(file);
      try {
        ctx.emit(print_units(regrain(units, *granularity_from_string(level), options())) + "\n", output);
      } catch (const AssemblyError& e) {
        ctx.report(file, {e.diagnostic()});
        return kCheckFailed;
      }
      return kOk;
    }

    if (dot->parsed()) {
      auto units = ctx.load(file);
      std::string text;
      if (!has_interpretation(units)) {
        // Nothing to draw.
        text = to_dot(TarskianInterpretation{});
      } else {
        AssemblyResult r = ctx.assemble_or_exit(units, options(), file);
        text = to_dot(r.interpretation, view == "worlds" ? DotView::Worlds : DotView::Domains);
      }
      ctx.emit(text, output);
      return kOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace tptp::cli
