#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "tptp/assemble.hpp"
#include "tptp/evaluator.hpp"
#include "tptp/parser.hpp"
#include "tptp/printer.hpp"
#include "tptp/verifier.hpp"

using namespace tptp;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(TPTP_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// One untyped domain of n distinct objects, a unary function f (successor
// mod n) and a binary predicate lt.
std::string model_of_size(int n) {
  auto e = [](int i) { return "\"e" + std::to_string(i) + "\""; };
  std::ostringstream out;
  out << "fof(m,interpretation,( ! [X] : ( ";
  for (int i = 0; i < n; ++i) out << (i ? " | X = " : "X = ") << e(i);
  out << " )";
  for (int i = 0; i < n; ++i) out << " & f(" << e(i) << ") = " << e((i + 1) % n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out << " & " << (i < j ? "" : "~ ") << "lt(" << e(i) << "," << e(j) << ")";
  out << " )).\n";
  return out.str();
}

void BM_ParseCorpusModel(benchmark::State& state) {
  const std::string text = read("NXF_Finite-Finite-Global.s");
  for (auto _ : state) benchmark::DoNotOptimize(parse_file(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseCorpusModel);

void BM_PrintCorpusModel(benchmark::State& state) {
  auto units = parse_file(read("NXF_Finite-Finite-Global.s")).units;
  for (auto _ : state) benchmark::DoNotOptimize(print_units(units));
}
BENCHMARK(BM_PrintCorpusModel);

void BM_AssembleBySize(benchmark::State& state) {
  auto units = parse_file(model_of_size(static_cast<int>(state.range(0)))).units;
  for (auto _ : state) benchmark::DoNotOptimize(assemble(units));
}
BENCHMARK(BM_AssembleBySize)->RangeMultiplier(2)->Range(4, 32);

// Three nested quantifiers: n^3 instances.
void BM_EvalTransitivity(benchmark::State& state) {
  auto units = parse_file(model_of_size(static_cast<int>(state.range(0)))).units;
  auto t = std::get<TarskianInterpretation>(assemble(units).interpretation);
  Formula f = parse_formula("! [X,Y,Z] : ( ( lt(X,Y) & lt(Y,Z) ) => lt(X,Z) )");
  for (auto _ : state) benchmark::DoNotOptimize(eval_formula(f, t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalTransitivity)->RangeMultiplier(2)->Range(4, 32)->Complexity(benchmark::oNCubed);

void BM_CheckFofCountermodel(benchmark::State& state) {
  auto problem = parse_file(read("FOF_Finite.p")).units;
  auto model = parse_file(read("FOF_Finite.s")).units;
  for (auto _ : state) benchmark::DoNotOptimize(check_model(problem, model));
}
BENCHMARK(BM_CheckFofCountermodel);

void BM_CheckKripkeCountermodel(benchmark::State& state) {
  auto problem = parse_file(read("NXF_Finite-Finite-Global.p")).units;
  auto model = parse_file(read("NXF_Finite-Finite-Global.s")).units;
  for (auto _ : state) benchmark::DoNotOptimize(check_model(problem, model));
}
BENCHMARK(BM_CheckKripkeCountermodel);

}  // namespace

BENCHMARK_MAIN();
