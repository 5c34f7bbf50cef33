#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tptp/parser.hpp"

namespace tptp::test {

inline std::string fixture_path(const std::string& name) { return std::string(TPTP_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline ParseResult parse_fixture(const std::string& name) { return parse_file(read_fixture(name)); }

inline std::vector<AnnotatedFormula> load(const std::string& name) {
  ParseResult r = parse_fixture(name);
  if (!r.ok()) throw std::runtime_error("fixture " + name + " does not parse");
  return std::move(r.units);
}

// Every example class: problems and models.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> files{
      "FOF_Finite.p",
      "FOF_Finite.s",
      "FOF_Finite_Medium.s",
      "FOF_Finite_Fine.s",
      "FOF_Formulae.s",
      "FOF_Saturation.s",
      "TFF_Finite.p",
      "TFF_Finite.s",
      "TFF_Finite_SeparateDomains.s",
      "TFF_Finite_Medium.s",
      "TFF_Finite_Fine.s",
      "TFF_Finite_Compact.s",
      "THF_Finite.p",
      "THF_Finite.s",
      "THF_Finite_Medium.s",
      "TFF_Infinite.p",
      "TFF_Peano.s",
      "TFF_Integer.s",
      "NXF_Finite-Finite-Global.p",
      "NXF_Finite-Finite-Global.s",
      "NXF_Finite-Finite-Global_Medium.s",
      "NXF_Finite-Finite-Global_Fine.s",
      "NXF_Finite-Finite-Global_Compact.s",
      "NXF_Finite-Finite-Local.p",
      "NXF_Finite-Finite-Local.s",
  };
  return files;
}

// Models of the same interpretation split at different granularities. The
// compacted fixtures are left out: they keep general clauses.
struct GrainFamily {
  std::string coarse;
  std::vector<std::string> variants;
};

inline const std::vector<GrainFamily>& grain_families() {
  static const std::vector<GrainFamily> families{
      {"FOF_Finite.s", {"FOF_Finite_Medium.s", "FOF_Finite_Fine.s"}},
      {"TFF_Finite_SeparateDomains.s", {"TFF_Finite_Medium.s", "TFF_Finite_Fine.s"}},
      {"TFF_Finite.s", {}},
      {"THF_Finite.s", {"THF_Finite_Medium.s"}},
      {"TFF_Peano.s", {}},
      {"TFF_Integer.s", {}},
      {"NXF_Finite-Finite-Global.s", {"NXF_Finite-Finite-Global_Medium.s", "NXF_Finite-Finite-Global_Fine.s"}},
      {"NXF_Finite-Finite-Local.s", {}},
  };
  return families;
}

}  // namespace tptp::test
