#pragma once

#include <string>
#include <vector>

#include "tptp/interpretation.hpp"

namespace tptp {

struct MissingTuple {
  std::string symbol;
  std::vector<ElementId> args;

  friend bool operator==(const MissingTuple&, const MissingTuple&) = default;
  friend auto operator<=>(const MissingTuple&, const MissingTuple&) = default;
};

struct SkippedSymbol {
  std::string symbol;
  std::string reason;  // e.g. an infinite or function-typed argument
};

struct CompletenessReport {
  std::vector<MissingTuple> missing;  // per symbol in mapping order, tuples in domain order
  std::vector<SkippedSymbol> skipped;

  bool complete() const { return missing.empty(); }
};

// Every tuple of a mapped or declared symbol that has neither an entry nor an
// unguarded general clause covering it. Promotion functions, domain elements,
// constructors and worlds are not symbols to be mapped.
CompletenessReport completeness_check(const TarskianInterpretation& interp);

}  // namespace tptp
