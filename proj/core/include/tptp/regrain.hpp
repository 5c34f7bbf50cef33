#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tptp/assemble.hpp"

namespace tptp {

enum class Granularity { Coarse, Medium, Fine };

const char* to_string(Granularity g);
std::optional<Granularity> granularity_from_string(std::string_view s);

// Rewrites the interpretation units of `units` at the requested split level:
// coarse is one `interpretation` unit; medium splits into `-worlds`,
// `-domains` and `-mappings` units; fine gives one unit per domain
// (`interpretation-domains(P, D)`) and per symbol
// (`interpretation-mappings(f, R)`). Other units keep their place; the new
// units replace the first interpretation unit. Throws AssemblyError.
std::vector<AnnotatedFormula> regrain(const std::vector<AnnotatedFormula>& units, Granularity target,
                                      const AssembleOptions& options = {});

}  // namespace tptp
