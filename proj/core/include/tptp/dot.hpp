#pragma once

#include <string>

#include "tptp/interpretation.hpp"

namespace tptp {

enum class DotView { Domains, Worlds };

// Graphviz rendering of a finite interpretation. The domains view draws
// elements as nodes, unary functions as labelled edges and n-ary function
// entries through small tuple nodes; true predicate entries are dashed edges
// (unary ones mark the element). The worlds view draws the worlds and the
// positive accessibility pairs, with the local world doubled.
std::string to_dot(const TarskianInterpretation& t);
std::string to_dot(const KripkeInterpretation& k, DotView view);
std::string to_dot(const Interpretation& i, DotView view);

}  // namespace tptp
