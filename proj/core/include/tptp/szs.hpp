#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tptp {

enum class SzsStatus { Satisfiable, CounterSatisfiable, Theorem, GaveUp, Error, ModelExtending };

const char* to_string(SzsStatus s);
std::optional<SzsStatus> szs_from_string(std::string_view s);

// `% SZS status <Status> for <name>`, no trailing newline.
std::string szs_report(SzsStatus s, std::string_view name);

}  // namespace tptp
