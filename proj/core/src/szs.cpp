#include "tptp/szs.hpp"

#include <array>
#include <utility>

namespace tptp {

namespace {

constexpr std::array<std::pair<SzsStatus, const char*>, 6> kNames{{
    {SzsStatus::Satisfiable, "Satisfiable"},
    {SzsStatus::CounterSatisfiable, "CounterSatisfiable"},
    {SzsStatus::Theorem, "Theorem"},
    {SzsStatus::GaveUp, "GaveUp"},
    {SzsStatus::Error, "Error"},
    {SzsStatus::ModelExtending, "ModelExtending"},
}};

}  // namespace

const char* to_string(SzsStatus s) {
  for (const auto& [k, n] : kNames)
    if (k == s) return n;
  return "Error";
}

std::optional<SzsStatus> szs_from_string(std::string_view s) {
  // Accept the three-letter SZS abbreviations too.
  if (s == "SAT") return SzsStatus::Satisfiable;
  if (s == "CSA") return SzsStatus::CounterSatisfiable;
  if (s == "THM") return SzsStatus::Theorem;
  if (s == "GUP") return SzsStatus::GaveUp;
  if (s == "ERR") return SzsStatus::Error;
  if (s == "MEX") return SzsStatus::ModelExtending;
  for (const auto& [k, n] : kNames)
    if (s == n) return k;
  return std::nullopt;
}

std::string szs_report(SzsStatus s, std::string_view name) {
  std::string out = "% SZS status ";
  out += to_string(s);
  out += " for ";
  out += name;
  return out;
}

}  // namespace tptp
