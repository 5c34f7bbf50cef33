#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tptp/diagnostics.hpp"

namespace tptp {

enum class RoleBase {
  Axiom,
  Lemma,
  Hypothesis,
  Conjecture,
  NegatedConjecture,
  Type,
  Logic,
  Interpretation,
  FiDomain,
  FiFunctors,
  FiPredicates,
  Other,  // any other role; the spelling is kept in Role::other
};

enum class Subrole { Domains, Mappings, Worlds, Herbrand, Local, Global };

const char* to_string(RoleBase b);
const char* to_string(Subrole s);

// The role field of an annotated formula, e.g. `interpretation-domains(human, d_human)`.
struct Role {
  RoleBase base = RoleBase::Axiom;
  std::string other;  // spelling when base == Other
  std::optional<Subrole> subrole;
  // Only for the domains and mappings subroles: (problem type, domain type)
  // or (symbol, result domain type).
  std::optional<std::pair<std::string, std::string>> subrole_args;

  Role() = default;
  Role(RoleBase b) : base(b) {}  // NOLINT(google-explicit-constructor)
  Role(RoleBase b, Subrole s) : base(b), subrole(s) {}

  static Role other_role(std::string name);

  bool is(RoleBase b) const { return base == b; }
  bool is_interpretation() const { return base == RoleBase::Interpretation; }
  bool is_legacy_interpretation() const {
    return base == RoleBase::FiDomain || base == RoleBase::FiFunctors || base == RoleBase::FiPredicates;
  }
  // Roles whose formulae are asserted in a problem: axiom, hypothesis, lemma, definition, ...
  bool is_axiom_like() const;

  friend bool operator==(const Role&, const Role&) = default;
};

// Thrown by parse_role on unrecoverable role syntax (MalformedArgs).
Role parse_role(std::string_view text, std::vector<Diagnostic>* warnings = nullptr);
std::string print_role(const Role& r);

}  // namespace tptp
