#include "tptp/role.hpp"

#include <array>

#include "role_internal.hpp"
#include "tptp/lexer.hpp"

namespace tptp {

const char* to_string(RoleBase b) {
  switch (b) {
    case RoleBase::Axiom: return "axiom";
    case RoleBase::Lemma: return "lemma";
    case RoleBase::Hypothesis: return "hypothesis";
    case RoleBase::Conjecture: return "conjecture";
    case RoleBase::NegatedConjecture: return "negated_conjecture";
    case RoleBase::Type: return "type";
    case RoleBase::Logic: return "logic";
    case RoleBase::Interpretation: return "interpretation";
    case RoleBase::FiDomain: return "fi_domain";
    case RoleBase::FiFunctors: return "fi_functors";
    case RoleBase::FiPredicates: return "fi_predicates";
    case RoleBase::Other: return "other";
  }
  return "other";
}

const char* to_string(Subrole s) {
  switch (s) {
    case Subrole::Domains: return "domains";
    case Subrole::Mappings: return "mappings";
    case Subrole::Worlds: return "worlds";
    case Subrole::Herbrand: return "herbrand";
    case Subrole::Local: return "local";
    case Subrole::Global: return "global";
  }
  return "domains";
}

Role Role::other_role(std::string name) {
  Role r(RoleBase::Other);
  r.other = std::move(name);
  return r;
}

bool Role::is_axiom_like() const {
  switch (base) {
    case RoleBase::Axiom:
    case RoleBase::Lemma:
    case RoleBase::Hypothesis:
    case RoleBase::NegatedConjecture:
      return true;
    case RoleBase::Other:
      return other == "definition" || other == "assumption" || other == "theorem" || other == "corollary";
    default:
      return false;
  }
}

namespace {

constexpr std::array kBases = {
    RoleBase::Axiom,          RoleBase::Lemma,        RoleBase::Hypothesis,  RoleBase::Conjecture,
    RoleBase::NegatedConjecture, RoleBase::Type,      RoleBase::Logic,       RoleBase::Interpretation,
    RoleBase::FiDomain,       RoleBase::FiFunctors,   RoleBase::FiPredicates,
};
constexpr std::array kSubroles = {Subrole::Domains, Subrole::Mappings, Subrole::Worlds,
                                  Subrole::Herbrand, Subrole::Local, Subrole::Global};
// Standard roles that carry no special meaning here but are not suspicious.
constexpr std::array<std::string_view, 6> kPlainRoles = {"definition", "assumption", "theorem",
                                                         "corollary", "plain", "unknown"};

std::optional<RoleBase> base_from(std::string_view w) {
  for (RoleBase b : kBases)
    if (w == to_string(b)) return b;
  return std::nullopt;
}

std::optional<Subrole> subrole_from(std::string_view w) {
  for (Subrole s : kSubroles)
    if (w == to_string(s)) return s;
  return std::nullopt;
}

[[noreturn]] void malformed(const std::string& msg, SourcePos pos) {
  throw SyntaxError(Diagnostic{Severity::Error, "MalformedArgs", msg, pos});
}

bool is_arg_token(const Token& t) {
  return t.kind == TokenKind::LowerWord || t.kind == TokenKind::SingleQuoted || t.kind == TokenKind::DollarWord ||
         t.kind == TokenKind::DollarDollarWord;
}

}  // namespace

namespace detail {

Role role_from_tokens(const std::vector<Token>& toks, SourcePos where, std::vector<Diagnostic>* warnings) {
  if (toks.empty() || toks[0].kind != TokenKind::LowerWord)
    throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken", "expected a role",
                                 toks.empty() ? where : toks[0].pos});
  const std::string& base_word = toks[0].text;
  auto base = base_from(base_word);

  std::optional<std::string> sub_word;
  std::optional<std::pair<std::string, std::string>> args;
  std::size_t i = 1;
  if (i < toks.size()) {
    if (toks[i].kind != TokenKind::Minus || i + 1 >= toks.size() || toks[i + 1].kind != TokenKind::LowerWord)
      throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken",
                                   "expected '-subrole' after role " + base_word, toks[i].pos});
    sub_word = toks[i + 1].text;
    i += 2;
  }
  if (i < toks.size()) {
    const SourcePos at = toks[i].pos;
    if (toks[i].kind != TokenKind::LParen) malformed("unexpected text after subrole", at);
    std::vector<std::string> parts;
    ++i;
    while (true) {
      if (i >= toks.size() || !is_arg_token(toks[i])) malformed("subrole arguments must be plain names", at);
      if (i + 1 < toks.size() && toks[i + 1].kind == TokenKind::LParen)
        malformed("compound terms are not allowed as subrole arguments", toks[i].pos);
      parts.push_back(toks[i].text);
      ++i;
      if (i < toks.size() && toks[i].kind == TokenKind::Comma) {
        ++i;
        continue;
      }
      if (i < toks.size() && toks[i].kind == TokenKind::RParen) {
        ++i;
        break;
      }
      malformed("expected ',' or ')' in subrole arguments", i < toks.size() ? toks[i].pos : at);
    }
    if (i != toks.size()) malformed("unexpected text after subrole arguments", toks[i].pos);
    if (parts.size() != 2) malformed("subrole arguments must be a pair", at);
    args = std::make_pair(parts[0], parts[1]);
  }

  auto warn = [&](const std::string& code, const std::string& msg) {
    if (warnings) warnings->push_back(Diagnostic{Severity::Warning, code, msg, toks[0].pos});
  };

  if (!base) {
    std::string spelled = base_word;
    if (sub_word) spelled += "-" + *sub_word;
    if (args) spelled += "(" + args->first + ", " + args->second + ")";
    bool plain = false;
    for (auto p : kPlainRoles) plain = plain || base_word == p;
    if (!plain || sub_word) warn("UnknownRole", "unknown role '" + spelled + "' kept as given");
    return Role::other_role(spelled);
  }

  Role r(*base);
  if (sub_word) {
    auto sub = subrole_from(*sub_word);
    if (!sub) {
      std::string spelled = base_word + "-" + *sub_word;
      if (args) spelled += "(" + args->first + ", " + args->second + ")";
      warn("UnknownSubrole", "unknown subrole '" + *sub_word + "' kept as role '" + spelled + "'");
      return Role::other_role(spelled);
    }
    r.subrole = *sub;
  }
  if (args) {
    if (r.subrole != Subrole::Domains && r.subrole != Subrole::Mappings)
      malformed("only the domains and mappings subroles take arguments", toks[0].pos);
    r.subrole_args = std::move(args);
  }
  return r;
}

}  // namespace detail

Role parse_role(std::string_view text, std::vector<Diagnostic>* warnings) {
  return detail::role_from_tokens(tokenize(text), SourcePos{1, 1}, warnings);
}

std::string print_role(const Role& r) {
  if (r.base == RoleBase::Other) return r.other;
  std::string out = to_string(r.base);
  if (r.subrole) {
    out += '-';
    out += to_string(*r.subrole);
  }
  if (r.subrole_args) out += "(" + r.subrole_args->first + ", " + r.subrole_args->second + ")";
  return out;
}

}  // namespace tptp
