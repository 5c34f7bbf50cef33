#include "tptp/regrain.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "patterns.hpp"

namespace tptp {

const char* to_string(Granularity g) {
  switch (g) {
    case Granularity::Coarse: return "coarse";
    case Granularity::Medium: return "medium";
    case Granularity::Fine: return "fine";
  }
  return "coarse";
}

std::optional<Granularity> granularity_from_string(std::string_view s) {
  if (s == "coarse") return Granularity::Coarse;
  if (s == "medium") return Granularity::Medium;
  if (s == "fine") return Granularity::Fine;
  return std::nullopt;
}

namespace {

enum class Group { Worlds, Domains, Mappings, Other };

// Conjuncts of one unit-to-be, split by world scope. Scope "" is top level,
// "w:<world>" one world, "all:<var>" a `! [V: $world] : $in_world(V, ...)`.
struct Bucket {
  Group group = Group::Other;
  std::string key;
  std::vector<std::pair<std::string, std::vector<ExprPtr>>> scopes;

  void add(const std::string& scope, const ExprPtr& c) {
    for (auto& [s, items] : scopes)
      if (s == scope) {
        items.push_back(c);
        return;
      }
    scopes.push_back({scope, {c}});
  }
};

ExprPtr render(const std::vector<const Bucket*>& parts) {
  std::vector<std::pair<std::string, std::vector<ExprPtr>>> merged;
  for (const Bucket* b : parts)
    for (const auto& [scope, items] : b->scopes) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first == scope; });
      if (it == merged.end()) {
        merged.push_back({scope, items});
      } else {
        it->second.insert(it->second.end(), items.begin(), items.end());
      }
    }
  // Top-level conjuncts first, then one wrapper per world scope.
  std::stable_partition(merged.begin(), merged.end(), [](const auto& m) { return m.first.empty(); });
  std::vector<ExprPtr> conjuncts;
  for (const auto& [scope, items] : merged) {
    if (scope.empty()) {
      conjuncts.insert(conjuncts.end(), items.begin(), items.end());
    } else if (scope.rfind("w:", 0) == 0) {
      conjuncts.push_back(make_apply("$in_world", {make_apply(scope.substr(2)), make_conjunction(items)}));
    } else {
      const std::string var = scope.substr(4);
      conjuncts.push_back(make_quantified(Quantifier::Forall, {TypedVariable{var, make_base_type("$world")}},
                                          make_apply("$in_world", {make_variable(var), make_conjunction(items)})));
    }
  }
  return make_conjunction(conjuncts);
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  while (!out.empty() && out.front() == '_') out.erase(0, 1);
  return out.empty() ? std::string("x") : out;
}

std::string base_name(const std::vector<std::string>& names) {
  std::string prefix = names.front();
  for (const auto& n : names) {
    std::size_t i = 0;
    while (i < prefix.size() && i < n.size() && prefix[i] == n[i]) ++i;
    prefix.resize(i);
  }
  if (prefix.empty() || prefix.front() == '\'') {
    prefix = names.front();
    if (auto u = prefix.find('_'); u != std::string::npos && u > 0) prefix.resize(u);
  }
  prefix = sanitize(prefix);
  if (!std::islower(static_cast<unsigned char>(prefix.front()))) prefix = "interp_" + prefix;
  return prefix;
}

}  // namespace

std::vector<AnnotatedFormula> regrain(const std::vector<AnnotatedFormula>& units, Granularity target,
                                      const AssembleOptions& options) {
  const AssemblyResult assembled = assemble(units, options);

  std::vector<std::size_t> interp_idx;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (is_interpretation_unit(units[i]) && units[i].role.subrole != Subrole::Herbrand) interp_idx.push_back(i);
  if (interp_idx.empty()) return units;

  std::vector<TypeDeclaration> decls;
  for (const auto& u : units)
    if (const auto* d = u.type_declaration()) decls.push_back(*d);
  std::set<std::string> worlds = detail::world_constants(decls);

  const TarskianInterpretation empty;
  const KripkeInterpretation* kripke = std::get_if<KripkeInterpretation>(&assembled.interpretation);
  if (kripke) worlds.insert(kripke->worlds.begin(), kripke->worlds.end());
  auto tarskian_for = [&](const std::string& world) -> const TarskianInterpretation& {
    if (!kripke) return std::get<TarskianInterpretation>(assembled.interpretation);
    auto it = kripke->per_world.find(world);
    if (it != kripke->per_world.end()) return it->second.tarskian;
    if (!kripke->worlds.empty()) return kripke->per_world.at(kripke->worlds.front()).tarskian;
    return empty;
  };
  const std::string first_world = kripke && !kripke->worlds.empty() ? kripke->worlds.front() : std::string();

  std::vector<Bucket> buckets;
  auto bucket = [&](Group g, const std::string& key) -> Bucket& {
    for (auto& b : buckets)
      if (b.group == g && b.key == key) return b;
    buckets.push_back(Bucket{g, key, {}});
    return buckets.back();
  };
  auto place = [&](const ExprPtr& c, const std::string& scope, const TarskianInterpretation& t) {
    const auto shape = detail::analyze_component(c, worlds);
    switch (shape.kind) {
      case ComponentKind::WorldEnumeration:
      case ComponentKind::WorldDistinctness:
      case ComponentKind::AccessibilityLiteral:
      case ComponentKind::LocalWorldAssignment:
        bucket(Group::Worlds, "").add(scope, c);
        return;
      case ComponentKind::DomainEnumeration:
      case ComponentKind::Distinctness:
      case ComponentKind::Surjectivity:
      case ComponentKind::Injectivity:
      case ComponentKind::ElementClosure:
      case ComponentKind::ElementExistence: {
        const std::string key = detail::domain_key(shape, t);
        bucket(key.empty() ? Group::Other : Group::Domains, key).add(scope, c);
        return;
      }
      case ComponentKind::FunctionMapping:
      case ComponentKind::PredicateMapping: {
        const std::string sym = detail::mapping_symbol(c, t);
        bucket(sym.empty() ? Group::Other : Group::Mappings, sym).add(scope, c);
        return;
      }
      default:
        bucket(Group::Other, "").add(scope, c);
    }
  };

  for (std::size_t i : interp_idx) {
    for (const auto& c : conjuncts_of(*units[i].formula())) {
      const auto shape = detail::analyze_component(c, worlds);
      if (kripke && shape.kind == ComponentKind::InWorldWrapper) {
        const bool all = !shape.world_var.empty();
        const std::string scope = all ? "all:" + shape.world_var : "w:" + shape.symbol;
        const TarskianInterpretation& t = tarskian_for(all ? first_world : shape.symbol);
        for (const auto& inner : conjuncts_of(shape.body)) place(inner, scope, t);
      } else {
        place(c, "", tarskian_for(first_world));
      }
    }
  }

  // Plan the output units: (role, name suffix, buckets).
  struct Planned {
    Role role;
    std::string suffix;
    std::vector<const Bucket*> parts;
  };
  std::vector<Planned> plan;
  auto of_group = [&](Group g) {
    std::vector<const Bucket*> out;
    for (const auto& b : buckets)
      if (b.group == g) out.push_back(&b);
    return out;
  };
  if (target == Granularity::Coarse) {
    std::vector<const Bucket*> all;
    for (Group g : {Group::Worlds, Group::Domains, Group::Mappings, Group::Other})
      for (const Bucket* b : of_group(g)) all.push_back(b);
    plan.push_back({Role(RoleBase::Interpretation), "", all});
  } else {
    if (auto w = of_group(Group::Worlds); !w.empty())
      plan.push_back({Role(RoleBase::Interpretation, Subrole::Worlds), "_worlds", w});
    if (target == Granularity::Medium) {
      if (auto d = of_group(Group::Domains); !d.empty())
        plan.push_back({Role(RoleBase::Interpretation, Subrole::Domains), "_domains", d});
      if (auto m = of_group(Group::Mappings); !m.empty())
        plan.push_back({Role(RoleBase::Interpretation, Subrole::Mappings), "_mappings", m});
    } else {
      const TarskianInterpretation& t = tarskian_for(first_world);
      for (const Bucket* b : of_group(Group::Domains)) {
        Role r(RoleBase::Interpretation, Subrole::Domains);
        const DomainSpec* d = t.domain_by_type(b->key);
        r.subrole_args = std::make_pair(d ? d->problem_type : b->key, b->key);
        plan.push_back({r, "_domain_" + sanitize(d ? d->problem_type : b->key), {b}});
      }
      for (const Bucket* b : of_group(Group::Mappings)) {
        Role r(RoleBase::Interpretation, Subrole::Mappings);
        std::string result = "$i";
        if (const SymbolMapping* m = t.mapping(b->key)) {
          result = m->result_type;
          if (!m->predicate)
            if (const DomainSpec* d = t.domain_for(m->result_type)) result = d->domain_type;
        }
        r.subrole_args = std::make_pair(b->key, result);
        plan.push_back({r, "_mapping_" + sanitize(b->key), {b}});
      }
    }
    if (auto o = of_group(Group::Other); !o.empty()) plan.push_back({Role(RoleBase::Interpretation), "_other", o});
  }

  std::vector<std::string> interp_names;
  for (std::size_t i : interp_idx) interp_names.push_back(units[i].name);
  const std::string base = base_name(interp_names);
  std::set<std::string> taken;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (std::find(interp_idx.begin(), interp_idx.end(), i) == interp_idx.end()) taken.insert(units[i].name);

  std::vector<AnnotatedFormula> fresh;
  const AnnotatedFormula& first = units[interp_idx.front()];
  for (const auto& p : plan) {
    std::string name = base + p.suffix;
    for (int n = 2; taken.count(name); ++n) name = base + p.suffix + "_" + std::to_string(n);
    taken.insert(name);
    AnnotatedFormula u;
    u.language = first.language;
    u.name = name;
    u.role = p.role;
    u.body = render(p.parts);
    u.pos = first.pos;
    fresh.push_back(std::move(u));
  }

  std::vector<AnnotatedFormula> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i == interp_idx.front()) out.insert(out.end(), fresh.begin(), fresh.end());
    if (std::find(interp_idx.begin(), interp_idx.end(), i) == interp_idx.end()) out.push_back(units[i]);
  }
  return out;
}

}  // namespace tptp
