#include "tptp/assemble.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "patterns.hpp"
#include "tptp/printer.hpp"

namespace tptp {

AssemblyError::AssemblyError(Diagnostic d) : std::runtime_error(format(d)), diag_(std::move(d)) {}

namespace detail {

ExprPtr strip_promotions(const ExprPtr& t, const TarskianInterpretation& interp) {
  Spine s;
  if (application_spine(t, s) && s.args.size() == 1 && interp.domain_of_promotion(s.head))
    return strip_promotions(s.args[0], interp);
  return t;
}

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
}

bool is_constructor(const std::string& head, std::size_t arity, const DomainSpec& d) {
  if (!d.infinite || d.infinite->kind != InfiniteDescriptor::Kind::TermGenerated) return false;
  return std::any_of(d.infinite->constructors.begin(), d.infinite->constructors.end(),
                     [&](const auto& c) { return c.first == head && c.second == arity; });
}

bool is_any_constructor(const std::string& head, const TarskianInterpretation& interp) {
  for (const auto& d : interp.domains)
    if (d.infinite && d.infinite->kind == InfiniteDescriptor::Kind::TermGenerated)
      for (const auto& c : d.infinite->constructors)
        if (c.first == head) return true;
  return false;
}

bool value_like(const ExprPtr& e) {
  return e->is(ExprKind::Variable) || e->is(ExprKind::DistinctObject) || e->is(ExprKind::Number) || is_lambda(e);
}

}  // namespace

const DomainSpec* element_domain(const ExprPtr& t, const TarskianInterpretation& interp) {
  if (!is_ground(t)) return nullptr;
  if (t->is(ExprKind::Number)) {
    if (is_integer_text(t->text)) return interp.domain_by_type("$int");
    if (t->text.find('/') != std::string::npos) return interp.domain_by_type("$rat");
    return interp.domain_by_type("$real");
  }
  const ElementId key = element_key(t);
  for (const auto& d : interp.domains)
    if (d.is_finite() && d.has_element(key)) return &d;
  Spine s;
  if (application_spine(t, s)) {
    for (const auto& d : interp.domains) {
      if (!is_constructor(s.head, s.args.size(), d)) continue;
      if (std::all_of(s.args.begin(), s.args.end(),
                      [&](const ExprPtr& a) { return element_domain(a, interp) == &d; }))
        return &d;
    }
  }
  return nullptr;
}

std::string mapping_symbol(const ExprPtr& conjunct, const TarskianInterpretation& interp) {
  ExprPtr b = strip_forall(conjunct);
  while (b->is_binary(Connective::Implies)) b = strip_forall(b->rhs());
  if (b->is_binary(Connective::Iff)) return is_plain_atom(b->lhs()) ? atom_head(b->lhs()) : std::string();
  if (b->is(ExprKind::Not)) return is_plain_atom(b->body()) ? atom_head(b->body()) : std::string();
  if (b->is(ExprKind::Equality) && !b->negated) {
    auto candidate = [&](const ExprPtr& side) -> std::string {
      ExprPtr s = strip_promotions(side, interp);
      if (value_like(s)) return {};
      const std::string h = atom_head(s);
      if (h.empty() || h[0] == '$' || interp.domain_of_promotion(h) || element_domain(s, interp) ||
          is_any_constructor(h, interp))
        return {};
      return h;
    };
    std::string h = candidate(b->lhs());
    return h.empty() ? candidate(b->rhs()) : h;
  }
  return is_plain_atom(b) ? atom_head(b) : std::string();
}

std::string domain_key(const ComponentShape& shape, const TarskianInterpretation& interp) {
  switch (shape.kind) {
    case ComponentKind::Surjectivity:
      return shape.type;
    case ComponentKind::Injectivity:
      if (const auto* d = interp.domain_of_promotion(shape.symbol)) return d->domain_type;
      [[fallthrough]];
    case ComponentKind::DomainEnumeration:
    case ComponentKind::ElementClosure:
    case ComponentKind::ElementExistence:
      if (const auto* d = interp.domain_for(shape.type)) return d->domain_type;
      return shape.type;
    case ComponentKind::Distinctness:
      if (shape.implied) {
        if (const auto* d = interp.domain_for(shape.type)) return d->domain_type;
        return shape.type;
      }
      for (const auto& t : shape.terms)
        if (const auto* d = element_domain(t, interp)) return d->domain_type;
      return {};
    default:
      return {};
  }
}

}  // namespace detail

namespace {

using detail::ComponentShape;

struct Item {
  ExprPtr conj;
  std::string unit;
  SourcePos pos;
};

[[noreturn]] void fail(const std::string& code, const std::string& msg, SourcePos pos) {
  throw AssemblyError(Diagnostic{Severity::Error, code, msg, pos});
}

bool is_builtin_type(const std::string& t) { return t == "$int" || t == "$rat" || t == "$real"; }

class TarskiBuilder {
 public:
  TarskiBuilder(const std::vector<TypeDeclaration>& decls, const std::set<std::string>& worlds,
                std::vector<Diagnostic>& warnings)
      : decls_(decls), worlds_(worlds), warnings_(warnings) {}

  TarskianInterpretation build(const std::vector<Item>& items) {
    t_.type_decls = decls_;
    std::vector<ComponentShape> shapes;
    shapes.reserve(items.size());
    for (const auto& it : items) shapes.push_back(detail::analyze_component(it.conj, worlds_));

    auto each = [&](std::initializer_list<ComponentKind> kinds, auto&& fn) {
      for (std::size_t i = 0; i < items.size(); ++i)
        if (std::find(kinds.begin(), kinds.end(), shapes[i].kind) != kinds.end()) fn(shapes[i], items[i]);
    };
    each({ComponentKind::Surjectivity}, [&](auto& s, auto& it) { add_surjectivity(s, it); });
    each({ComponentKind::DomainEnumeration}, [&](auto& s, auto& it) { add_enumeration(s, it); });
    each({ComponentKind::ElementClosure}, [&](auto& s, auto& it) { add_closure(s, it); });
    each({ComponentKind::Injectivity}, [&](auto& s, auto& it) { add_injectivity(s, it); });
    infer_promotions();
    each({ComponentKind::Distinctness}, [&](auto& s, auto& it) { add_distinctness(s, it); });
    each({ComponentKind::FunctionMapping, ComponentKind::PredicateMapping},
         [&](auto& s, auto& it) { add_mapping(s, it); });
    for (std::size_t i = 0; i < items.size(); ++i) {
      switch (shapes[i].kind) {
        case ComponentKind::DomainEnumeration:
        case ComponentKind::Distinctness:
        case ComponentKind::Surjectivity:
        case ComponentKind::Injectivity:
        case ComponentKind::FunctionMapping:
        case ComponentKind::PredicateMapping:
        case ComponentKind::ElementClosure:
          break;
        default:
          t_.constraints.push_back(items[i].conj);
      }
    }
    return std::move(t_);
  }

 private:
  DomainSpec& domain(const std::string& type) {
    for (auto& d : t_.domains)
      if (d.domain_type == type) return d;
    for (auto& d : t_.domains)
      if (d.problem_type == type) return d;
    DomainSpec d;
    d.problem_type = type;
    d.domain_type = type;
    if (is_builtin_type(type)) {
      d.infinite = InfiniteDescriptor{};
      d.distinctness = Distinctness::ByBuiltinType;
    }
    t_.domains.push_back(std::move(d));
    return t_.domains.back();
  }

  DomainSpec* find_domain_type(const std::string& type) {
    for (auto& d : t_.domains)
      if (d.domain_type == type) return &d;
    return nullptr;
  }

  void add_surjectivity(const ComponentShape& s, const Item& it) {
    DomainSpec* d = find_domain_type(s.type);
    if (!d) {
      DomainSpec fresh;
      fresh.domain_type = s.type;
      if (is_builtin_type(s.type)) {
        fresh.infinite = InfiniteDescriptor{};
        fresh.distinctness = Distinctness::ByBuiltinType;
      }
      t_.domains.push_back(std::move(fresh));
      d = &t_.domains.back();
    }
    if (d->promotion && d->promotion->function_symbol != s.symbol)
      fail("ConflictingEntry",
           "domain " + s.type + " promoted by both " + d->promotion->function_symbol + " and " + s.symbol, it.pos);
    d->problem_type = s.problem_type;
    if (!d->promotion) d->promotion = PromotionBijection{};
    d->promotion->function_symbol = s.symbol;
    d->promotion->surjectivity = it.conj;
  }

  void add_enumeration(const ComponentShape& s, const Item& it) {
    DomainSpec& d = domain(s.type);
    std::vector<ExprPtr> elems;
    std::set<ElementId> seen;
    for (const auto& e : s.terms)
      if (seen.insert(element_key(e)).second) elems.push_back(e);
    if (d.enumeration) {
      const auto old = d.element_ids();
      if (std::set<ElementId>(old.begin(), old.end()) != seen)
        fail("ConflictingEntry", "domain " + d.domain_type + " is enumerated twice with different elements", it.pos);
      return;
    }
    d.elements = std::move(elems);
    d.enumeration = it.conj;
    if (std::all_of(d.elements.begin(), d.elements.end(),
                    [](const ExprPtr& e) { return e->is(ExprKind::DistinctObject); }))
      d.distinctness = Distinctness::DistinctObjects;
  }

  void add_closure(const ComponentShape& s, const Item& it) {
    DomainSpec& d = domain(s.type);
    InfiniteDescriptor inf;
    inf.kind = InfiniteDescriptor::Kind::TermGenerated;
    inf.generator = it.conj;
    inf.constructors = s.constructors;
    d.infinite = std::move(inf);
  }

  void add_injectivity(const ComponentShape& s, const Item& it) {
    DomainSpec* d = nullptr;
    for (auto& x : t_.domains)
      if (x.promotion && x.promotion->function_symbol == s.symbol) d = &x;
    if (!d) d = &domain(s.type);
    if (d->promotion && d->promotion->function_symbol != s.symbol)
      fail("ConflictingEntry",
           "domain " + d->domain_type + " promoted by both " + d->promotion->function_symbol + " and " + s.symbol,
           it.pos);
    if (!d->promotion) d->promotion = PromotionBijection{};
    d->promotion->function_symbol = s.symbol;
    d->promotion->injectivity = it.conj;
  }

  // A declared `f: d > p` from a domain type to a different problem type is
  // a promotion function even when its surjectivity formula is missing.
  void infer_promotions() {
    std::set<std::string> user_types;
    for (const auto& d : decls_)
      if (d.declares_type()) user_types.insert(d.symbol);
    for (const auto& decl : decls_) {
      if (!decl.type || !decl.type->is_arrow() || decl.type->args.size() != 1) continue;
      const Type& arg = *decl.type->args[0];
      const Type& res = *decl.type->result;
      if (arg.is_arrow() || res.is_arrow() || arg.name == res.name || !user_types.count(res.name)) continue;
      DomainSpec* d = find_domain_type(arg.name);
      if (!d || d->promotion || d->problem_type != d->domain_type || find_domain_type(res.name)) continue;
      d->problem_type = res.name;
      d->promotion = PromotionBijection{decl.symbol, nullptr, nullptr};
    }
  }

  void add_distinctness(const ComponentShape& s, const Item& it) {
    if (s.implied) {
      DomainSpec& d = domain(s.type);
      if (d.distinctness == Distinctness::Unstated) d.distinctness = Distinctness::ImpliedByFormula;
      d.distinctness_formulas.push_back(it.conj);
      return;
    }
    std::vector<std::pair<ElementId, DomainSpec*>> ids;
    for (const auto& term : s.terms) {
      const DomainSpec* d = detail::element_domain(term, t_);
      if (!d) fail("UnknownElement", print_expr(term) + " in a distinctness statement is not a domain element", it.pos);
      ids.emplace_back(element_key(term), const_cast<DomainSpec*>(d));
    }
    const bool predicate = it.conj->is_apply_of("$distinct");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (ids[i].first == ids[j].first)
          fail("ConflictingEntry", "element " + ids[i].first + " is stated to differ from itself", it.pos);
        if (ids[i].second == ids[j].second) ids[i].second->distinct_pairs.insert(std::minmax(ids[i].first, ids[j].first));
      }
    }
    std::set<DomainSpec*> touched;
    for (auto& [id, d] : ids) touched.insert(d);
    for (DomainSpec* d : touched)
      if (d->distinctness == Distinctness::Unstated)
        d->distinctness = predicate ? Distinctness::DistinctPredicate : Distinctness::PairwiseInequalities;
    if (!ids.empty()) ids.front().second->distinctness_formulas.push_back(it.conj);
  }

  SymbolMapping& mapping(const std::string& sym, bool predicate, std::size_t arity, SourcePos pos) {
    for (auto& m : t_.mappings) {
      if (m.symbol != sym) continue;
      if (m.predicate != predicate)
        fail("ConflictingEntry", "symbol " + sym + " is mapped both as a function and as a predicate", pos);
      return m;
    }
    SymbolMapping m;
    m.symbol = sym;
    m.predicate = predicate;
    const TypeDeclaration* decl = nullptr;
    for (const auto& d : decls_)
      if (d.symbol == sym) decl = &d;
    if (decl && decl->type) {
      detail::flatten_signature(decl->type, m.arg_types, m.result_type);
      m.arity = m.arg_types.size();
      m.predicate = m.result_type == "$o";  // the declaration wins over the clause shape
    } else {
      m.arity = arity;
      m.arg_types.assign(arity, "$i");
      m.result_type = predicate ? "$o" : "$i";
    }
    t_.mappings.push_back(std::move(m));
    return t_.mappings.back();
  }

  bool declared_predicate(const std::string& sym, bool fallback) const {
    for (const auto& d : decls_) {
      if (d.symbol != sym || !d.type) continue;
      std::vector<std::string> args;
      std::string res;
      detail::flatten_signature(d.type, args, res);
      return res == "$o";
    }
    return fallback;
  }

  void set_entry(SymbolMapping& m, std::vector<ElementId> args, ElementId value, SourcePos pos) {
    auto it = m.index.find(args);
    if (it != m.index.end()) {
      const ElementId& old = m.entries[it->second].second;
      if (old != value) {
        std::string call = m.symbol;
        if (!args.empty()) {
          call += '(';
          for (std::size_t i = 0; i < args.size(); ++i) call += (i ? "," : "") + args[i];
          call += ')';
        }
        fail("ConflictingEntry", call + " is mapped to both " + old + " and " + value, pos);
      }
      return;
    }
    m.index.emplace(args, m.entries.size());
    m.entries.emplace_back(std::move(args), std::move(value));
  }

  std::vector<ElementId> element_args(const Spine& s, const Item& it) {
    std::vector<ElementId> out;
    for (const auto& a : s.args) {
      ExprPtr stripped = detail::strip_promotions(a, t_);
      if (!detail::element_domain(stripped, t_))
        fail("UnknownElement", "argument " + print_expr(a) + " of " + s.head + " is not a domain element", it.pos);
      out.push_back(element_key(stripped));
    }
    return out;
  }

  enum class Outcome { Entry, General, Constraint };

  Outcome ground_entry(const Item& it) {
    const ExprPtr& c = it.conj;
    const bool negative = c->is(ExprKind::Not);
    const ExprPtr atom = negative ? c->body() : c;
    if (detail::is_plain_atom(atom) && !(negative && atom->is(ExprKind::Equality))) {
      Spine s;
      application_spine(atom, s);
      auto args = element_args(s, it);
      SymbolMapping& m = mapping(s.head, declared_predicate(s.head, true), s.args.size(), it.pos);
      if (!m.predicate) return Outcome::Constraint;
      set_entry(m, std::move(args), negative ? kFalseValue : kTrueValue, it.pos);
      return Outcome::Entry;
    }
    if (!c->is(ExprKind::Equality) || c->negated) return Outcome::General;
    const ExprPtr l = detail::strip_promotions(c->lhs(), t_);
    const ExprPtr r = detail::strip_promotions(c->rhs(), t_);
    const DomainSpec* dl = detail::element_domain(l, t_);
    const DomainSpec* dr = detail::element_domain(r, t_);
    ExprPtr key;
    ExprPtr value;
    if (dr && !dl) {
      key = l;
      value = r;
    } else if (dl && !dr) {
      key = r;
      value = l;
    } else if (dl && dr) {
      warnings_.push_back(Diagnostic{Severity::Warning, "ElementEquation",
                                     "equation between domain elements kept as a constraint: " + print_expr(c), it.pos});
      return Outcome::Constraint;
    } else if (detail::is_lambda(r) || detail::is_lambda(l)) {
      return Outcome::General;
    } else {
      fail("UnknownElement", "neither side of " + print_expr(c) + " is a domain element", it.pos);
    }
    Spine s;
    if (!application_spine(key, s) || s.head.empty() || s.head[0] == '$') return Outcome::Constraint;
    auto args = element_args(s, it);
    SymbolMapping& m = mapping(s.head, declared_predicate(s.head, false), s.args.size(), it.pos);
    set_entry(m, std::move(args), element_key(value), it.pos);
    return Outcome::Entry;
  }

  void add_mapping(const ComponentShape& s, const Item& it) {
    if (is_ground(it.conj)) {
      switch (ground_entry(it)) {
        case Outcome::Entry: return;
        case Outcome::Constraint: t_.constraints.push_back(it.conj); return;
        case Outcome::General: break;
      }
    }
    const std::string sym = detail::mapping_symbol(it.conj, t_);
    if (sym.empty()) {
      t_.constraints.push_back(it.conj);
      return;
    }
    const bool predicate = declared_predicate(sym, s.kind == ComponentKind::PredicateMapping);
    std::size_t arity = 0;
    ExprPtr b = detail::strip_forall(it.conj);
    while (b->is_binary(Connective::Implies)) b = detail::strip_forall(b->rhs());
    ExprPtr head_side = b->is(ExprKind::Not) ? b->body() : b->is(ExprKind::Binary) ? b->lhs() : b;
    if (b->is(ExprKind::Equality)) {
      ExprPtr l = detail::strip_promotions(b->lhs(), t_);
      head_side = detail::atom_head(l) == sym ? l : detail::strip_promotions(b->rhs(), t_);
      ExprPtr other = head_side == l ? b->rhs() : b->lhs();
      if (detail::is_lambda(other)) arity = other->vars.size();
    }
    Spine sp;
    if (application_spine(head_side, sp) && sp.head == sym) arity = std::max(arity, sp.args.size());
    SymbolMapping& m = mapping(sym, predicate, arity, it.pos);
    m.general_clauses.push_back(it.conj);
  }

  const std::vector<TypeDeclaration>& decls_;
  const std::set<std::string>& worlds_;
  std::vector<Diagnostic>& warnings_;
  TarskianInterpretation t_;
};

void add_unique_warnings(std::vector<Diagnostic>& into, const std::vector<Diagnostic>& from) {
  for (const auto& d : from) {
    const bool dup = std::any_of(into.begin(), into.end(), [&](const Diagnostic& x) {
      return x.code == d.code && x.message == d.message && x.pos == d.pos;
    });
    if (!dup) into.push_back(d);
  }
}

Diagnostic unclassified_warning(const ExprPtr& conj, SourcePos pos) {
  return Diagnostic{Severity::Warning, "UnclassifiedComponent", "kept as a general constraint: " + print_expr(conj), pos};
}

// Constraints are conjuncts that did not become domain or mapping facts.
void warn_constraints(const std::vector<Formula>& constraints, const std::vector<Item>& items,
                      std::vector<Diagnostic>& warnings) {
  for (const auto& c : constraints) {
    SourcePos pos;
    for (const auto& it : items)
      if (it.conj == c) pos = it.pos;
    add_unique_warnings(warnings, {unclassified_warning(c, pos)});
  }
}

KripkeInterpretation build_kripke(const std::vector<Item>& items, const std::vector<TypeDeclaration>& decls,
                                  std::vector<Diagnostic>& warnings) {
  KripkeInterpretation k;
  k.type_decls = decls;

  std::set<std::string> world_set = detail::world_constants(decls);
  for (const auto& it : items) {
    auto s = detail::analyze_component(it.conj, world_set);
    if (s.kind != ComponentKind::WorldEnumeration) continue;
    for (const auto& w : s.terms) {
      if (!w->is_constant()) fail("MissingWorld", print_expr(w) + " is not a world constant", it.pos);
      if (!k.has_world(w->text)) k.worlds.push_back(w->text);
    }
    k.world_enumeration.push_back(it.conj);
  }
  if (k.worlds.empty()) {
    for (const auto& d : decls)
      if (d.type && !d.type->is_arrow() && d.type->name == "$world") k.worlds.push_back(d.symbol);
    if (!k.worlds.empty())
      warnings.push_back(Diagnostic{Severity::Warning, "WorldsFromDeclarations",
                                    "no world enumeration; using the declared $world constants", {}});
  }
  world_set.insert(k.worlds.begin(), k.worlds.end());

  auto require_world = [&](const ExprPtr& w, const Item& it) -> std::string {
    if (!w->is_constant() || !k.has_world(w->text))
      fail("MissingWorld", print_expr(w) + " is not a declared world", it.pos);
    return w->text;
  };

  std::vector<Item> everywhere;
  std::map<std::string, std::vector<Item>> in_world;
  for (const auto& it : items) {
    auto s = detail::analyze_component(it.conj, world_set);
    switch (s.kind) {
      case ComponentKind::WorldEnumeration:
        break;
      case ComponentKind::WorldDistinctness: {
        std::vector<std::string> ws;
        for (const auto& t : s.terms) ws.push_back(require_world(t, it));
        for (std::size_t i = 0; i < ws.size(); ++i)
          for (std::size_t j = i + 1; j < ws.size(); ++j) {
            if (ws[i] == ws[j]) fail("ConflictingEntry", "world " + ws[i] + " is stated to differ from itself", it.pos);
            k.distinct_world_pairs.insert(std::minmax(ws[i], ws[j]));
          }
        k.world_distinctness.push_back(it.conj);
        break;
      }
      case ComponentKind::AccessibilityLiteral: {
        const bool positive = !it.conj->is(ExprKind::Not);
        const ExprPtr& atom = positive ? it.conj : it.conj->body();
        auto pair = std::make_pair(require_world(atom->children[0], it), require_world(atom->children[1], it));
        auto& same = positive ? k.accessible : k.inaccessible;
        const auto& opposite = positive ? k.inaccessible : k.accessible;
        if (opposite.count(pair))
          fail("ConflictingEntry",
               "accessibility of (" + pair.first + "," + pair.second + ") is both asserted and denied", it.pos);
        same.insert(pair);
        break;
      }
      case ComponentKind::LocalWorldAssignment: {
        if (s.symbol.empty()) fail("MissingWorld", "$local_world must be assigned a world constant", it.pos);
        const std::string w = require_world(make_apply(s.symbol), it);
        if (k.local_world && *k.local_world != w)
          fail("ConflictingEntry", "$local_world is assigned both " + *k.local_world + " and " + w, it.pos);
        k.local_world = w;
        break;
      }
      case ComponentKind::InWorldWrapper: {
        auto& target = s.world_var.empty() ? in_world[require_world(make_apply(s.symbol), it)] : everywhere;
        for (const auto& c : conjuncts_of(s.body)) target.push_back(Item{c, it.unit, it.pos});
        break;
      }
      case ComponentKind::Unclassified:
        k.constraints.push_back(it.conj);
        break;
      default:
        everywhere.push_back(it);
    }
  }

  std::set<std::string> tracked;
  for (const auto& w : k.worlds) {
    std::vector<Item> local = everywhere;
    const auto& own = in_world[w];
    local.insert(local.end(), own.begin(), own.end());
    std::vector<Item> rest;
    std::vector<std::pair<ComponentShape, Item>> existence;
    for (const auto& it : local) {
      auto s = detail::analyze_component(it.conj, world_set);
      if (s.kind == ComponentKind::ElementExistence)
        existence.emplace_back(std::move(s), it);
      else
        rest.push_back(it);
    }
    std::vector<Diagnostic> local_warnings;
    WorldState state;
    state.tarskian = TarskiBuilder(decls, world_set, local_warnings).build(rest);
    add_unique_warnings(warnings, local_warnings);
    warn_constraints(state.tarskian.constraints, rest, warnings);
    for (const auto& [s, it] : existence) {
      const DomainSpec* d = state.tarskian.domain_for(s.type);
      const ElementId id = element_key(s.terms[0]);
      if (!d || !(d->is_finite() ? d->has_element(id) : detail::element_domain(s.terms[0], state.tarskian) == d))
        fail("UnknownElement", id + " is required to exist in " + w + " but is not a domain element", it.pos);
      state.existing[d->domain_type].insert(id);
      tracked.insert(d->domain_type);
    }
    k.per_world.emplace(w, std::move(state));
  }
  // Once any world says which elements of a type exist, the others must too.
  for (auto& [w, state] : k.per_world)
    for (const auto& t : tracked) state.existing[t];
  return k;
}

bool mentions_kripke_symbol(const ExprPtr& e) {
  if (e->is(ExprKind::Apply) && (e->text == "$in_world" || e->text == "$accessible_world" || e->text == "$local_world"))
    return true;
  if (e->is(ExprKind::Quantified))
    for (const auto& v : e->vars)
      if (v.type && !v.type->is_arrow() && v.type->name == "$world") return true;
  return std::any_of(e->children.begin(), e->children.end(), mentions_kripke_symbol);
}

bool mentions_world_type(const TypePtr& t) {
  if (!t) return false;
  if (!t->is_arrow()) return t->name == "$world";
  return mentions_world_type(t->result) || std::any_of(t->args.begin(), t->args.end(), mentions_world_type);
}

}  // namespace

bool is_interpretation_unit(const AnnotatedFormula& u) {
  return u.role.is_interpretation() || u.role.is_legacy_interpretation();
}

bool looks_kripke(const std::vector<AnnotatedFormula>& units) {
  for (const auto& u : units) {
    if (const auto* d = u.type_declaration()) {
      if (mentions_world_type(d->type)) return true;
      continue;
    }
    if (!is_interpretation_unit(u)) continue;
    if (u.role.subrole == Subrole::Worlds) return true;
    if (const auto* f = u.formula(); f && mentions_kripke_symbol(*f)) return true;
  }
  return false;
}

AssemblyResult assemble(const std::vector<AnnotatedFormula>& units, const AssembleOptions& options) {
  AssemblyReport report;
  std::vector<TypeDeclaration> decls;
  std::optional<LogicSpecification> logic;
  std::vector<Item> items;
  std::vector<std::string> origins;
  std::vector<Formula> herbrand;

  for (const auto& u : units) {
    if (const auto* d = u.type_declaration()) {
      decls.push_back(*d);
      continue;
    }
    if (const auto* l = u.logic_specification()) {
      if (!logic) logic = *l;
      continue;
    }
    if (!is_interpretation_unit(u)) continue;
    origins.push_back(u.name);
    if (u.role.is_legacy_interpretation())
      report.warnings.push_back(Diagnostic{Severity::Note, "LegacyRole",
                                           "role " + print_role(u.role) + " is the legacy form; `upgrade` rewrites it",
                                           u.pos});
    const Formula& f = *u.formula();
    if (u.role.subrole == Subrole::Herbrand) {
      herbrand.push_back(f);
      report.unclassified.push_back({f, ComponentKind::Unclassified, u.name});
      continue;
    }
    for (const auto& c : conjuncts_of(f)) items.push_back(Item{c, u.name, u.pos});
  }
  if (origins.empty())
    report.warnings.push_back(Diagnostic{Severity::Warning, "NoInterpretation",
                                         "no interpretation units found; the interpretation is empty", {}});

  const bool kripke = options.flavor == Flavor::Kripke || (options.flavor == Flavor::Auto && looks_kripke(units));

  std::set<std::string> worlds = detail::world_constants(decls);
  Interpretation result;
  if (kripke) {
    KripkeInterpretation k = build_kripke(items, decls, report.warnings);
    k.logic_spec = logic;
    k.origin_units = origins;
    worlds.insert(k.worlds.begin(), k.worlds.end());
    result = std::move(k);
  } else {
    TarskianInterpretation t = TarskiBuilder(decls, worlds, report.warnings).build(items);
    warn_constraints(t.constraints, items, report.warnings);
    t.herbrand = !herbrand.empty();
    t.herbrand_formulae = herbrand;
    t.origin_units = origins;
    result = std::move(t);
  }

  for (const auto& it : items) {
    const ComponentKind kind = detail::analyze_component(it.conj, worlds).kind;
    if (kind == ComponentKind::Unclassified) {
      report.unclassified.push_back({it.conj, kind, it.unit});
      add_unique_warnings(report.warnings, {unclassified_warning(it.conj, it.pos)});
    } else {
      report.classified.push_back({it.conj, kind, it.unit});
    }
  }
  return AssemblyResult{std::move(result), std::move(report)};
}

std::vector<AnnotatedFormula> upgrade_legacy(const std::vector<AnnotatedFormula>& units) {
  std::vector<AnnotatedFormula> out = units;
  for (auto& u : out) {
    switch (u.role.base) {
      case RoleBase::FiDomain:
        u.role = Role(RoleBase::Interpretation, Subrole::Domains);
        break;
      case RoleBase::FiFunctors:
      case RoleBase::FiPredicates:
        u.role = Role(RoleBase::Interpretation, Subrole::Mappings);
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace tptp
