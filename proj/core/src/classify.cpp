#include <algorithm>

#include "patterns.hpp"
#include "tptp/assemble.hpp"
#include "tptp/printer.hpp"

namespace tptp {

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::DomainEnumeration: return "domain_enumeration";
    case ComponentKind::Distinctness: return "distinctness";
    case ComponentKind::Surjectivity: return "surjectivity";
    case ComponentKind::Injectivity: return "injectivity";
    case ComponentKind::FunctionMapping: return "function_mapping";
    case ComponentKind::PredicateMapping: return "predicate_mapping";
    case ComponentKind::ElementClosure: return "element_closure";
    case ComponentKind::WorldEnumeration: return "world_enumeration";
    case ComponentKind::WorldDistinctness: return "world_distinctness";
    case ComponentKind::AccessibilityLiteral: return "accessibility_literal";
    case ComponentKind::LocalWorldAssignment: return "local_world_assignment";
    case ComponentKind::InWorldWrapper: return "in_world_wrapper";
    case ComponentKind::ElementExistence: return "element_existence";
    case ComponentKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace detail {

ExprPtr strip_forall(const ExprPtr& e, std::vector<TypedVariable>* vars) {
  ExprPtr cur = e;
  while (cur->is(ExprKind::Quantified) && cur->quantifier == Quantifier::Forall) {
    if (vars) vars->insert(vars->end(), cur->vars.begin(), cur->vars.end());
    cur = cur->body();
  }
  return cur;
}

bool is_var(const ExprPtr& e, std::string_view name) { return e->is(ExprKind::Variable) && e->text == name; }

std::string type_name(const TypePtr& t) { return t ? print_type(t) : std::string("$i"); }
std::string type_name(const TypedVariable& v) { return type_name(v.type); }

bool is_lambda(const ExprPtr& e) { return e->is(ExprKind::Quantified) && e->quantifier == Quantifier::Lambda; }

bool is_plain_atom(const ExprPtr& e) {
  Spine s;
  if (!application_spine(e, s)) return false;
  return !s.head.empty() && s.head[0] != '$';
}

std::string atom_head(const ExprPtr& e) {
  Spine s;
  return application_spine(e, s) ? s.head : std::string();
}

void flatten_signature(const TypePtr& t, std::vector<std::string>& args, std::string& result) {
  const Type* cur = t.get();
  while (cur && cur->is_arrow()) {
    for (const auto& a : cur->args) args.push_back(print_type(a));
    cur = cur->result.get();
  }
  result = cur ? cur->name : std::string("$i");
}

std::set<std::string> world_constants(const std::vector<TypeDeclaration>& decls) {
  std::set<std::string> out;
  for (const auto& d : decls)
    if (d.type && !d.type->is_arrow() && d.type->name == "$world") out.insert(d.symbol);
  return out;
}

namespace {

bool is_ground_constant(const ExprPtr& e) {
  return (e->is_term_like() && !e->is(ExprKind::Variable) && is_ground(e)) || (e->is(ExprKind::HoApply) && is_ground(e));
}

// `X = t` or `t = X` with X the given variable: returns t.
ExprPtr other_side(const ExprPtr& eq, std::string_view var) {
  if (!eq->is(ExprKind::Equality) || eq->negated) return nullptr;
  if (is_var(eq->lhs(), var)) return eq->rhs();
  if (is_var(eq->rhs(), var)) return eq->lhs();
  return nullptr;
}

// `f(V)` / `f @ V` for the single variable V: returns f.
std::string unary_application_of(const ExprPtr& e, std::string_view var) {
  Spine s;
  if (!application_spine(e, s) || s.args.size() != 1 || !is_var(s.args[0], var)) return {};
  return s.head;
}

bool is_inequality_of(const ExprPtr& e, std::string_view a, std::string_view b) {
  ExprPtr eq;
  if (e->is(ExprKind::Equality) && e->negated) eq = e;
  if (e->is(ExprKind::Not) && e->body()->is(ExprKind::Equality) && !e->body()->negated) eq = e->body();
  if (!eq) return false;
  return (is_var(eq->lhs(), a) && is_var(eq->rhs(), b)) || (is_var(eq->lhs(), b) && is_var(eq->rhs(), a));
}

bool value_like(const ExprPtr& e) {
  return e->is(ExprKind::Variable) || e->is(ExprKind::DistinctObject) || e->is(ExprKind::Number) || is_lambda(e);
}

// Shape of a mapping clause body (after any universal prefix).
void mapping_shape(const ExprPtr& body, ComponentShape& s) {
  ExprPtr b = body;
  while (b->is_binary(Connective::Implies)) b = strip_forall(b->rhs());
  if (b->is_binary(Connective::Iff)) {
    if (is_plain_atom(b->lhs())) {
      s.kind = ComponentKind::PredicateMapping;
      s.symbol = atom_head(b->lhs());
    }
    return;
  }
  if (b->is(ExprKind::Not) && is_plain_atom(b->body())) {
    s.kind = ComponentKind::PredicateMapping;
    s.symbol = atom_head(b->body());
    return;
  }
  if (b->is(ExprKind::Equality) && !b->negated) {
    for (const auto& side : {b->lhs(), b->rhs()}) {
      if (value_like(side)) continue;
      const std::string h = atom_head(side);
      if (!h.empty() && h[0] != '$') {
        s.kind = ComponentKind::FunctionMapping;
        s.symbol = h;
        return;
      }
    }
    return;
  }
  if (is_plain_atom(b)) {
    s.kind = ComponentKind::PredicateMapping;
    s.symbol = atom_head(b);
  }
}

bool analyze_forall(const ExprPtr& c, const std::set<std::string>& worlds, ComponentShape& s) {
  ExprPtr b = strip_forall(c, &s.vars);
  (void)worlds;
  if (s.vars.size() == 1) {
    const TypedVariable& v = s.vars[0];
    if (b->is_apply_of("$in_world") && b->children.size() == 2 && is_var(b->children[0], v.name)) {
      s.kind = ComponentKind::InWorldWrapper;
      s.world_var = v.name;
      s.body = b->children[1];
      return true;
    }
    // Enumeration or closure: a disjunction of `V = e` and `? [..] : V = f(..)`.
    bool ok = true;
    bool closure = false;
    std::vector<ExprPtr> elems;
    std::vector<std::pair<std::string, std::size_t>> ctors;
    for (const auto& d : disjuncts_of(b)) {
      if (ExprPtr t = other_side(d, v.name); t && is_ground_constant(t)) {
        elems.push_back(t);
        Spine sp;
        if (application_spine(t, sp)) ctors.emplace_back(sp.head, sp.args.size());
        continue;
      }
      if (d->is(ExprKind::Quantified) && d->quantifier == Quantifier::Exists) {
        // Constructor arguments range over the same type; an existential over
        // another type is a promotion surjectivity instead.
        bool same_type = true;
        ExprPtr inner = d;
        while (inner->is(ExprKind::Quantified) && inner->quantifier == Quantifier::Exists) {
          for (const auto& ev : inner->vars) same_type = same_type && type_name(ev) == type_name(v);
          inner = inner->body();
        }
        ExprPtr t = other_side(inner, v.name);
        Spine sp;
        if (same_type && t && application_spine(t, sp) && !sp.args.empty()) {
          closure = true;
          ctors.emplace_back(sp.head, sp.args.size());
          continue;
        }
      }
      ok = false;
      break;
    }
    if (ok && !elems.empty() && !closure) {
      s.kind = type_name(v) == "$world" ? ComponentKind::WorldEnumeration : ComponentKind::DomainEnumeration;
      s.type = type_name(v);
      s.terms = std::move(elems);
      s.body = b;
      return true;
    }
    if (ok && closure) {
      s.kind = ComponentKind::ElementClosure;
      s.type = type_name(v);
      s.terms = std::move(elems);
      s.constructors = std::move(ctors);
      s.body = b;
      return true;
    }
    // Surjectivity: ! [X: p] : ? [D: d] : X = f(D)
    if (b->is(ExprKind::Quantified) && b->quantifier == Quantifier::Exists && b->vars.size() == 1) {
      ExprPtr t = other_side(b->body(), v.name);
      if (t) {
        std::string f = unary_application_of(t, b->vars[0].name);
        if (!f.empty() && f[0] != '$') {
          s.kind = ComponentKind::Surjectivity;
          s.type = type_name(b->vars[0]);
          s.problem_type = type_name(v);
          s.symbol = f;
          return true;
        }
      }
    }
  }
  if (s.vars.size() == 2 && b->is_binary(Connective::Implies)) {
    const auto& a = s.vars[0].name;
    const auto& c2 = s.vars[1].name;
    const ExprPtr& lhs = b->lhs();
    const ExprPtr& rhs = b->rhs();
    if (lhs->is(ExprKind::Equality) && !lhs->negated && rhs->is(ExprKind::Equality) && !rhs->negated &&
        ((is_var(rhs->lhs(), a) && is_var(rhs->rhs(), c2)) || (is_var(rhs->lhs(), c2) && is_var(rhs->rhs(), a)))) {
      std::string f1 = unary_application_of(lhs->lhs(), a);
      std::string f2 = unary_application_of(lhs->rhs(), c2);
      if (f1.empty()) {
        f1 = unary_application_of(lhs->lhs(), c2);
        f2 = unary_application_of(lhs->rhs(), a);
      }
      if (!f1.empty() && f1 == f2) {
        s.kind = ComponentKind::Injectivity;
        s.type = type_name(s.vars[0]);
        s.symbol = f1;
        return true;
      }
    }
  }
  if (s.vars.size() >= 2 && b->is_binary(Connective::Implies)) {
    for (std::size_t i = 0; i < s.vars.size(); ++i)
      for (std::size_t j = i + 1; j < s.vars.size(); ++j)
        if (is_inequality_of(b->rhs(), s.vars[i].name, s.vars[j].name)) {
          s.kind = ComponentKind::Distinctness;
          s.implied = true;
          s.type = type_name(s.vars[i]);
          return true;
        }
  }
  mapping_shape(b, s);
  return s.kind != ComponentKind::Unclassified;
}

}  // namespace

ComponentShape analyze_component(const ExprPtr& c, const std::set<std::string>& worlds) {
  ComponentShape s;
  auto is_world = [&](const ExprPtr& t) { return t->is_constant() && worlds.count(t->text) > 0; };

  switch (c->kind) {
    case ExprKind::Not: {
      const ExprPtr& b = c->body();
      if (b->is_apply_of("$accessible_world") && b->children.size() == 2) {
        s.kind = ComponentKind::AccessibilityLiteral;
      } else if (b->is(ExprKind::Equality) && !b->negated && is_ground_constant(b->lhs()) &&
                 is_ground_constant(b->rhs())) {
        s.kind = is_world(b->lhs()) || is_world(b->rhs()) ? ComponentKind::WorldDistinctness
                                                          : ComponentKind::Distinctness;
        s.terms = {b->lhs(), b->rhs()};
      } else if (is_plain_atom(b)) {
        s.kind = ComponentKind::PredicateMapping;
        s.symbol = atom_head(b);
      }
      return s;
    }
    case ExprKind::Equality: {
      if (c->lhs()->is_apply_of("$local_world") || c->rhs()->is_apply_of("$local_world")) {
        if (!c->negated) {
          s.kind = ComponentKind::LocalWorldAssignment;
          const ExprPtr& w = c->lhs()->is_apply_of("$local_world") ? c->rhs() : c->lhs();
          s.symbol = w->is_constant() ? w->text : std::string();
        }
        return s;
      }
      if (c->negated) {
        if (is_ground_constant(c->lhs()) && is_ground_constant(c->rhs())) {
          s.kind = is_world(c->lhs()) || is_world(c->rhs()) ? ComponentKind::WorldDistinctness
                                                            : ComponentKind::Distinctness;
          s.terms = {c->lhs(), c->rhs()};
        }
        return s;
      }
      mapping_shape(c, s);
      return s;
    }
    case ExprKind::Apply:
      if (c->text == "$distinct") {
        const bool w = std::any_of(c->children.begin(), c->children.end(), is_world);
        s.kind = w ? ComponentKind::WorldDistinctness : ComponentKind::Distinctness;
        s.terms = c->children;
      } else if (c->text == "$accessible_world" && c->children.size() == 2) {
        s.kind = ComponentKind::AccessibilityLiteral;
      } else if (c->text == "$in_world" && c->children.size() == 2 && c->children[0]->is_constant()) {
        s.kind = ComponentKind::InWorldWrapper;
        s.symbol = c->children[0]->text;
        s.body = c->children[1];
      } else if (!c->is_defined()) {
        s.kind = ComponentKind::PredicateMapping;
        s.symbol = c->text;
      }
      return s;
    case ExprKind::HoApply:
      if (is_plain_atom(c)) {
        s.kind = ComponentKind::PredicateMapping;
        s.symbol = atom_head(c);
      }
      return s;
    case ExprKind::Quantified:
      if (c->quantifier == Quantifier::Exists && c->vars.size() == 1) {
        ExprPtr t = other_side(c->body(), c->vars[0].name);
        if (t && is_ground_constant(t)) {
          s.kind = ComponentKind::ElementExistence;
          s.type = type_name(c->vars[0]);
          s.terms = {t};
        }
        return s;
      }
      if (c->quantifier == Quantifier::Forall) analyze_forall(c, worlds, s);
      return s;
    case ExprKind::Binary:
      mapping_shape(c, s);
      return s;
    default:
      return s;
  }
}

}  // namespace detail

ComponentKind classify_component(const Formula& conjunct, const std::vector<TypeDeclaration>& type_decls) {
  return detail::analyze_component(conjunct, detail::world_constants(type_decls)).kind;
}

}  // namespace tptp
