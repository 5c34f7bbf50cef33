#include "tptp/printer.hpp"

namespace tptp {

namespace {

std::string wrap(const std::string& s) { return "( " + s + " )"; }

std::string vars_text(const std::vector<TypedVariable>& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += vars[i].name;
    if (vars[i].type) out += ": " + print_type(vars[i].type);
  }
  return out + "]";
}

bool is_nonassoc(Connective c) { return c != Connective::And && c != Connective::Or; }

}  // namespace

std::string print_expr(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Variable:
    case ExprKind::Number:
      return e->text;
    case ExprKind::DistinctObject:
      return "\"" + e->text + "\"";
    case ExprKind::Apply: {
      std::string out = e->text;
      if (e->children.empty()) return out;
      out += '(';
      for (std::size_t i = 0; i < e->children.size(); ++i) {
        if (i) out += ',';
        out += print_expr(e->children[i]);
      }
      return out + ')';
    }
    case ExprKind::Not: {
      const auto& b = e->body();
      const bool paren = b->is(ExprKind::Binary) || b->is(ExprKind::Equality) || b->is(ExprKind::HoApply);
      const std::string inner = print_expr(b);
      return "~ " + (paren ? wrap(inner) : inner);
    }
    case ExprKind::Quantified: {
      const auto& b = e->body();
      const std::string inner = print_expr(b);
      return std::string(to_string(e->quantifier)) + " " + vars_text(e->vars) + " : " +
             (b->is(ExprKind::Binary) ? wrap(inner) : inner);
    }
    case ExprKind::Modal: {
      const auto& b = e->body();
      const std::string inner = print_expr(b);
      return "{$" + e->text + "} @ " + (b->is_term_like() ? inner : wrap(inner));
    }
    case ExprKind::Binary: {
      const auto& l = e->lhs();
      const auto& r = e->rhs();
      std::string ls = print_expr(l);
      std::string rs = print_expr(r);
      if (is_nonassoc(e->connective)) {
        if (l->is(ExprKind::Binary) || l->is(ExprKind::Quantified)) ls = wrap(ls);
        if (r->is(ExprKind::Binary)) rs = wrap(rs);
      } else {
        const bool same_chain = l->is_binary(e->connective);
        if ((l->is(ExprKind::Binary) && !same_chain) || l->is(ExprKind::Quantified)) ls = wrap(ls);
        if (r->is(ExprKind::Binary)) rs = wrap(rs);
      }
      return ls + " " + to_string(e->connective) + " " + rs;
    }
    case ExprKind::Equality: {
      std::string ls = print_expr(e->lhs());
      std::string rs = print_expr(e->rhs());
      if (!e->lhs()->is_term_like()) ls = wrap(ls);
      if (!e->rhs()->is_term_like()) rs = wrap(rs);
      return ls + (e->negated ? " != " : " = ") + rs;
    }
    case ExprKind::HoApply: {
      const auto& l = e->lhs();
      const auto& r = e->rhs();
      std::string ls = print_expr(l);
      std::string rs = print_expr(r);
      if (!l->is_term_like() && !l->is(ExprKind::HoApply)) ls = wrap(ls);
      if (!r->is_term_like()) rs = wrap(rs);
      return ls + " @ " + rs;
    }
  }
  return {};
}

std::string print_type(const TypePtr& t) {
  if (!t->is_arrow()) return t->name;
  auto component = [](const TypePtr& a) { return a->is_arrow() ? wrap(print_type(a)) : print_type(a); };
  std::string lhs;
  if (t->args.size() == 1) {
    lhs = component(t->args.front());
  } else {
    std::string prod;
    for (std::size_t i = 0; i < t->args.size(); ++i) {
      if (i) prod += " * ";
      prod += component(t->args[i]);
    }
    lhs = wrap(prod);
  }
  return lhs + " > " + print_type(t->result);
}

std::string print_type_declaration(const TypeDeclaration& d) { return d.symbol + ": " + print_type(d.type); }

std::string print_unit(const AnnotatedFormula& u) {
  std::string out = std::string(to_string(u.language)) + "(" + u.name + "," + print_role(u.role) + ",\n    ";
  if (const auto* f = u.formula())
    out += print_expr(*f);
  else if (const auto* d = u.type_declaration())
    out += print_type_declaration(*d);
  else
    out += u.logic_specification()->raw;
  if (u.source) {
    out += ",\n    " + *u.source;
    if (u.useful_info) out += "," + *u.useful_info;
  }
  return out + ").";
}

std::string print_units(const std::vector<AnnotatedFormula>& units) {
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) out += '\n';
    out += print_unit(units[i]) + "\n";
  }
  return out;
}

}  // namespace tptp
