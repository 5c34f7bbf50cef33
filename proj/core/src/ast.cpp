#include "tptp/ast.hpp"

#include <algorithm>
#include <sstream>

namespace tptp {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

std::string format(const Diagnostic& d) {
  std::ostringstream os;
  if (d.pos.known()) os << d.pos.line << ':' << d.pos.column << ": ";
  os << to_string(d.severity) << ": [" << d.code << "] " << d.message;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) { return os << format(d); }

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
}

SyntaxError::SyntaxError(Diagnostic d) : std::runtime_error(format(d)), diag_(std::move(d)) {}

const char* to_string(Language l) {
  switch (l) {
    case Language::Cnf: return "cnf";
    case Language::Fof: return "fof";
    case Language::Tff: return "tff";
    case Language::Thf: return "thf";
  }
  return "fof";
}

std::optional<Language> language_from_string(std::string_view s) {
  if (s == "cnf") return Language::Cnf;
  if (s == "fof") return Language::Fof;
  if (s == "tff") return Language::Tff;
  if (s == "thf") return Language::Thf;
  return std::nullopt;
}

const char* to_string(Connective c) {
  switch (c) {
    case Connective::Or: return "|";
    case Connective::And: return "&";
    case Connective::Implies: return "=>";
    case Connective::ImpliedBy: return "<=";
    case Connective::Iff: return "<=>";
    case Connective::Xor: return "<~>";
    case Connective::Nor: return "~|";
    case Connective::Nand: return "~&";
  }
  return "&";
}

const char* to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Forall: return "!";
    case Quantifier::Exists: return "?";
    case Quantifier::Lambda: return "^";
  }
  return "!";
}

// ---------------------------------------------------------------------------

const Type& Type::final_result() const {
  const Type* t = this;
  while (t->is_arrow()) t = t->result.get();
  return *t;
}

TypePtr make_base_type(std::string name) {
  auto t = std::make_shared<Type>();
  t->name = std::move(name);
  return t;
}

TypePtr make_arrow_type(std::vector<TypePtr> args, TypePtr result) {
  auto t = std::make_shared<Type>();
  t->args = std::move(args);
  t->result = std::move(result);
  return t;
}

bool operator==(const Type& a, const Type& b) {
  if (a.is_arrow() != b.is_arrow()) return false;
  if (!a.is_arrow()) return a.name == b.name;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_type(a.args[i], b.args[i])) return false;
  return same_type(a.result, b.result);
}

bool same_type(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

namespace {
std::shared_ptr<Expr> node(ExprKind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}
}  // namespace

ExprPtr make_variable(std::string name) {
  auto e = node(ExprKind::Variable);
  e->text = std::move(name);
  return e;
}

ExprPtr make_apply(std::string functor, std::vector<ExprPtr> args) {
  auto e = node(ExprKind::Apply);
  e->text = std::move(functor);
  e->children = std::move(args);
  return e;
}

ExprPtr make_distinct_object(std::string payload) {
  auto e = node(ExprKind::DistinctObject);
  e->text = std::move(payload);
  return e;
}

ExprPtr make_number(std::string literal) {
  auto e = node(ExprKind::Number);
  e->text = std::move(literal);
  return e;
}

ExprPtr make_quantified(Quantifier q, std::vector<TypedVariable> vars, ExprPtr body) {
  auto e = node(ExprKind::Quantified);
  e->quantifier = q;
  e->vars = std::move(vars);
  e->children.push_back(std::move(body));
  return e;
}

ExprPtr make_not(ExprPtr body) {
  auto e = node(ExprKind::Not);
  e->children.push_back(std::move(body));
  return e;
}

ExprPtr make_binary(Connective c, ExprPtr lhs, ExprPtr rhs) {
  auto e = node(ExprKind::Binary);
  e->connective = c;
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_equality(ExprPtr lhs, ExprPtr rhs, bool negated) {
  auto e = node(ExprKind::Equality);
  e->negated = negated;
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_modal(std::string op, ExprPtr body) {
  auto e = node(ExprKind::Modal);
  e->text = std::move(op);
  e->children.push_back(std::move(body));
  return e;
}

ExprPtr make_ho_apply(ExprPtr fn, ExprPtr arg) {
  auto e = node(ExprKind::HoApply);
  e->children = {std::move(fn), std::move(arg)};
  return e;
}

ExprPtr make_true() { return make_apply("$true"); }
ExprPtr make_false() { return make_apply("$false"); }

ExprPtr make_conjunction(const std::vector<ExprPtr>& conjuncts) {
  if (conjuncts.empty()) return make_true();
  ExprPtr acc = conjuncts.front();
  for (std::size_t i = 1; i < conjuncts.size(); ++i) acc = make_binary(Connective::And, acc, conjuncts[i]);
  return acc;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprKind::Quantified:
      if (a.quantifier != b.quantifier || a.vars != b.vars) return false;
      break;
    case ExprKind::Binary:
      if (a.connective != b.connective) return false;
      break;
    case ExprKind::Equality:
      if (a.negated != b.negated) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_expr(a.children[i], b.children[i])) return false;
  return true;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void flatten_conjunction(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->is_binary(Connective::And)) {
    flatten_conjunction(e->lhs(), out);
    flatten_conjunction(e->rhs(), out);
  } else {
    out.push_back(e);
  }
}

std::vector<ExprPtr> conjuncts_of(const ExprPtr& e) {
  std::vector<ExprPtr> out;
  flatten_conjunction(e, out);
  return out;
}

namespace {
void flatten_disjunction(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->is_binary(Connective::Or)) {
    flatten_disjunction(e->lhs(), out);
    flatten_disjunction(e->rhs(), out);
  } else {
    out.push_back(e);
  }
}
}  // namespace

std::vector<ExprPtr> disjuncts_of(const ExprPtr& e) {
  std::vector<ExprPtr> out;
  flatten_disjunction(e, out);
  return out;
}

bool application_spine(const ExprPtr& e, Spine& out) {
  if (e->is(ExprKind::Apply)) {
    out.head = e->text;
    out.args = e->children;
    return true;
  }
  if (e->is(ExprKind::HoApply)) {
    std::vector<ExprPtr> rev;
    const Expr* cur = e.get();
    while (cur->is(ExprKind::HoApply)) {
      rev.push_back(cur->rhs());
      cur = cur->lhs().get();
    }
    if (!cur->is(ExprKind::Apply)) return false;
    out.head = cur->text;
    out.args = cur->children;
    out.args.insert(out.args.end(), rev.rbegin(), rev.rend());
    return true;
  }
  return false;
}

namespace {
bool ground_under(const ExprPtr& e, std::vector<std::string>& bound) {
  switch (e->kind) {
    case ExprKind::Variable:
      return std::find(bound.begin(), bound.end(), e->text) != bound.end();
    case ExprKind::Quantified: {
      const std::size_t mark = bound.size();
      for (const auto& v : e->vars) bound.push_back(v.name);
      const bool g = ground_under(e->body(), bound);
      bound.resize(mark);
      return g;
    }
    default:
      for (const auto& c : e->children)
        if (!ground_under(c, bound)) return false;
      return true;
  }
}
}  // namespace

bool is_ground(const ExprPtr& e) {
  std::vector<std::string> bound;
  return ground_under(e, bound);
}

bool mentions_symbol(const ExprPtr& e, std::string_view functor) {
  if (e->is(ExprKind::Apply) && e->text == functor) return true;
  return std::any_of(e->children.begin(), e->children.end(),
                     [&](const ExprPtr& c) { return mentions_symbol(c, functor); });
}

ExprPtr substitute(const ExprPtr& e, const std::vector<std::pair<std::string, ExprPtr>>& bindings) {
  if (bindings.empty()) return e;
  switch (e->kind) {
    case ExprKind::Variable:
      for (const auto& [name, value] : bindings)
        if (name == e->text) return value;
      return e;
    case ExprKind::DistinctObject:
    case ExprKind::Number:
      return e;
    case ExprKind::Quantified: {
      std::vector<std::pair<std::string, ExprPtr>> inner;
      for (const auto& b : bindings) {
        const bool shadowed = std::any_of(e->vars.begin(), e->vars.end(),
                                          [&](const TypedVariable& v) { return v.name == b.first; });
        if (!shadowed) inner.push_back(b);
      }
      ExprPtr body = substitute(e->body(), inner);
      if (body == e->body()) return e;
      return make_quantified(e->quantifier, e->vars, body);
    }
    default: {
      bool changed = false;
      std::vector<ExprPtr> kids;
      kids.reserve(e->children.size());
      for (const auto& c : e->children) {
        kids.push_back(substitute(c, bindings));
        changed = changed || kids.back() != c;
      }
      if (!changed) return e;
      auto copy = std::make_shared<Expr>(*e);
      copy->children = std::move(kids);
      return copy;
    }
  }
}

bool operator==(const AnnotatedFormula& a, const AnnotatedFormula& b) {
  if (a.language != b.language || a.name != b.name || !(a.role == b.role) || a.source != b.source ||
      a.useful_info != b.useful_info || a.body.index() != b.body.index())
    return false;
  if (const auto* f = a.formula()) return same_expr(*f, *b.formula());
  if (const auto* t = a.type_declaration()) return *t == *b.type_declaration();
  return *a.logic_specification() == *b.logic_specification();
}

}  // namespace tptp
