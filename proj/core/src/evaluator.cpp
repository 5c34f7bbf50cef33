#include "tptp/evaluator.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "patterns.hpp"
#include "tptp/printer.hpp"

namespace tptp {

using boost::multiprecision::cpp_int;

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(GapReason r) {
  switch (r) {
    case GapReason::InfiniteQuantifier: return "InfiniteQuantifier";
    case GapReason::MissingMapping: return "MissingMapping";
    case GapReason::UnsupportedConstruct: return "UnsupportedConstruct";
    case GapReason::NonExistingDesignation: return "NonExistingDesignation";
    case GapReason::MissingLocalWorld: return "MissingLocalWorld";
    case GapReason::RecursionLimit: return "RecursionLimit";
  }
  return "MissingMapping";
}

std::string describe(const Verdict& v) {
  std::string out = to_string(v.value);
  if (v.gap) out += std::string(" (") + to_string(v.gap->reason) + ": " + v.gap->detail + ")";
  return out;
}

const ExprPtr* Environment::lookup(const std::string& name) const {
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

Environment Environment::bind(std::string name, ExprPtr value) const {
  Environment e = *this;
  e.bindings.emplace_back(std::move(name), std::move(value));
  return e;
}

namespace {

constexpr int kMaxDepth = 1000;

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
}

bool is_integer(const ExprPtr& v) { return v && v->is(ExprKind::Number) && is_integer_literal(v->text); }

cpp_int integer_of(const ExprPtr& v) { return cpp_int(element_key(v)); }

ExprPtr integer(const cpp_int& i) { return make_number(i.str()); }

ExprPtr truth(bool b) { return b ? make_true() : make_false(); }

bool is_truth(const ExprPtr& v) { return v && (v->is_apply_of("$true") || v->is_apply_of("$false")); }

TermValue unknown(GapReason r, std::string detail) { return TermValue{nullptr, Gap{r, std::move(detail)}}; }

TermValue known(ExprPtr v) { return TermValue{std::move(v), std::nullopt}; }

Verdict to_verdict(const TermValue& v) {
  if (!v.known()) return Verdict{Truth::Unknown, v.gap};
  if (v.value->is_apply_of("$true")) return Verdict::of(true);
  if (v.value->is_apply_of("$false")) return Verdict::of(false);
  return Verdict::unknown(GapReason::UnsupportedConstruct, print_expr(v.value) + " is not a truth value");
}

TermValue from_verdict(const Verdict& v) {
  if (v.is_unknown()) return TermValue{nullptr, v.gap};
  return known(truth(v.is_true()));
}

// Flattens `f @ a @ b` and `f(a, b)` into a head expression and arguments.
void flatten_application(const ExprPtr& e, ExprPtr& head, std::vector<ExprPtr>& args) {
  if (e->is(ExprKind::HoApply)) {
    flatten_application(e->lhs(), head, args);
    args.push_back(e->rhs());
    return;
  }
  if (e->is(ExprKind::Apply) && !e->children.empty()) {
    head = make_apply(e->text);
    args.insert(args.end(), e->children.begin(), e->children.end());
    return;
  }
  head = e;
}

bool is_modal_box(const std::string& op) { return op == "box" || op == "necessary"; }
bool is_modal_diamond(const std::string& op) { return op == "possible" || op == "dia" || op == "diamond"; }

class Evaluator {
 public:
  explicit Evaluator(const TarskianInterpretation& t) : t_(&t) {}
  Evaluator(const KripkeInterpretation& k, const std::string& world) : k_(&k) { enter(world); }

  TermValue value(const ExprPtr& e, const Environment& env) {
    if (depth_ >= kMaxDepth) return unknown(GapReason::RecursionLimit, "evaluation nested too deeply");
    ++depth_;
    TermValue v = value_inner(e, env);
    --depth_;
    return v;
  }

  Verdict formula(const ExprPtr& f, const Environment& env) { return to_verdict(value(f, env)); }

 private:
  void enter(const std::string& world) {
    world_ = world;
    t_ = &k_->per_world.at(world).tarskian;
  }

  // Restores the current world when a modal operator returns.
  struct WorldGuard {
    Evaluator& ev;
    std::string saved;
    ~WorldGuard() { ev.enter(saved); }
  };

  TermValue value_inner(const ExprPtr& e, const Environment& env) {
    switch (e->kind) {
      case ExprKind::Variable: {
        if (const ExprPtr* v = env.lookup(e->text)) return known(*v);
        return unknown(GapReason::UnsupportedConstruct, "free variable " + e->text);
      }
      case ExprKind::DistinctObject:
        return known(e);
      case ExprKind::Number:
        return known(is_integer(e) ? integer(integer_of(e)) : e);
      case ExprKind::Not: {
        Verdict v = formula(e->body(), env);
        if (v.is_unknown()) return TermValue{nullptr, v.gap};
        return known(truth(!v.is_true()));
      }
      case ExprKind::Binary:
        return from_verdict(binary(e, env));
      case ExprKind::Equality:
        return from_verdict(equality(e, env));
      case ExprKind::Quantified:
        if (e->quantifier == Quantifier::Lambda) return known(close(e, env));
        return from_verdict(quantified(e, e->vars, 0, env));
      case ExprKind::Modal:
        return from_verdict(modal(e, env));
      case ExprKind::Apply:
      case ExprKind::HoApply:
        return application(e, env);
    }
    return unknown(GapReason::UnsupportedConstruct, print_expr(e));
  }

  // Lambdas become closed terms so they can be passed around as values.
  ExprPtr close(const ExprPtr& lambda, const Environment& env) {
    return env.bindings.empty() ? lambda : substitute(lambda, env.bindings);
  }

  Verdict binary(const ExprPtr& e, const Environment& env) {
    const Verdict l = formula(e->lhs(), env);
    // Short-circuit where Kleene logic allows it.
    if (e->connective == Connective::And && l.is_false()) return l;
    if (e->connective == Connective::Or && l.is_true()) return l;
    if (e->connective == Connective::Implies && l.is_false()) return Verdict::of(true);
    const Verdict r = formula(e->rhs(), env);
    auto pick_gap = [&]() { return l.is_unknown() ? l : r; };
    switch (e->connective) {
      case Connective::And:
        if (r.is_false()) return r;
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(true);
      case Connective::Or:
        if (r.is_true()) return r;
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(false);
      case Connective::Implies:
        if (r.is_true()) return Verdict::of(true);
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(false);
      case Connective::ImpliedBy:
        if (l.is_true() || r.is_false()) return Verdict::of(true);
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(false);
      case Connective::Nand:
        if (l.is_false() || r.is_false()) return Verdict::of(true);
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(false);
      case Connective::Nor:
        if (l.is_true() || r.is_true()) return Verdict::of(false);
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        return Verdict::of(true);
      case Connective::Iff:
      case Connective::Xor: {
        if (l.is_unknown() || r.is_unknown()) return pick_gap();
        const bool same = l.value == r.value;
        return Verdict::of(e->connective == Connective::Iff ? same : !same);
      }
    }
    return Verdict::unknown(GapReason::UnsupportedConstruct, print_expr(e));
  }

  Verdict same_value(const TermValue& a, const TermValue& b) {
    if (!a.known()) return Verdict{Truth::Unknown, a.gap};
    if (!b.known()) return Verdict{Truth::Unknown, b.gap};
    const bool la = detail::is_lambda(a.value);
    const bool lb = detail::is_lambda(b.value);
    if (la || lb) {
      if (la && lb && print_expr(a.value) == print_expr(b.value)) return Verdict::of(true);
      return Verdict::unknown(GapReason::UnsupportedConstruct, "equality of functions");
    }
    return Verdict::of(a.key() == b.key());
  }

  Verdict equality(const ExprPtr& e, const Environment& env) {
    Verdict v = same_value(value(e->lhs(), env), value(e->rhs(), env));
    if (e->negated && !v.is_unknown()) return Verdict::of(!v.is_true());
    return v;
  }

  // The elements a variable of this type ranges over.
  std::optional<std::vector<ExprPtr>> range(const TypedVariable& var, Gap& gap) {
    if (var.type && var.type->is_arrow()) {
      gap = Gap{GapReason::UnsupportedConstruct, "quantification over function type " + print_type(var.type)};
      return std::nullopt;
    }
    const std::string type = detail::type_name(var);
    if (type == "$o") return std::vector<ExprPtr>{make_true(), make_false()};
    if (type == "$world") {
      if (!k_) {
        gap = Gap{GapReason::UnsupportedConstruct, "$world outside a Kripke interpretation"};
        return std::nullopt;
      }
      std::vector<ExprPtr> ws;
      for (const auto& w : k_->worlds) ws.push_back(make_apply(w));
      return ws;
    }
    const DomainSpec* d = t_->domain_for(type);
    if (!d) {
      gap = Gap{GapReason::MissingMapping, "no domain for type " + type};
      return std::nullopt;
    }
    if (!d->is_finite()) {
      gap = Gap{GapReason::InfiniteQuantifier, "domain " + d->domain_type + " is infinite"};
      return std::nullopt;
    }
    if (k_) {
      const auto& existing = k_->per_world.at(world_).existing;
      if (auto it = existing.find(d->domain_type); it != existing.end()) {
        std::vector<ExprPtr> out;
        for (const auto& el : d->elements)
          if (it->second.count(element_key(el))) out.push_back(el);
        return out;
      }
    }
    return d->elements;
  }

  Verdict quantified(const ExprPtr& q, const std::vector<TypedVariable>& vars, std::size_t i, const Environment& env) {
    if (i == vars.size()) return formula(q->body(), env);
    Gap gap;
    auto elems = range(vars[i], gap);
    if (!elems) return Verdict{Truth::Unknown, gap};
    const bool forall = q->quantifier == Quantifier::Forall;
    std::optional<Verdict> undecided;
    for (const auto& el : *elems) {
      Verdict v = quantified(q, vars, i + 1, env.bind(vars[i].name, el));
      if (v.is_unknown()) {
        if (!undecided) undecided = v;
        continue;
      }
      if (forall && v.is_false()) return v;
      if (!forall && v.is_true()) return v;
    }
    if (undecided) return *undecided;
    return Verdict::of(forall);
  }

  Verdict modal(const ExprPtr& e, const Environment& env) {
    if (!k_) return Verdict::unknown(GapReason::UnsupportedConstruct, "modal operator outside a Kripke interpretation");
    const bool box = is_modal_box(e->text);
    if (!box && !is_modal_diamond(e->text))
      return Verdict::unknown(GapReason::UnsupportedConstruct, "modal operator {$" + e->text + "}");
    const std::string here = world_;
    WorldGuard guard{*this, here};
    std::optional<Verdict> undecided;
    for (const auto& w : k_->successors(here)) {
      enter(w);
      Verdict v = formula(e->body(), env);
      if (v.is_unknown()) {
        if (!undecided) undecided = v;
        continue;
      }
      if (box && v.is_false()) return v;
      if (!box && v.is_true()) return v;
    }
    if (undecided) return *undecided;
    return Verdict::of(box);
  }

  Verdict at_world(const std::string& w, const ExprPtr& f, const Environment& env) {
    if (!k_->has_world(w)) return Verdict::unknown(GapReason::MissingMapping, "unknown world " + w);
    WorldGuard guard{*this, world_};
    enter(w);
    return formula(f, env);
  }

  TermValue world_value(const ExprPtr& t, const Environment& env) {
    TermValue v = value(t, env);
    if (v.known() && !(v.value->is_constant() && k_ && k_->has_world(v.value->text)))
      return unknown(GapReason::UnsupportedConstruct, print_expr(t) + " is not a world");
    return v;
  }

  TermValue defined(const std::string& head, const std::vector<ExprPtr>& args, const Environment& env,
                    bool& handled) {
    handled = true;
    if (head == "$true" && args.empty()) return known(make_true());
    if (head == "$false" && args.empty()) return known(make_false());
    if (head == "$distinct") {
      std::vector<TermValue> vs;
      for (const auto& a : args) {
        vs.push_back(value(a, env));
        if (!vs.back().known()) return vs.back();
      }
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          Verdict same = same_value(vs[i], vs[j]);
          if (same.is_unknown()) return from_verdict(same);
          if (same.is_true()) return known(make_false());
        }
      return known(make_true());
    }
    if (k_) {
      if (head == "$local_world" && args.empty()) {
        if (!k_->local_world) return unknown(GapReason::MissingLocalWorld, "no $local_world is declared");
        return known(make_apply(*k_->local_world));
      }
      if (head == "$accessible_world" && args.size() == 2) {
        TermValue a = world_value(args[0], env);
        if (!a.known()) return a;
        TermValue b = world_value(args[1], env);
        if (!b.known()) return b;
        return known(truth(k_->is_accessible(a.value->text, b.value->text)));
      }
      if (head == "$in_world" && args.size() == 2) {
        TermValue w = world_value(args[0], env);
        if (!w.known()) return w;
        return from_verdict(at_world(w.value->text, args[1], env));
      }
    }
    static const std::vector<std::string> arithmetic = {"$sum", "$difference", "$product", "$uminus",
                                                        "$less", "$lesseq", "$greater", "$greatereq"};
    if (std::find(arithmetic.begin(), arithmetic.end(), head) == arithmetic.end()) {
      handled = false;
      return {};
    }
    std::vector<cpp_int> ns;
    for (const auto& a : args) {
      TermValue v = value(a, env);
      if (!v.known()) return v;
      if (!is_integer(v.value))
        return unknown(GapReason::UnsupportedConstruct, head + " is only evaluated on integers");
      ns.push_back(integer_of(v.value));
    }
    const bool unary = head == "$uminus";
    if (ns.size() != (unary ? 1u : 2u)) return unknown(GapReason::UnsupportedConstruct, head + " with wrong arity");
    if (head == "$uminus") return known(integer(-ns[0]));
    if (head == "$sum") return known(integer(ns[0] + ns[1]));
    if (head == "$difference") return known(integer(ns[0] - ns[1]));
    if (head == "$product") return known(integer(ns[0] * ns[1]));
    if (head == "$less") return known(truth(ns[0] < ns[1]));
    if (head == "$lesseq") return known(truth(ns[0] <= ns[1]));
    if (head == "$greater") return known(truth(ns[0] > ns[1]));
    return known(truth(ns[0] >= ns[1]));
  }

  TermValue application(const ExprPtr& e, const Environment& env) {
    ExprPtr head;
    std::vector<ExprPtr> args;
    flatten_application(e, head, args);

    if (!head->is(ExprKind::Apply)) {
      // Variable or lambda in function position.
      TermValue f = value(head, env);
      if (!f.known()) return f;
      if (args.empty()) return f;
      return apply_value(f.value, args, env);
    }
    const std::string& sym = head->text;
    bool handled = false;
    TermValue d = defined(sym, args, env, handled);
    if (handled) return d;

    if (args.size() == 1 && t_->domain_of_promotion(sym)) return value(args[0], env);

    std::vector<TermValue> vals;
    for (const auto& a : args) {
      vals.push_back(value(a, env));
      if (!vals.back().known()) return vals.back();
    }
    TermValue out = lookup(sym, vals, env);
    if (k_) check_existence(out);
    return out;
  }

  // Under Kripke semantics a term may designate an element that does not
  // exist in the current world; nothing is assumed about such terms.
  void check_existence(TermValue& v) {
    if (!v.known() || is_truth(v.value) || detail::is_lambda(v.value)) return;
    const DomainSpec* d = detail::element_domain(v.value, *t_);
    if (!d) return;
    const auto& existing = k_->per_world.at(world_).existing;
    auto it = existing.find(d->domain_type);
    if (it != existing.end() && !it->second.count(v.key()))
      v = unknown(GapReason::NonExistingDesignation, v.key() + " does not exist in " + world_);
  }

  TermValue apply_value(const ExprPtr& f, const std::vector<ExprPtr>& args, const Environment& env) {
    if (!detail::is_lambda(f)) {
      if (f->is_constant()) return application(rebuild(f->text, args), env);
      return unknown(GapReason::UnsupportedConstruct, "application of " + print_expr(f));
    }
    const std::size_t n = std::min(args.size(), f->vars.size());
    std::vector<std::pair<std::string, ExprPtr>> sub;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& var = f->vars[i];
      if (var.type && var.type->is_arrow()) {
        // Function arguments are passed unevaluated.
        sub.emplace_back(var.name, env.bindings.empty() ? args[i] : substitute(args[i], env.bindings));
        continue;
      }
      TermValue v = value(args[i], env);
      if (!v.known()) return v;
      sub.emplace_back(var.name, v.value);
    }
    ExprPtr body = substitute(f->body(), sub);
    if (n < f->vars.size()) {
      std::vector<TypedVariable> rest(f->vars.begin() + static_cast<std::ptrdiff_t>(n), f->vars.end());
      return known(make_quantified(Quantifier::Lambda, std::move(rest), body));
    }
    TermValue r = value(body, env);
    if (n == args.size() || !r.known()) return r;
    return apply_value(r.value, std::vector<ExprPtr>(args.begin() + static_cast<std::ptrdiff_t>(n), args.end()), env);
  }

  static ExprPtr rebuild(const std::string& sym, const std::vector<ExprPtr>& args) {
    return args.empty() ? make_apply(sym) : make_apply(sym, args);
  }

  ExprPtr element_of(const ElementId& id) const {
    if (id == kTrueValue) return make_true();
    if (id == kFalseValue) return make_false();
    for (const auto& d : t_->domains)
      for (const auto& el : d.elements)
        if (element_key(el) == id) return el;
    if (is_integer_literal(id)) return make_number(id);
    return nullptr;
  }

  TermValue lookup(const std::string& sym, const std::vector<TermValue>& vals, const Environment& env) {
    std::vector<ExprPtr> args;
    for (const auto& v : vals) args.push_back(v.value);
    const SymbolMapping* m = t_->mapping(sym);
    if (m) {
      std::vector<ElementId> keys;
      for (const auto& v : vals) keys.push_back(v.key());
      if (const ElementId* hit = m->lookup(keys)) {
        if (ExprPtr el = element_of(*hit)) return known(el);
      }
      std::optional<Gap> gap;
      for (const auto& clause : m->general_clauses) {
        TermValue r = from_clause(clause, sym, args, env);
        if (r.known()) return r;
        if (r.gap && !gap) gap = r.gap;
      }
      if (gap) return TermValue{nullptr, gap};
    }
    if (k_ && args.empty() && k_->has_world(sym)) return known(make_apply(sym));
    ExprPtr term = rebuild(sym, args);
    if (detail::element_domain(term, *t_)) return known(term);
    std::string call = sym;
    if (!args.empty()) {
      call += '(';
      for (std::size_t i = 0; i < vals.size(); ++i) call += (i ? "," : "") + vals[i].key();
      call += ')';
    }
    return unknown(GapReason::MissingMapping, "no mapping for " + call);
  }

  // Matches a clause pattern argument against a value, binding variables.
  bool match(const ExprPtr& pattern, const ExprPtr& v, const std::vector<TypedVariable>& vars,
             std::vector<std::pair<std::string, ExprPtr>>& sub, const Environment& env) {
    const ExprPtr p = detail::strip_promotions(pattern, *t_);
    if (p->is(ExprKind::Variable)) {
      auto var = std::find_if(vars.begin(), vars.end(), [&](const TypedVariable& x) { return x.name == p->text; });
      if (var == vars.end()) return false;
      if (!fits_type(*var, v)) return false;
      for (const auto& [n, bound] : sub)
        if (n == p->text) return element_key(bound) == element_key(v);
      sub.emplace_back(p->text, v);
      return true;
    }
    if (is_ground(p)) {
      TermValue pv = value(p, env);
      return pv.known() && pv.key() == element_key(v);
    }
    // Constructor pattern such as s(P).
    Spine ps;
    Spine vs;
    if (!application_spine(p, ps) || !application_spine(v, vs) || ps.head != vs.head || ps.args.size() != vs.args.size())
      return false;
    for (std::size_t i = 0; i < ps.args.size(); ++i)
      if (!match(ps.args[i], vs.args[i], vars, sub, env)) return false;
    return true;
  }

  bool fits_type(const TypedVariable& var, const ExprPtr& v) const {
    if (!var.type || var.type->is_arrow()) return true;
    const std::string type = var.type->name;
    if (type == "$o") return is_truth(v);
    if (type == "$int") return is_integer(v);
    const DomainSpec* d = t_->domain_for(type);
    if (!d) return true;
    return detail::element_domain(v, *t_) == d;
  }

  // Instantiates a general clause at the queried arguments. Unknown with no
  // gap means the clause does not speak about these arguments.
  TermValue from_clause(const ExprPtr& clause, const std::string& sym,
                        const std::vector<ExprPtr>& args, const Environment& env) {
    std::vector<TypedVariable> vars;
    ExprPtr b = detail::strip_forall(clause, &vars);
    std::vector<ExprPtr> guards;
    while (b->is_binary(Connective::Implies)) {
      guards.push_back(b->lhs());
      b = detail::strip_forall(b->rhs(), &vars);
    }
    // Split the core into the side that applies `sym` and the value side.
    ExprPtr pattern;
    ExprPtr value_side;
    enum class Form { Equation, Iff, Positive, Negative } form;
    if (b->is(ExprKind::Equality) && !b->negated) {
      const ExprPtr l = detail::strip_promotions(b->lhs(), *t_);
      const ExprPtr r = detail::strip_promotions(b->rhs(), *t_);
      if (detail::atom_head(l) == sym && !detail::is_lambda(l)) {
        pattern = l;
        value_side = b->rhs();
      } else if (detail::atom_head(r) == sym) {
        pattern = r;
        value_side = b->lhs();
      } else {
        return {};
      }
      form = Form::Equation;
    } else if (b->is_binary(Connective::Iff) && detail::atom_head(b->lhs()) == sym) {
      pattern = b->lhs();
      value_side = b->rhs();
      form = Form::Iff;
    } else if (b->is(ExprKind::Not) && detail::atom_head(b->body()) == sym) {
      pattern = b->body();
      form = Form::Negative;
    } else if (detail::atom_head(b) == sym) {
      pattern = b;
      form = Form::Positive;
    } else {
      return {};
    }
    ExprPtr phead;
    std::vector<ExprPtr> pargs;
    flatten_application(pattern, phead, pargs);
    if (pargs.size() > args.size()) return {};

    std::vector<std::pair<std::string, ExprPtr>> sub;
    for (std::size_t i = 0; i < pargs.size(); ++i)
      if (!match(pargs[i], args[i], vars, sub, env)) return {};
    for (const auto& v : vars) {
      bool bound = std::any_of(sub.begin(), sub.end(), [&](const auto& s) { return s.first == v.name; });
      if (!bound && (mentions_var(value_side, v.name) ||
                     std::any_of(guards.begin(), guards.end(), [&](const ExprPtr& g) { return mentions_var(g, v.name); })))
        return {};  // would need quantification over the unmatched variable
    }
    for (const auto& g : guards) {
      Verdict gv = formula(substitute(g, sub), env);
      if (gv.is_false()) return {};
      if (gv.is_unknown()) return TermValue{nullptr, gv.gap};
    }
    TermValue result;
    switch (form) {
      case Form::Equation:
        result = value(substitute(value_side, sub), env);
        break;
      case Form::Iff:
        result = from_verdict(formula(substitute(value_side, sub), env));
        break;
      case Form::Positive:
        result = known(make_true());
        break;
      case Form::Negative:
        result = known(make_false());
        break;
    }
    if (!result.known() || pargs.size() == args.size()) return result;
    // Curried use: the clause gave a function, apply it to the rest.
    return apply_value(result.value,
                       std::vector<ExprPtr>(args.begin() + static_cast<std::ptrdiff_t>(pargs.size()), args.end()), env);
  }

  static bool mentions_var(const ExprPtr& e, const std::string& name) {
    if (!e) return false;
    if (e->is(ExprKind::Variable)) return e->text == name;
    if (e->is(ExprKind::Quantified))
      for (const auto& v : e->vars)
        if (v.name == name) return false;
    return std::any_of(e->children.begin(), e->children.end(), [&](const ExprPtr& c) { return mentions_var(c, name); });
  }

  const TarskianInterpretation* t_ = nullptr;
  const KripkeInterpretation* k_ = nullptr;
  std::string world_;
  int depth_ = 0;
};

}  // namespace

TermValue eval_term(const Term& t, const TarskianInterpretation& interp, const Environment& env) {
  return Evaluator(interp).value(t, env);
}

Verdict eval_formula(const Formula& f, const TarskianInterpretation& interp, const Environment& env) {
  return Evaluator(interp).formula(f, env);
}

Verdict eval_at_world(const Formula& f, const KripkeInterpretation& k, const std::string& w, const Environment& env) {
  if (!k.per_world.count(w)) return Verdict::unknown(GapReason::MissingMapping, "unknown world " + w);
  return Evaluator(k, w).formula(f, env);
}

Verdict eval_at_local_world(const Formula& f, const KripkeInterpretation& k, const Environment& env) {
  if (!k.local_world) return Verdict::unknown(GapReason::MissingLocalWorld, "no $local_world is declared");
  return eval_at_world(f, k, *k.local_world, env);
}

Verdict eval_globally(const Formula& f, const KripkeInterpretation& k, const Environment& env) {
  std::optional<Verdict> undecided;
  for (const auto& w : k.worlds) {
    Verdict v = eval_at_world(f, k, w, env);
    if (v.is_false()) return v;
    if (v.is_unknown() && !undecided) undecided = v;
  }
  if (undecided) return *undecided;
  return Verdict::of(true);
}

ProblemEvaluation eval_problem(const std::vector<AnnotatedFormula>& problem, const Interpretation& interp) {
  ProblemEvaluation out;
  const auto* k = std::get_if<KripkeInterpretation>(&interp);
  const auto* t = std::get_if<TarskianInterpretation>(&interp);
  for (const auto& u : problem) {
    const Formula* f = u.formula();
    if (!f || u.role.is_interpretation() || u.role.is_legacy_interpretation()) continue;
    const bool conjecture = u.role.is(RoleBase::Conjecture);
    if (!conjecture && !u.role.is_axiom_like()) continue;
    UnitVerdict uv;
    uv.name = u.name;
    uv.role = u.role;
    uv.obligation = conjecture;
    if (k) {
      const bool local = u.role.subrole == Subrole::Local || (conjecture && u.role.subrole != Subrole::Global);
      if (local) {
        uv.where = k->local_world.value_or("$local_world");
        uv.verdict = eval_at_local_world(*f, *k, {});
      } else {
        uv.where = "all worlds";
        uv.verdict = eval_globally(*f, *k, {});
      }
    } else {
      uv.verdict = eval_formula(*f, *t, {});
    }
    out.units.push_back(std::move(uv));
  }

  bool axiom_false = false;
  bool axiom_unknown = false;
  // Several conjectures are read as their conjunction.
  std::optional<Truth> goal;
  for (const auto& uv : out.units) {
    if (uv.obligation) {
      if (!goal || uv.verdict.is_false() || (uv.verdict.is_unknown() && *goal == Truth::True))
        goal = uv.verdict.value;
      continue;
    }
    if (uv.verdict.is_false()) axiom_false = true;
    if (uv.verdict.is_unknown()) axiom_unknown = true;
  }
  if (axiom_false)
    out.status = SzsStatus::Error;
  else if (axiom_unknown)
    out.status = SzsStatus::GaveUp;
  else if (!goal || *goal == Truth::True)
    out.status = SzsStatus::Satisfiable;
  else if (*goal == Truth::False)
    out.status = SzsStatus::CounterSatisfiable;
  else
    out.status = SzsStatus::GaveUp;
  return out;
}

}  // namespace tptp
