#include "tptp/completeness.hpp"

#include <algorithm>
#include <set>

#include "patterns.hpp"
#include "tptp/printer.hpp"

namespace tptp {

namespace {

struct Signature {
  std::string symbol;
  std::vector<std::string> arg_types;
  const SymbolMapping* mapping = nullptr;
};

bool is_constructor(const std::string& sym, const TarskianInterpretation& t) {
  for (const auto& d : t.domains)
    if (d.infinite)
      for (const auto& c : d.infinite->constructors)
        if (c.first == sym) return true;
  return false;
}

bool is_element_symbol(const std::string& sym, const TarskianInterpretation& t) {
  for (const auto& d : t.domains)
    for (const auto& e : d.elements)
      if (e->is_constant() && e->text == sym) return true;
  return false;
}

// A pure domain type is a domain type that differs from its problem type;
// problem symbols never take arguments of such a type.
bool is_pure_domain_type(const std::string& type, const TarskianInterpretation& t) {
  const DomainSpec* d = t.domain_by_type(type);
  return d && d->domain_type != d->problem_type;
}

// Argument patterns of an unguarded clause for `sym`, or nullopt when the
// clause covers nothing by itself. An empty pattern list means "everything".
std::optional<std::vector<ExprPtr>> clause_patterns(const ExprPtr& clause, const std::string& sym,
                                                    const TarskianInterpretation& t) {
  const ExprPtr b = detail::strip_forall(clause);
  ExprPtr head_side;
  if (b->is(ExprKind::Equality) && !b->negated) {
    const ExprPtr l = detail::strip_promotions(b->lhs(), t);
    const ExprPtr r = detail::strip_promotions(b->rhs(), t);
    if (detail::atom_head(l) == sym) {
      if (detail::is_lambda(r)) return std::vector<ExprPtr>{};
      head_side = l;
    } else if (detail::atom_head(r) == sym) {
      if (detail::is_lambda(l)) return std::vector<ExprPtr>{};
      head_side = r;
    }
  } else if (b->is_binary(Connective::Iff)) {
    head_side = b->lhs();
  } else if (b->is(ExprKind::Not)) {
    head_side = b->body();
  } else {
    head_side = b;
  }
  Spine s;
  if (!head_side || !application_spine(head_side, s) || s.head != sym) return std::nullopt;
  std::vector<ExprPtr> out;
  for (const auto& a : s.args) out.push_back(detail::strip_promotions(a, t));
  if (out.empty()) out.push_back(nullptr);  // a constant: covers its only tuple
  return out;
}

bool covers(const std::vector<ExprPtr>& patterns, const std::vector<ElementId>& tuple) {
  if (patterns.empty()) return true;
  if (patterns.size() == 1 && !patterns[0]) return tuple.empty();
  if (patterns.size() != tuple.size()) return false;
  std::vector<std::pair<std::string, ElementId>> bound;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const ExprPtr& p = patterns[i];
    if (p->is(ExprKind::Variable)) {
      auto it = std::find_if(bound.begin(), bound.end(), [&](const auto& b) { return b.first == p->text; });
      if (it != bound.end() && it->second != tuple[i]) return false;
      if (it == bound.end()) bound.emplace_back(p->text, tuple[i]);
      continue;
    }
    if (!is_ground(p) || element_key(p) != tuple[i]) return false;
  }
  return true;
}

bool is_guarded(const ExprPtr& clause) {
  ExprPtr b = detail::strip_forall(clause);
  return b->is_binary(Connective::Implies);
}

}  // namespace

CompletenessReport completeness_check(const TarskianInterpretation& interp) {
  CompletenessReport report;
  std::vector<Signature> sigs;
  std::set<std::string> seen;
  for (const auto& m : interp.mappings) {
    seen.insert(m.symbol);
    sigs.push_back(Signature{m.symbol, m.arg_types, &m});
  }
  for (const auto& d : interp.type_decls) {
    if (d.declares_type() || !d.type || seen.count(d.symbol)) continue;
    seen.insert(d.symbol);
    Signature s{d.symbol, {}, nullptr};
    std::string result;
    detail::flatten_signature(d.type, s.arg_types, result);
    if (result == "$world" || is_pure_domain_type(result, interp)) continue;
    sigs.push_back(std::move(s));
  }

  for (const auto& sig : sigs) {
    if (interp.domain_of_promotion(sig.symbol) || is_constructor(sig.symbol, interp)) continue;
    if (sig.arg_types.empty() && is_element_symbol(sig.symbol, interp)) continue;
    if (std::any_of(sig.arg_types.begin(), sig.arg_types.end(),
                    [&](const std::string& a) { return is_pure_domain_type(a, interp); }))
      continue;

    std::vector<const DomainSpec*> doms;
    std::string skip;
    for (const auto& a : sig.arg_types) {
      if (a.find('>') != std::string::npos) {
        skip = "function-typed argument " + a;
        break;
      }
      const DomainSpec* d = interp.domain_for(a);
      if (!d) {
        skip = "no domain for argument type " + a;
        break;
      }
      if (!d->is_finite()) {
        skip = "infinite argument domain " + d->domain_type;
        break;
      }
      doms.push_back(d);
    }
    if (!skip.empty()) {
      report.skipped.push_back({sig.symbol, skip});
      continue;
    }

    std::vector<std::vector<ExprPtr>> patterns;
    if (sig.mapping)
      for (const auto& c : sig.mapping->general_clauses)
        if (!is_guarded(c))
          if (auto p = clause_patterns(c, sig.symbol, interp)) patterns.push_back(std::move(*p));

    std::vector<std::vector<ElementId>> ids;
    for (const auto* d : doms) ids.push_back(d->element_ids());
    std::vector<std::size_t> pos(doms.size(), 0);
    if (std::any_of(ids.begin(), ids.end(), [](const auto& v) { return v.empty(); })) continue;
    while (true) {
      std::vector<ElementId> tuple;
      for (std::size_t i = 0; i < pos.size(); ++i) tuple.push_back(ids[i][pos[i]]);
      const bool entry = sig.mapping && sig.mapping->lookup(tuple);
      const bool clause = std::any_of(patterns.begin(), patterns.end(),
                                      [&](const auto& p) { return covers(p, tuple); });
      if (!entry && !clause) report.missing.push_back({sig.symbol, tuple});
      // Odometer over the argument domains, last argument fastest.
      std::size_t i = pos.size();
      while (i > 0) {
        --i;
        if (++pos[i] < ids[i].size()) break;
        pos[i] = 0;
        if (i == 0) {
          i = pos.size() + 1;
          break;
        }
      }
      if (pos.empty() || i == pos.size() + 1) break;
    }
  }
  return report;
}

}  // namespace tptp
