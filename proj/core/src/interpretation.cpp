#include "tptp/interpretation.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "tptp/printer.hpp"

namespace tptp {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::multiset<std::string> printed(const std::vector<Formula>& fs) {
  std::multiset<std::string> out;
  for (const auto& f : fs) out.insert(print_expr(f));
  return out;
}

std::string printed_or_empty(const Formula& f) { return f ? print_expr(f) : std::string(); }

template <typename T, typename Key>
std::map<std::string, const T*> keyed(const std::vector<T>& items, Key key) {
  std::map<std::string, const T*> out;
  for (const auto& it : items) out[key(it)] = &it;
  return out;
}

template <typename T, typename Key>
bool same_keyed(const std::vector<T>& a, const std::vector<T>& b, Key key) {
  if (a.size() != b.size()) return false;
  auto ka = keyed(a, key);
  auto kb = keyed(b, key);
  if (ka.size() != kb.size()) return false;
  for (const auto& [k, v] : ka) {
    auto it = kb.find(k);
    if (it == kb.end() || !(*v == *it->second)) return false;
  }
  return true;
}

std::multiset<std::string> printed_decls(const std::vector<TypeDeclaration>& ds) {
  std::multiset<std::string> out;
  for (const auto& d : ds) out.insert(print_type_declaration(d));
  return out;
}

}  // namespace

ElementId element_key(const ExprPtr& term) {
  if (term->is(ExprKind::Number) && is_integer_literal(term->text)) {
    std::string t = term->text;
    if (t[0] == '+') t.erase(0, 1);
    return boost::multiprecision::cpp_int(t).str();
  }
  if (term->is(ExprKind::Apply) && !term->children.empty()) {
    std::string out = term->text + "(";
    for (std::size_t i = 0; i < term->children.size(); ++i) {
      if (i) out += ',';
      out += element_key(term->children[i]);
    }
    return out + ")";
  }
  return print_expr(term);
}

const char* to_string(Distinctness d) {
  switch (d) {
    case Distinctness::Unstated: return "unstated";
    case Distinctness::DistinctObjects: return "distinct_objects";
    case Distinctness::DistinctPredicate: return "distinct_predicate";
    case Distinctness::PairwiseInequalities: return "pairwise_inequalities";
    case Distinctness::ByBuiltinType: return "by_builtin_type";
    case Distinctness::ImpliedByFormula: return "implied_by_formula";
  }
  return "unstated";
}

bool operator==(const InfiniteDescriptor& a, const InfiniteDescriptor& b) {
  return a.kind == b.kind && a.constructors == b.constructors &&
         printed_or_empty(a.generator) == printed_or_empty(b.generator);
}

bool operator==(const PromotionBijection& a, const PromotionBijection& b) {
  return a.function_symbol == b.function_symbol &&
         printed_or_empty(a.surjectivity) == printed_or_empty(b.surjectivity) &&
         printed_or_empty(a.injectivity) == printed_or_empty(b.injectivity);
}

bool DomainSpec::has_element(const ElementId& id) const {
  return std::any_of(elements.begin(), elements.end(), [&](const ExprPtr& e) { return element_key(e) == id; });
}

std::vector<ElementId> DomainSpec::element_ids() const {
  std::vector<ElementId> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(element_key(e));
  return out;
}

bool DomainSpec::fully_distinct() const {
  if (distinctness == Distinctness::DistinctObjects || distinctness == Distinctness::ByBuiltinType ||
      distinctness == Distinctness::ImpliedByFormula)
    return true;
  const auto ids = element_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!distinct_pairs.count(std::minmax(ids[i], ids[j]))) return false;
  return true;
}

bool operator==(const DomainSpec& a, const DomainSpec& b) {
  return a.problem_type == b.problem_type && a.domain_type == b.domain_type && a.element_ids() == b.element_ids() &&
         a.infinite == b.infinite && a.distinctness == b.distinctness && a.distinct_pairs == b.distinct_pairs &&
         a.promotion == b.promotion;
}

const ElementId* SymbolMapping::lookup(const std::vector<ElementId>& args) const {
  auto it = index.find(args);
  return it == index.end() ? nullptr : &entries[it->second].second;
}

bool operator==(const SymbolMapping& a, const SymbolMapping& b) {
  if (a.symbol != b.symbol || a.predicate != b.predicate || a.arity != b.arity || a.arg_types != b.arg_types ||
      a.result_type != b.result_type || a.entries.size() != b.entries.size())
    return false;
  for (const auto& [args, value] : a.entries) {
    const ElementId* other = b.lookup(args);
    if (!other || *other != value) return false;
  }
  return printed(a.general_clauses) == printed(b.general_clauses);
}

const DomainSpec* TarskianInterpretation::domain_by_type(const std::string& domain_type) const {
  for (const auto& d : domains)
    if (d.domain_type == domain_type) return &d;
  return nullptr;
}

const DomainSpec* TarskianInterpretation::domain_by_problem_type(const std::string& problem_type) const {
  for (const auto& d : domains)
    if (d.problem_type == problem_type) return &d;
  return nullptr;
}

const DomainSpec* TarskianInterpretation::domain_for(const std::string& type) const {
  if (const auto* d = domain_by_type(type)) return d;
  return domain_by_problem_type(type);
}

const DomainSpec* TarskianInterpretation::domain_of_element(const ElementId& id) const {
  for (const auto& d : domains)
    if (d.has_element(id)) return &d;
  return nullptr;
}

const DomainSpec* TarskianInterpretation::domain_of_promotion(const std::string& symbol) const {
  for (const auto& d : domains)
    if (d.promotion && d.promotion->function_symbol == symbol) return &d;
  return nullptr;
}

const SymbolMapping* TarskianInterpretation::mapping(const std::string& symbol) const {
  for (const auto& m : mappings)
    if (m.symbol == symbol) return &m;
  return nullptr;
}

const TypeDeclaration* TarskianInterpretation::declaration(const std::string& symbol) const {
  for (const auto& d : type_decls)
    if (d.symbol == symbol) return &d;
  return nullptr;
}

bool TarskianInterpretation::all_finite() const {
  return std::all_of(domains.begin(), domains.end(), [](const DomainSpec& d) { return d.is_finite(); });
}

bool operator==(const TarskianInterpretation& a, const TarskianInterpretation& b) {
  return a.herbrand == b.herbrand && same_keyed(a.domains, b.domains, [](const DomainSpec& d) { return d.domain_type; }) &&
         same_keyed(a.mappings, b.mappings, [](const SymbolMapping& m) { return m.symbol; }) &&
         printed(a.herbrand_formulae) == printed(b.herbrand_formulae) &&
         printed(a.constraints) == printed(b.constraints) && printed_decls(a.type_decls) == printed_decls(b.type_decls);
}

bool KripkeInterpretation::has_world(const std::string& w) const {
  return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

bool KripkeInterpretation::worlds_distinct() const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    for (std::size_t j = i + 1; j < worlds.size(); ++j)
      if (!distinct_world_pairs.count(std::minmax(worlds[i], worlds[j]))) return false;
  return true;
}

std::vector<std::string> KripkeInterpretation::successors(const std::string& w) const {
  std::vector<std::string> out;
  for (const auto& v : worlds)
    if (accessible.count({w, v})) out.push_back(v);
  return out;
}

bool operator==(const KripkeInterpretation& a, const KripkeInterpretation& b) {
  return std::set<std::string>(a.worlds.begin(), a.worlds.end()) ==
             std::set<std::string>(b.worlds.begin(), b.worlds.end()) &&
         a.distinct_world_pairs == b.distinct_world_pairs && a.accessible == b.accessible &&
         a.inaccessible == b.inaccessible && a.local_world == b.local_world && a.per_world == b.per_world &&
         printed(a.constraints) == printed(b.constraints) && a.logic_spec == b.logic_spec &&
         printed_decls(a.type_decls) == printed_decls(b.type_decls);
}

// ---------------------------------------------------------------------------

namespace {

void describe_into(std::ostream& os, const TarskianInterpretation& t, const std::string& indent) {
  if (t.herbrand) {
    os << indent << "herbrand interpretation, " << t.herbrand_formulae.size() << " formula(e)\n";
    return;
  }
  for (const auto& d : t.domains) {
    os << indent << "domain " << d.problem_type;
    if (d.domain_type != d.problem_type) os << " as " << d.domain_type;
    if (d.infinite) {
      os << ": infinite ("
         << (d.infinite->kind == InfiniteDescriptor::Kind::Builtin ? "builtin" : "term-generated") << ")";
    } else {
      os << ": {";
      const auto ids = d.element_ids();
      for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << ids[i];
      os << "}";
    }
    os << ", distinctness " << to_string(d.distinctness);
    if (d.promotion) os << ", promotion " << d.promotion->function_symbol;
    os << '\n';
  }
  for (const auto& m : t.mappings) {
    os << indent << (m.predicate ? "predicate " : "function ") << m.symbol << '/' << m.arity << ": "
       << m.entries.size() << " entr" << (m.entries.size() == 1 ? "y" : "ies");
    if (!m.general_clauses.empty()) os << ", " << m.general_clauses.size() << " general clause(s)";
    os << '\n';
    for (const auto& [args, value] : m.entries) {
      os << indent << "  " << m.symbol;
      if (!args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
        os << ')';
      }
      os << " -> " << value << '\n';
    }
  }
  if (!t.constraints.empty()) os << indent << t.constraints.size() << " unclassified constraint(s)\n";
}

}  // namespace

std::string describe(const TarskianInterpretation& t) {
  std::ostringstream os;
  os << "Tarskian interpretation\n";
  describe_into(os, t, "  ");
  return os.str();
}

std::string describe(const KripkeInterpretation& k) {
  std::ostringstream os;
  os << "Kripke interpretation\n  worlds: ";
  for (std::size_t i = 0; i < k.worlds.size(); ++i) os << (i ? ", " : "") << k.worlds[i];
  os << "\n  accessible:";
  for (const auto& [a, b] : k.accessible) os << " (" << a << ',' << b << ')';
  os << "\n  not accessible:";
  for (const auto& [a, b] : k.inaccessible) os << " (" << a << ',' << b << ')';
  os << "\n  local world: " << (k.local_world ? *k.local_world : std::string("none")) << '\n';
  for (const auto& w : k.worlds) {
    auto it = k.per_world.find(w);
    if (it == k.per_world.end()) continue;
    os << "  world " << w << '\n';
    for (const auto& [type, elems] : it->second.existing) {
      os << "    existing " << type << ": {";
      bool first = true;
      for (const auto& e : elems) {
        os << (first ? "" : ", ") << e;
        first = false;
      }
      os << "}\n";
    }
    describe_into(os, it->second.tarskian, "    ");
  }
  return os.str();
}

std::string describe(const Interpretation& i) {
  return std::visit([](const auto& x) { return describe(x); }, i);
}

}  // namespace tptp
