#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tptp/ast.hpp"

namespace tptp {

// Domain elements are identified by their canonical printed term: `d_cat`,
// `"john"`, `42`, `s(s(zero))`. Integer literals are normalized (`+007` is `7`).
using ElementId = std::string;

ElementId element_key(const ExprPtr& term);

inline const ElementId kTrueValue = "$true";
inline const ElementId kFalseValue = "$false";

// How the elements of a domain are known to be pairwise different.
enum class Distinctness {
  Unstated,
  DistinctObjects,       // "double quoted" elements are unequal by definition
  DistinctPredicate,     // $distinct(...)
  PairwiseInequalities,  // a != b conjuncts
  ByBuiltinType,         // $int and friends
  ImpliedByFormula,      // e.g. ! [I1,I2] : ( peano_less(I1,I2) => I1 != I2 )
};

const char* to_string(Distinctness d);

struct InfiniteDescriptor {
  enum class Kind { Builtin, TermGenerated };
  Kind kind = Kind::Builtin;
  Formula generator;  // element-closure formula, TermGenerated only
  // Constructor symbols and arities read off the closure formula.
  std::vector<std::pair<std::string, std::size_t>> constructors;

  friend bool operator==(const InfiniteDescriptor& a, const InfiniteDescriptor& b);
};

// The promotion function maps domain elements into a problem type. Either
// formula may be missing in a malformed model; the verifier reports that.
struct PromotionBijection {
  std::string function_symbol;
  Formula surjectivity;
  Formula injectivity;

  friend bool operator==(const PromotionBijection& a, const PromotionBijection& b);
};

struct DomainSpec {
  std::string problem_type;
  std::string domain_type;
  std::vector<ExprPtr> elements;  // finite domains, in enumeration order
  Formula enumeration;            // the enumerating formula, if any
  std::optional<InfiniteDescriptor> infinite;
  Distinctness distinctness = Distinctness::Unstated;
  std::vector<Formula> distinctness_formulas;
  std::set<std::pair<ElementId, ElementId>> distinct_pairs;  // stored with first < second
  std::optional<PromotionBijection> promotion;

  bool is_finite() const { return !infinite; }
  bool has_element(const ElementId& id) const;
  std::vector<ElementId> element_ids() const;
  // True when every pair of enumerated elements is known to be different.
  bool fully_distinct() const;

  friend bool operator==(const DomainSpec& a, const DomainSpec& b);
};

struct SymbolMapping {
  std::string symbol;
  bool predicate = false;
  std::size_t arity = 0;
  std::vector<std::string> arg_types;  // problem types, when declared
  std::string result_type;             // problem type, `$o` for predicates
  // Entries in source order. Predicate values are kTrueValue / kFalseValue.
  std::vector<std::pair<std::vector<ElementId>, ElementId>> entries;
  std::map<std::vector<ElementId>, std::size_t> index;
  // Quantified or lambda clauses, kept as written and consulted lazily.
  std::vector<Formula> general_clauses;

  const ElementId* lookup(const std::vector<ElementId>& args) const;

  friend bool operator==(const SymbolMapping& a, const SymbolMapping& b);
};

struct TarskianInterpretation {
  std::vector<DomainSpec> domains;
  std::vector<SymbolMapping> mappings;
  bool herbrand = false;
  std::vector<Formula> herbrand_formulae;
  std::vector<Formula> constraints;  // conjuncts retained without a component kind
  std::vector<TypeDeclaration> type_decls;
  std::vector<std::string> origin_units;  // not part of equality

  const DomainSpec* domain_by_type(const std::string& domain_type) const;
  const DomainSpec* domain_by_problem_type(const std::string& problem_type) const;
  // A domain whose domain type or problem type is `type`.
  const DomainSpec* domain_for(const std::string& type) const;
  const DomainSpec* domain_of_element(const ElementId& id) const;
  const DomainSpec* domain_of_promotion(const std::string& symbol) const;
  const SymbolMapping* mapping(const std::string& symbol) const;
  const TypeDeclaration* declaration(const std::string& symbol) const;

  bool empty() const { return domains.empty() && mappings.empty() && herbrand_formulae.empty() && constraints.empty(); }
  bool all_finite() const;

  friend bool operator==(const TarskianInterpretation& a, const TarskianInterpretation& b);
};

struct WorldState {
  TarskianInterpretation tarskian;
  // Elements that exist in this world, per domain type. Types without an
  // entry are unrestricted.
  std::map<std::string, std::set<ElementId>> existing;

  friend bool operator==(const WorldState& a, const WorldState& b) = default;
};

struct KripkeInterpretation {
  std::vector<std::string> worlds;
  std::vector<Formula> world_enumeration;
  std::vector<Formula> world_distinctness;
  std::set<std::pair<std::string, std::string>> distinct_world_pairs;  // first < second
  std::set<std::pair<std::string, std::string>> accessible;
  std::set<std::pair<std::string, std::string>> inaccessible;
  std::optional<std::string> local_world;
  std::map<std::string, WorldState> per_world;
  std::vector<Formula> constraints;
  std::optional<LogicSpecification> logic_spec;
  std::vector<TypeDeclaration> type_decls;
  std::vector<std::string> origin_units;  // not part of equality

  bool has_world(const std::string& w) const;
  bool worlds_distinct() const;
  bool is_accessible(const std::string& from, const std::string& to) const { return accessible.count({from, to}) > 0; }
  std::vector<std::string> successors(const std::string& w) const;

  friend bool operator==(const KripkeInterpretation& a, const KripkeInterpretation& b);
};

using Interpretation = std::variant<TarskianInterpretation, KripkeInterpretation>;

inline bool is_kripke(const Interpretation& i) { return std::holds_alternative<KripkeInterpretation>(i); }

// Multi-line human-readable summary, used by `assemble` on the command line.
std::string describe(const TarskianInterpretation& t);
std::string describe(const KripkeInterpretation& k);
std::string describe(const Interpretation& i);

}  // namespace tptp
