#include "tptp/parser.hpp"

#include <algorithm>
#include <array>

#include "role_internal.hpp"
#include "tptp/lexer.hpp"

namespace tptp {

namespace {

// Thrown when the parser reaches an Error token; the lexer already reported it.
struct AlreadyReported {};

constexpr std::array<std::string_view, 4> kLanguages = {"cnf", "fof", "tff", "thf"};
constexpr std::array<std::string_view, 5> kUnsupported = {"dhf", "nhf", "tcf", "tpi", "txf"};

bool is_unit_keyword(const Token& t) {
  if (t.kind != TokenKind::LowerWord) return false;
  auto in = [&](const auto& arr) { return std::find(arr.begin(), arr.end(), t.text) != arr.end(); };
  return in(kLanguages) || in(kUnsupported) || t.text == "include";
}

SourcePos end_position(std::string_view text) {
  SourcePos p{1, 1};
  for (char c : text) {
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

bool is_functor_token(TokenKind k) {
  return k == TokenKind::LowerWord || k == TokenKind::SingleQuoted || k == TokenKind::DollarWord ||
         k == TokenKind::DollarDollarWord;
}

std::optional<Connective> nonassoc_connective(TokenKind k) {
  switch (k) {
    case TokenKind::Implies: return Connective::Implies;
    case TokenKind::ImpliedBy: return Connective::ImpliedBy;
    case TokenKind::Iff: return Connective::Iff;
    case TokenKind::Xor: return Connective::Xor;
    case TokenKind::Nor: return Connective::Nor;
    case TokenKind::Nand: return Connective::Nand;
    default: return std::nullopt;
  }
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<Token>& toks) : src_(src), toks_(toks) {
    end_.kind = TokenKind::End;
    end_.pos = end_position(src);
    end_.offset = src.size();
  }

  std::size_t position() const { return i_; }
  void seek(std::size_t i) { i_ = i; }
  bool at_end() const { return i_ >= toks_.size(); }
  const Token& peek(std::size_t k = 0) const { return i_ + k < toks_.size() ? toks_[i_ + k] : end_; }

  const Token& next() {
    const Token& t = peek();
    if (t.kind == TokenKind::Error) throw AlreadyReported{};
    if (!at_end()) ++i_;
    return t;
  }

  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  [[noreturn]] void unexpected(const std::string& expected) const {
    const Token& t = peek();
    if (t.kind == TokenKind::Error) throw AlreadyReported{};
    std::string found = to_string(t.kind);
    if (!t.text.empty() && t.kind != TokenKind::End) found += " '" + t.text + "'";
    throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken", "expected " + expected + ", found " + found,
                                 t.pos});
  }

  const Token& expect(TokenKind k, const std::string& what) {
    if (peek().kind != k) unexpected(what);
    return next();
  }

  // ---- formulae -----------------------------------------------------------

  ExprPtr formula() {
    ExprPtr lhs = or_formula();
    if (auto c = nonassoc_connective(peek().kind)) {
      next();
      ExprPtr rhs = or_formula();
      if (nonassoc_connective(peek().kind))
        throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken",
                                     std::string("connective ") + to_string(peek().kind) +
                                         " cannot be chained; add parentheses",
                                     peek().pos});
      return make_binary(*c, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr or_formula() {
    ExprPtr acc = and_formula();
    while (accept(TokenKind::Vline)) acc = make_binary(Connective::Or, acc, and_formula());
    return acc;
  }

  ExprPtr and_formula() {
    ExprPtr acc = unary();
    while (accept(TokenKind::Ampersand)) acc = make_binary(Connective::And, acc, unary());
    return acc;
  }

  ExprPtr unary() {
    switch (peek().kind) {
      case TokenKind::Tilde:
        next();
        return make_not(unary());
      case TokenKind::Bang:
      case TokenKind::Question:
      case TokenKind::Caret: {
        const TokenKind k = next().kind;
        const Quantifier q = k == TokenKind::Bang       ? Quantifier::Forall
                             : k == TokenKind::Question ? Quantifier::Exists
                                                        : Quantifier::Lambda;
        auto vars = variable_list();
        expect(TokenKind::Colon, "':' after quantified variables");
        return make_quantified(q, std::move(vars), unary());
      }
      case TokenKind::ModalName: {
        std::string op = next().text;
        expect(TokenKind::At, "'@' after modal operator");
        return make_modal(std::move(op), unary());
      }
      default:
        return equality();
    }
  }

  std::vector<TypedVariable> variable_list() {
    expect(TokenKind::LBracket, "'[' to open the variable list");
    std::vector<TypedVariable> vars;
    do {
      TypedVariable v;
      v.name = expect(TokenKind::UpperWord, "a variable").text;
      if (accept(TokenKind::Colon)) v.type = type();
      vars.push_back(std::move(v));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBracket, "',' or ']' in the variable list");
    return vars;
  }

  ExprPtr equality() {
    ExprPtr lhs = application();
    if (peek().kind == TokenKind::Equals || peek().kind == TokenKind::NotEquals) {
      const bool neg = next().kind == TokenKind::NotEquals;
      return make_equality(std::move(lhs), application(), neg);
    }
    return lhs;
  }

  ExprPtr application() {
    ExprPtr acc = primary();
    while (accept(TokenKind::At)) acc = make_ho_apply(acc, primary());
    return acc;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::LParen: {
        next();
        ExprPtr inner = formula();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::UpperWord:
        return make_variable(next().text);
      case TokenKind::DistinctObject:
        return make_distinct_object(next().text);
      case TokenKind::Number:
        return make_number(next().text);
      case TokenKind::Tilde:
      case TokenKind::Bang:
      case TokenKind::Question:
      case TokenKind::Caret:
      case TokenKind::ModalName:
        // Allowed in argument position, e.g. `$in_world(w1, ~ p)`.
        return unary();
      default:
        break;
    }
    if (!is_functor_token(t.kind)) unexpected("a term or formula");
    std::string functor = next().text;
    std::vector<ExprPtr> args;
    if (accept(TokenKind::LParen)) {
      do {
        args.push_back(formula());
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen, "',' or ')' after arguments");
    }
    return make_apply(std::move(functor), std::move(args));
  }

  // ---- types --------------------------------------------------------------

  TypePtr type() {
    const SourcePos at = peek().pos;
    auto parts = arrowish();
    if (parts.size() != 1)
      throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken",
                                   "a product type must be followed by '>'", at});
    return parts.front();
  }

  // A product (several components) or a single type.
  std::vector<TypePtr> arrowish() {
    auto lhs = product();
    if (accept(TokenKind::Greater)) {
      TypePtr rhs = type();
      return {make_arrow_type(std::move(lhs), std::move(rhs))};
    }
    return lhs;
  }

  std::vector<TypePtr> product() {
    auto out = type_atom();
    while (accept(TokenKind::Star)) {
      auto more = type_atom();
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }

  std::vector<TypePtr> type_atom() {
    if (accept(TokenKind::LParen)) {
      auto inner = arrowish();
      expect(TokenKind::RParen, "')' in type");
      return inner;
    }
    const Token& t = peek();
    if (t.kind == TokenKind::LowerWord || t.kind == TokenKind::DollarWord || t.kind == TokenKind::SingleQuoted)
      return {make_base_type(next().text)};
    if (t.kind == TokenKind::Bang)
      throw SyntaxError(Diagnostic{Severity::Error, "UnsupportedConstruct", "polymorphic types are not supported",
                                   t.pos});
    unexpected("a type");
  }

  TypeDeclaration type_declaration() {
    if (accept(TokenKind::LParen)) {
      TypeDeclaration d = type_declaration();
      expect(TokenKind::RParen, "')' after type declaration");
      return d;
    }
    TypeDeclaration d;
    const Token& s = peek();
    if (!is_functor_token(s.kind)) unexpected("a symbol to declare");
    d.symbol = next().text;
    expect(TokenKind::Colon, "':' in type declaration");
    d.type = type();
    return d;
  }

  // ---- units --------------------------------------------------------------

  // Raw text of tokens up to (not including) the next depth-0 ',' or ')'.
  std::string raw_until_separator() {
    const std::size_t start = i_;
    int depth = 0;
    while (!at_end()) {
      const TokenKind k = peek().kind;
      if (k == TokenKind::Error) throw AlreadyReported{};
      if (depth == 0 && (k == TokenKind::Comma || k == TokenKind::RParen)) break;
      if (k == TokenKind::LParen || k == TokenKind::LBracket) ++depth;
      if (k == TokenKind::RParen || k == TokenKind::RBracket) --depth;
      ++i_;
    }
    if (i_ == start) unexpected("a term");
    const Token& first = toks_[start];
    const Token& last = toks_[i_ - 1];
    return collapse_space(src_.substr(first.offset, last.offset + last.length - first.offset));
  }

  static std::string collapse_space(std::string_view s) {
    std::string out;
    bool pending = false;
    char quote = 0;
    for (char c : s) {
      if (quote) {
        out += c;
        if (c == quote) quote = 0;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        pending = true;
        continue;
      }
      if (pending && !out.empty()) out += ' ';
      pending = false;
      if (c == '\'' || c == '"') quote = c;
      out += c;
    }
    return out;
  }

  std::optional<AnnotatedFormula> unit(std::vector<Diagnostic>& diags) {
    const Token& kw = peek();
    if (!is_unit_keyword(kw)) unexpected("an annotated formula such as fof(...)");
    const std::string keyword = kw.text;
    const SourcePos start = kw.pos;
    next();

    if (keyword == "include") {
      expect(TokenKind::LParen, "'('");
      while (!at_end() && peek().kind != TokenKind::Dot) next();
      expect(TokenKind::Dot, "'.'");
      diags.push_back(Diagnostic{Severity::Warning, "IncludeIgnored",
                                 "include directives are not followed; load the file explicitly", start});
      return std::nullopt;
    }
    if (!language_from_string(keyword))
      throw SyntaxError(Diagnostic{Severity::Error, "UnsupportedLanguage",
                                   "language '" + keyword + "' is not supported (use cnf, fof, tff or thf)", start});

    AnnotatedFormula u;
    u.language = *language_from_string(keyword);
    u.pos = start;
    expect(TokenKind::LParen, "'(' after " + keyword);

    const Token& name = peek();
    if (name.kind == TokenKind::LowerWord || name.kind == TokenKind::SingleQuoted ||
        (name.kind == TokenKind::Number && std::all_of(name.text.begin(), name.text.end(),
                                                       [](char c) { return c >= '0' && c <= '9'; }))) {
      u.name = next().text;
    } else {
      unexpected("a unit name");
    }
    expect(TokenKind::Comma, "',' after the unit name");

    std::vector<Token> role_toks;
    const SourcePos role_pos = peek().pos;
    int depth = 0;
    while (!at_end() && !(depth == 0 && peek().kind == TokenKind::Comma)) {
      const TokenKind k = peek().kind;
      if (k == TokenKind::Dot && depth == 0) break;
      if (k == TokenKind::LParen) ++depth;
      if (k == TokenKind::RParen) --depth;
      role_toks.push_back(next());
    }
    u.role = detail::role_from_tokens(role_toks, role_pos, &diags);
    expect(TokenKind::Comma, "',' after the role");

    if (u.role.is(RoleBase::Type)) {
      u.body = type_declaration();
    } else if (u.role.is(RoleBase::Logic)) {
      u.body = LogicSpecification{u.name, raw_until_separator()};
    } else {
      u.body = formula();
    }

    if (accept(TokenKind::Comma)) {
      u.source = raw_until_separator();
      if (accept(TokenKind::Comma)) u.useful_info = raw_until_separator();
    }
    expect(TokenKind::RParen, "')' to close the annotated formula");
    expect(TokenKind::Dot, "'.' after the annotated formula");
    return u;
  }

  // Index of the next plausible unit start after a failure at `from`.
  std::size_t recovery_point(std::size_t from) const {
    for (std::size_t j = from + 1; j + 1 < toks_.size(); ++j) {
      if (!is_unit_keyword(toks_[j]) || toks_[j + 1].kind != TokenKind::LParen) continue;
      if (toks_[j].pos.column == 1 || toks_[j - 1].kind == TokenKind::Dot) return j;
    }
    return toks_.size();
  }

 private:
  std::string_view src_;
  const std::vector<Token>& toks_;
  Token end_;
  std::size_t i_ = 0;
};

}  // namespace

ParseResult parse_file(std::string_view text) {
  ParseResult result;
  const std::vector<Token> toks = tokenize_recovering(text, result.diagnostics);
  Parser p(text, toks);
  while (!p.at_end()) {
    const std::size_t start = p.position();
    try {
      std::vector<Diagnostic> local;
      auto u = p.unit(local);
      result.diagnostics.insert(result.diagnostics.end(), local.begin(), local.end());
      if (u) result.units.push_back(std::move(*u));
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back(e.diagnostic());
      p.seek(p.recovery_point(start));
    } catch (const AlreadyReported&) {
      p.seek(p.recovery_point(start));
    }
  }
  // Lexical diagnostics were collected first; present everything in source order.
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.pos.line != b.pos.line ? a.pos.line < b.pos.line : a.pos.column < b.pos.column;
  });
  return result;
}

namespace {
template <typename F>
auto parse_whole(std::string_view text, const char* what, F&& body) {
  const auto toks = tokenize(text);
  Parser p(text, toks);
  auto out = body(p);
  if (!p.at_end()) p.unexpected(std::string("end of ") + what);
  return out;
}
}  // namespace

Formula parse_formula(std::string_view text) {
  return parse_whole(text, "formula", [](Parser& p) { return p.formula(); });
}

AnnotatedFormula parse_unit(std::string_view text) {
  return parse_whole(text, "unit", [](Parser& p) {
    std::vector<Diagnostic> ignored;
    auto u = p.unit(ignored);
    if (!u)
      throw SyntaxError(Diagnostic{Severity::Error, "UnexpectedToken", "expected an annotated formula", SourcePos{1, 1}});
    return std::move(*u);
  });
}

TypePtr parse_type(std::string_view text) {
  return parse_whole(text, "type", [](Parser& p) { return p.type(); });
}

}  // namespace tptp
