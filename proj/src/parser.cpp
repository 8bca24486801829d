#include "dlkit/parser.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <vector>

namespace dlkit {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Lexical: return "lexical";
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::NameKindConflict: return "name-kind-conflict";
  }
  return "?";
}

namespace {

constexpr std::array kKeywords = {
    std::string_view("SubClassOf"), std::string_view("EquivalentTo"), std::string_view("SubRoleOf"),
    std::string_view("EquivalentRole"), std::string_view("o"), std::string_view("Disjoint"),
    std::string_view("Transitive"), std::string_view("Symmetric"), std::string_view("Asymmetric"),
    std::string_view("Reflexive"), std::string_view("Irreflexive"), std::string_view("and"),
    std::string_view("or"), std::string_view("not"), std::string_view("exists"),
    std::string_view("forall"), std::string_view("Top"), std::string_view("Bottom"),
    std::string_view("Self"), std::string_view("Universal"), std::string_view("inv"),
};

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

enum class Tok { Name, Keyword, Number, Punct, End };

struct Token {
  Tok type;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

// Splits one physical line (without terminator) into tokens followed by End.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j])) ++j;
      auto word = line.substr(i, j - i);
      out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Name, word, line_no, col});
      i = j;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && digit(line[j])) ++j;
      out.push_back({Tok::Number, line.substr(i, j - i), line_no, col});
      i = j;
      continue;
    }
    if ((c == '!' || c == '>' || c == '<') && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::Punct, line.substr(i, 2), line_no, col});
      i += 2;
      continue;
    }
    switch (c) {
      case ':':
      case '(':
      case ')':
      case ',':
      case '=':
      case '.':
      case '{':
      case '}':
        out.push_back({Tok::Punct, line.substr(i, 1), line_no, col});
        ++i;
        continue;
      default: break;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte 0x" + [&] {
                                constexpr char hex[] = "0123456789abcdef";
                                auto u = static_cast<unsigned char>(c);
                                return std::string{hex[u >> 4], hex[u & 15]};
                              }()
                            : "'" + std::string(1, c) + "'";
    throw ParseError(ParseError::Kind::Lexical, line_no, col, "unexpected character " + shown);
  }
  std::size_t end_col = line.size() + 1;
  while (end_col > 1 && (line[end_col - 2] == ' ' || line[end_col - 2] == '\t')) --end_col;
  if (!out.empty()) end_col = std::max(end_col, out.back().column + out.back().text.size());
  out.push_back({Tok::End, {}, line_no, end_col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.type) {
    case Tok::End: return "end of line";
    case Tok::Name: return "name '" + std::string(t.text) + "'";
    case Tok::Number: return "number " + std::string(t.text);
    default: return "'" + std::string(t.text) + "'";
  }
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, Signature& sig) : toks_(std::move(tokens)), sig_(sig) {}

  bool at_end() const { return peek().type == Tok::End; }

  Axiom axiom() {
    const Token& first = peek();
    SourceLocation where{first.line, first.column};
    Axiom a = axiom_body();
    expect_end();
    a.where = where;
    return a;
  }

  Concept whole_concept() {
    Concept c = concept_expr();
    expect_end();
    return c;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.type != Tok::End) ++pos_;
    return t;
  }
  bool is(const Token& t, Tok type, std::string_view text) const { return t.type == type && t.text == text; }
  bool punct(std::string_view p, std::size_t ahead = 0) const { return is(peek(ahead), Tok::Punct, p); }
  bool keyword(std::string_view k, std::size_t ahead = 0) const { return is(peek(ahead), Tok::Keyword, k); }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, at.line, at.column, what);
  }
  [[noreturn]] void unexpected(const Token& at, std::string_view wanted) const {
    fail(at, "expected " + std::string(wanted) + ", found " + describe(at));
  }

  void expect_punct(std::string_view p) {
    if (!punct(p)) unexpected(peek(), "'" + std::string(p) + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) unexpected(peek(), "end of line");
  }

  std::string name_of(NameKind kind) {
    const Token& t = peek();
    if (t.type != Tok::Name) {
      unexpected(t, std::string(to_string(kind)) + " name");
    }
    next();
    std::string name(t.text);
    try {
      sig_.add(name, kind);
    } catch (const NameKindConflict& e) {
      throw ParseError(ParseError::Kind::NameKindConflict, t.line, t.column, e.what());
    }
    return name;
  }

  RoleExpr role() {
    if (keyword("Universal")) {
      next();
      return RoleExpr::universal();
    }
    if (keyword("inv")) {
      next();
      expect_punct("(");
      if (keyword("inv")) fail(peek(), "nested inverse roles are not allowed");
      auto name = name_of(NameKind::Role);
      expect_punct(")");
      return RoleExpr::inverse_of(std::move(name));
    }
    return RoleExpr::named(name_of(NameKind::Role));
  }

  std::uint32_t number() {
    const Token& t = peek();
    if (t.type != Tok::Number) unexpected(t, "a number");
    next();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      fail(t, "number " + std::string(t.text) + " is out of range");
    }
    return value;
  }

  Concept concept_expr() {
    Concept c = intersection();
    while (keyword("or")) {
      next();
      c = Concept::disj(std::move(c), intersection());
    }
    return c;
  }

  Concept intersection() {
    Concept c = unary();
    while (keyword("and")) {
      next();
      c = Concept::conj(std::move(c), unary());
    }
    return c;
  }

  Concept unary() {
    if (keyword("not")) {
      next();
      return Concept::negation(unary());
    }
    if (keyword("exists") || keyword("forall")) {
      const bool ex = keyword("exists");
      next();
      RoleExpr r = role();
      expect_punct(".");
      Concept filler = unary();
      return ex ? Concept::exists(std::move(r), std::move(filler))
                : Concept::forall(std::move(r), std::move(filler));
    }
    if (punct(">=") || punct("<=")) {
      const bool at_least = punct(">=");
      next();
      std::uint32_t n = number();
      RoleExpr r = role();
      expect_punct(".");
      Concept filler = unary();
      return at_least ? Concept::at_least(n, std::move(r), std::move(filler))
                      : Concept::at_most(n, std::move(r), std::move(filler));
    }
    return atom();
  }

  Concept atom() {
    const Token& t = peek();
    if (keyword("Top")) {
      next();
      return Concept::top();
    }
    if (keyword("Bottom")) {
      next();
      return Concept::bottom();
    }
    if (keyword("Self")) {
      next();
      expect_punct("(");
      RoleExpr r = role();
      expect_punct(")");
      return Concept::self(std::move(r));
    }
    if (punct("{")) {
      next();
      auto ind = name_of(NameKind::Individual);
      expect_punct("}");
      return Concept::nominal(std::move(ind));
    }
    if (punct("(")) {
      next();
      Concept c = concept_expr();
      expect_punct(")");
      return c;
    }
    if (t.type == Tok::Name) return Concept::named(name_of(NameKind::Concept));
    unexpected(t, "a concept");
  }

  std::optional<Characteristic> characteristic_keyword() const {
    static constexpr std::array<std::pair<std::string_view, Characteristic>, 5> table = {{
        {"Transitive", Characteristic::Transitive},
        {"Symmetric", Characteristic::Symmetric},
        {"Asymmetric", Characteristic::Asymmetric},
        {"Reflexive", Characteristic::Reflexive},
        {"Irreflexive", Characteristic::Irreflexive},
    }};
    for (const auto& [word, c] : table) {
      if (keyword(word)) return c;
    }
    return std::nullopt;
  }

  bool role_axiom_ahead() const {
    if (keyword("Universal") || keyword("inv")) return true;
    if (peek().type != Tok::Name) return false;
    return keyword("SubRoleOf", 1) || keyword("EquivalentRole", 1) || keyword("o", 1);
  }

  Axiom axiom_body() {
    const Token& t0 = peek();
    if (t0.type == Tok::End) fail(t0, "expected an axiom");

    if (t0.type == Tok::Name && punct(":", 1)) {
      auto ind = name_of(NameKind::Individual);
      next();
      return ConceptAssertion{concept_expr(), std::move(ind)};
    }
    if (t0.type == Tok::Name && (punct("=", 1) || punct("!=", 1))) {
      const bool same = punct("=", 1);
      auto lhs = name_of(NameKind::Individual);
      next();
      auto rhs = name_of(NameKind::Individual);
      if (same) return SameIndividual{std::move(lhs), std::move(rhs)};
      return DifferentIndividuals{std::move(lhs), std::move(rhs)};
    }
    if (punct("(") && peek(1).type == Tok::Name && punct(",", 2)) {
      next();
      auto subject = name_of(NameKind::Individual);
      expect_punct(",");
      auto object = name_of(NameKind::Individual);
      expect_punct(")");
      expect_punct(":");
      return RoleAssertion{role(), std::move(subject), std::move(object)};
    }
    if (keyword("Disjoint")) {
      next();
      expect_punct("(");
      RoleExpr lhs = role();
      expect_punct(",");
      RoleExpr rhs = role();
      expect_punct(")");
      return RoleDisjointness{std::move(lhs), std::move(rhs)};
    }
    if (auto ch = characteristic_keyword()) {
      next();
      expect_punct("(");
      RoleExpr r = role();
      expect_punct(")");
      return RoleCharacteristic{*ch, std::move(r)};
    }
    if (role_axiom_ahead()) {
      RoleExpr lhs = role();
      if (keyword("o")) {
        next();
        RoleExpr second = role();
        if (keyword("o")) fail(peek(), "role chains are limited to two roles");
        if (!keyword("SubRoleOf")) unexpected(peek(), "'SubRoleOf'");
        next();
        return RoleChainInclusion{std::move(lhs), std::move(second), role()};
      }
      if (keyword("SubRoleOf")) {
        next();
        return RoleInclusion{std::move(lhs), role()};
      }
      if (keyword("EquivalentRole")) {
        next();
        return RoleEquivalence{std::move(lhs), role()};
      }
      unexpected(peek(), "'SubRoleOf', 'EquivalentRole' or 'o'");
    }

    Concept lhs = concept_expr();
    if (keyword("SubClassOf")) {
      next();
      return ConceptInclusion{std::move(lhs), concept_expr()};
    }
    if (keyword("EquivalentTo")) {
      next();
      return ConceptEquivalence{std::move(lhs), concept_expr()};
    }
    unexpected(peek(), "'SubClassOf' or 'EquivalentTo'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
};

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 1;
  while (true) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++line_no;
  }
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Signature sig;
  std::vector<Axiom> axioms;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    LineParser p(tokenize_line(line, line_no), sig);
    if (p.at_end()) return;
    axioms.push_back(p.axiom());
  });
  return build_ontology(std::move(axioms));
}

Axiom parse_axiom(std::string_view text, const Signature& signature) {
  Signature sig = signature;
  std::optional<Axiom> result;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto tokens = tokenize_line(line, line_no);
    LineParser p(std::move(tokens), sig);
    if (p.at_end()) return;
    if (result) throw ParseError(ParseError::Kind::Syntax, line_no, 1, "expected exactly one axiom");
    result = p.axiom();
  });
  if (!result) throw ParseError(ParseError::Kind::Syntax, 1, 1, "expected an axiom");
  return *result;
}

Concept parse_concept(std::string_view text, const Signature& signature) {
  if (auto nl = text.find('\n'); nl != std::string_view::npos) {
    throw ParseError(ParseError::Kind::Syntax, 1, nl + 1, "concept must fit on one line");
  }
  Signature sig = signature;
  LineParser p(tokenize_line(text, 1), sig);
  return p.whole_concept();
}

// --- Rendering --------------------------------------------------------------

namespace {

// Where a concept appears, for deciding on parentheses.
enum class Slot { Operand, OrLeft, OrRight, AndLeft, AndRight, Unary };

void render_concept(const Concept& c, Slot slot, std::string& out) {
  using K = Concept::Kind;
  auto binary = [&](std::string_view op, Slot left, Slot right, bool bare) {
    if (!bare) out += '(';
    render_concept(c.lhs(), left, out);
    out += op;
    render_concept(c.rhs(), right, out);
    if (!bare) out += ')';
  };
  auto quantified = [&](std::string_view head) {
    out += head;
    out += render(c.role());
    out += '.';
    render_concept(c.filler(), Slot::Unary, out);
  };
  switch (c.kind()) {
    case K::Named: out += c.name(); break;
    case K::Top: out += "Top"; break;
    case K::Bottom: out += "Bottom"; break;
    case K::Nominal:
      out += '{';
      out += c.name();
      out += '}';
      break;
    case K::Self:
      out += "Self(";
      out += render(c.role());
      out += ')';
      break;
    case K::Or: binary(" or ", Slot::OrLeft, Slot::OrRight, slot == Slot::OrLeft); break;
    case K::And: binary(" and ", Slot::AndLeft, Slot::AndRight, slot == Slot::AndLeft); break;
    case K::Not:
      out += "not ";
      render_concept(c.operand(), Slot::Unary, out);
      break;
    case K::Exists: quantified("exists "); break;
    case K::Forall: quantified("forall "); break;
    case K::AtLeast: quantified(">= " + std::to_string(c.count()) + " "); break;
    case K::AtMost: quantified("<= " + std::to_string(c.count()) + " "); break;
  }
}

std::string operand(const Concept& c) {
  std::string s;
  render_concept(c, Slot::Operand, s);
  return s;
}

struct AxiomRenderer {
  std::string operator()(const ConceptAssertion& a) const { return a.individual + " : " + operand(a.expr); }
  std::string operator()(const RoleAssertion& a) const {
    return "(" + a.subject + ", " + a.object + ") : " + render(a.role);
  }
  std::string operator()(const SameIndividual& a) const { return a.lhs + " = " + a.rhs; }
  std::string operator()(const DifferentIndividuals& a) const { return a.lhs + " != " + a.rhs; }
  std::string operator()(const ConceptInclusion& a) const {
    return operand(a.sub) + " SubClassOf " + operand(a.super);
  }
  std::string operator()(const ConceptEquivalence& a) const {
    return operand(a.lhs) + " EquivalentTo " + operand(a.rhs);
  }
  std::string operator()(const RoleInclusion& a) const { return render(a.sub) + " SubRoleOf " + render(a.super); }
  std::string operator()(const RoleEquivalence& a) const {
    return render(a.lhs) + " EquivalentRole " + render(a.rhs);
  }
  std::string operator()(const RoleChainInclusion& a) const {
    return render(a.first) + " o " + render(a.second) + " SubRoleOf " + render(a.super);
  }
  std::string operator()(const RoleDisjointness& a) const {
    return "Disjoint(" + render(a.lhs) + ", " + render(a.rhs) + ")";
  }
  std::string operator()(const RoleCharacteristic& a) const {
    return std::string(to_string(a.kind)) + "(" + render(a.role) + ")";
  }
};

}  // namespace

std::string render(const RoleExpr& role) {
  switch (role.kind()) {
    case RoleExpr::Kind::Universal: return "Universal";
    case RoleExpr::Kind::Named: return role.name();
    case RoleExpr::Kind::Inverse: return "inv(" + role.name() + ")";
  }
  return {};
}

std::string render(const Concept& concept_expr) { return operand(concept_expr); }

std::string render(const Axiom& axiom) { return std::visit(AxiomRenderer{}, axiom.body); }

std::string render(const Ontology& ontology) {
  std::string out;
  for (const auto& a : ontology.axioms) {
    out += render(a);
    out += '\n';
  }
  return out;
}

}  // namespace dlkit
