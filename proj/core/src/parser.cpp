#include "mm/parser.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace mm {

namespace {

enum class TokKind {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Caret,
  Slash,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semicolon,
  Equals,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  Int number;
  std::size_t line = 1;
  std::size_t column = 1;
};

const char* token_name(TokKind k) {
  switch (k) {
    case TokKind::Ident: return "identifier";
    case TokKind::Number: return "integer";
    case TokKind::Plus: return "'+'";
    case TokKind::Minus: return "'-'";
    case TokKind::Star: return "'*'";
    case TokKind::Caret: return "'^'";
    case TokKind::Slash: return "'/'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::LBracket: return "'['";
    case TokKind::RBracket: return "']'";
    case TokKind::Comma: return "','";
    case TokKind::Semicolon: return "';'";
    case TokKind::Equals: return "'='";
    case TokKind::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = TokKind::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      current_.kind = TokKind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
      current_.kind = TokKind::Number;
      current_.text = text_.substr(start, pos_ - start);
      current_.number = Int(current_.text);
      return;
    }
    bump();
    switch (c) {
      case '+': current_.kind = TokKind::Plus; return;
      case '-': current_.kind = TokKind::Minus; return;
      case '*': current_.kind = TokKind::Star; return;
      case '^': current_.kind = TokKind::Caret; return;
      case '/': current_.kind = TokKind::Slash; return;
      case '(': current_.kind = TokKind::LParen; return;
      case ')': current_.kind = TokKind::RParen; return;
      case '[': current_.kind = TokKind::LBracket; return;
      case ']': current_.kind = TokKind::RBracket; return;
      case ',': current_.kind = TokKind::Comma; return;
      case ';': current_.kind = TokKind::Semicolon; return;
      case '=': current_.kind = TokKind::Equals; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                         current_.column);
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_;
};

bool is_reserved(const std::string& word) {
  return word == "ring" || word == "ideal" || word == "polytope" || word == "QQ" || word == "GF";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().column);
  }

  Token expect(TokKind kind) {
    if (lex_.peek().kind != kind)
      fail(std::string("expected ") + token_name(kind) + ", found " +
           token_name(lex_.peek().kind));
    return lex_.take();
  }

  bool accept(TokKind kind) {
    if (lex_.peek().kind != kind) return false;
    lex_.take();
    return true;
  }

  TokKind peek_kind() const { return lex_.peek().kind; }
  const Token& peek() const { return lex_.peek(); }
  Token take() { return lex_.take(); }

  std::uint32_t expect_small_natural(const char* what) {
    Token t = expect(TokKind::Number);
    if (t.number > Int(std::numeric_limits<std::uint32_t>::max()))
      throw ParseError(std::string("literal overflow in ") + what, t.line, t.column);
    return static_cast<std::uint32_t>(t.number.get_ui());
  }

  // ---- polynomial expressions ----

  Polynomial parse_expression(const RingPtr& ring) {
    bool negate = accept(TokKind::Minus);
    Polynomial acc = parse_product(ring);
    if (negate) acc = -acc;
    while (true) {
      if (accept(TokKind::Plus)) {
        acc = acc + parse_product(ring);
      } else if (accept(TokKind::Minus)) {
        acc = acc - parse_product(ring);
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_product(const RingPtr& ring) {
    Polynomial acc = parse_factor(ring);
    while (accept(TokKind::Star)) acc = acc * parse_factor(ring);
    return acc;
  }

  Polynomial parse_factor(const RingPtr& ring) {
    if (accept(TokKind::Minus)) return -parse_factor(ring);
    Polynomial base = parse_primary(ring);
    if (accept(TokKind::Caret)) {
      if (peek_kind() != TokKind::Number)
        fail("exponent must be a nonnegative integer literal");
      std::uint32_t e = expect_small_natural("exponent");
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_primary(const RingPtr& ring) {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Ident: {
        Token id = take();
        auto idx = ring->variable_index(id.text);
        if (!idx) throw ParseError("unknown variable '" + id.text + "'", id.line, id.column);
        return Polynomial::variable(ring, *idx);
      }
      case TokKind::Number: {
        Token num = take();
        if (accept(TokKind::Slash)) {
          Token den = expect(TokKind::Number);
          if (den.number == 0)
            throw ParseError("zero denominator in rational literal", den.line, den.column);
          return Polynomial::constant(
              ring, FieldElement::of_fraction(num.number, den.number, ring->field()));
        }
        return Polynomial::constant(ring, FieldElement::of(num.number, ring->field()));
      }
      case TokKind::LParen: {
        take();
        Polynomial inner = parse_expression(ring);
        expect(TokKind::RParen);
        return inner;
      }
      default:
        fail(std::string("expected a variable, a number or '(', found ") + token_name(t.kind));
    }
  }

  // ---- declarations ----

  Field parse_field() {
    Token t = expect(TokKind::Ident);
    if (t.text == "QQ") return Field::rationals();
    if (t.text == "GF") {
      expect(TokKind::LParen);
      std::uint32_t p = expect_small_natural("field characteristic");
      expect(TokKind::RParen);
      return Field::prime(p);
    }
    throw ParseError("expected a field (QQ or GF(p)), found '" + t.text + "'", t.line, t.column);
  }

  RingPtr parse_ring_body(const MonomialOrder& order) {
    Field field = parse_field();
    expect(TokKind::LBracket);
    std::vector<std::string> names;
    while (true) {
      Token id = expect(TokKind::Ident);
      if (is_reserved(id.text))
        throw ParseError("'" + id.text + "' is reserved and cannot name a variable", id.line,
                         id.column);
      names.push_back(id.text);
      if (!accept(TokKind::Comma)) break;
    }
    expect(TokKind::RBracket);
    return make_ring(field, std::move(names), order);
  }

  std::vector<std::int64_t> parse_point() {
    expect(TokKind::LParen);
    std::vector<std::int64_t> coords;
    while (true) {
      bool neg = accept(TokKind::Minus);
      Token num = expect(TokKind::Number);
      if (num.number > Int(std::numeric_limits<std::int32_t>::max()))
        throw ParseError("literal overflow in point coordinate", num.line, num.column);
      std::int64_t v = static_cast<std::int64_t>(num.number.get_si());
      coords.push_back(neg ? -v : v);
      if (!accept(TokKind::Comma)) break;
    }
    expect(TokKind::RParen);
    return coords;
  }

  SessionDocument parse_session(const MonomialOrder& ring_order) {
    SessionDocument doc;
    std::string current_ring;
    while (peek_kind() != TokKind::End) {
      Token kw = expect(TokKind::Ident);
      if (kw.text != "ring" && kw.text != "ideal" && kw.text != "polytope")
        throw ParseError("expected a declaration (ring, ideal or polytope), found '" + kw.text +
                             "'",
                         kw.line, kw.column);
      Token name = expect(TokKind::Ident);
      if (is_reserved(name.text))
        throw ParseError("'" + name.text + "' is reserved and cannot be declared", name.line,
                         name.column);
      if (doc.rings.count(name.text) || doc.ideals.count(name.text) ||
          doc.polytopes.count(name.text))
        throw ParseError("duplicate name '" + name.text + "'", name.line, name.column);
      expect(TokKind::Equals);

      if (kw.text == "ring") {
        doc.rings.emplace(name.text, parse_ring_body(ring_order));
        doc.declarations.emplace_back(name.text, SessionDocument::DeclKind::Ring);
        current_ring = name.text;
      } else if (kw.text == "ideal") {
        if (current_ring.empty())
          throw ParseError("ideal '" + name.text + "' declared before any ring", name.line,
                           name.column);
        SessionDocument::IdealDecl decl;
        decl.ring_name = current_ring;
        const RingPtr& ring = doc.rings.at(current_ring);
        decl.generators.push_back(parse_expression(ring));
        while (accept(TokKind::Comma)) decl.generators.push_back(parse_expression(ring));
        doc.ideals.emplace(name.text, std::move(decl));
        doc.declarations.emplace_back(name.text, SessionDocument::DeclKind::Ideal);
      } else {
        SessionDocument::PolytopeDecl decl;
        decl.points.push_back(parse_point());
        decl.dimension = decl.points.front().size();
        while (peek_kind() == TokKind::LParen || peek_kind() == TokKind::Comma) {
          accept(TokKind::Comma);
          auto pt = parse_point();
          if (pt.size() != decl.dimension)
            fail("malformed point: expected " + std::to_string(decl.dimension) + " coordinates");
          decl.points.push_back(std::move(pt));
        }
        doc.polytopes.emplace(name.text, std::move(decl));
        doc.declarations.emplace_back(name.text, SessionDocument::DeclKind::Polytope);
      }
      expect(TokKind::Semicolon);
    }
    return doc;
  }

 private:
  Lexer lex_;
};

}  // namespace

const RingPtr& SessionDocument::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw_precondition("no ring named '" + name + "' in the session");
  return it->second;
}

const SessionDocument::IdealDecl& SessionDocument::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw_precondition("no ideal named '" + name + "' in the session");
  return it->second;
}

const SessionDocument::PolytopeDecl& SessionDocument::polytope(const std::string& name) const {
  auto it = polytopes.find(name);
  if (it == polytopes.end()) throw_precondition("no polytope named '" + name + "' in the session");
  return it->second;
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser parser(text);
  Polynomial p = parser.parse_expression(ring);
  if (parser.peek_kind() != TokKind::End) parser.fail("trailing input after expression");
  return p;
}

SessionDocument parse_session(const std::string& text, const MonomialOrder& ring_order) {
  Parser parser(text);
  return parser.parse_session(ring_order);
}

RingPtr parse_ring_description(const std::string& text, const MonomialOrder& order) {
  Parser parser(text);
  RingPtr ring = parser.parse_ring_body(order);
  if (parser.peek_kind() != TokKind::End) parser.fail("trailing input after ring description");
  return ring;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    FieldElement c = t.coeff;
    if (first) {
      if (c.is_display_negative()) {
        out << "-";
        c = -c;
      }
      first = false;
    } else if (c.is_display_negative()) {
      out << " - ";
      c = -c;
    } else {
      out << " + ";
    }
    bool printed_coeff = false;
    if (!c.is_one() || t.mono.is_one()) {
      out << c.str();
      printed_coeff = true;
    }
    if (!t.mono.is_one()) {
      bool first_var = !printed_coeff;
      for (std::size_t v = 0; v < t.mono.arity(); ++v) {
        std::uint32_t e = t.mono.exponent(v);
        if (e == 0) continue;
        if (!first_var) out << "*";
        first_var = false;
        out << p.ring()->variable(v);
        if (e > 1) out << "^" << e;
      }
    }
  }
  return out.str();
}

}  // namespace mm
