#include <cctype>

#include "tcomb/errors.hpp"
#include "tcomb/logic.hpp"

namespace tcomb {

std::string to_string(const Term& t) {
  std::string out = t.head;
  for (const auto& fn : t.apps) out = "(" + fn + " " + out + ")";
  return out;
}

std::string to_string(const Literal& l) {
  std::string atom;
  if (l.is_equality())
    atom = "(= " + to_string(l.equality().lhs) + " " + to_string(l.equality().rhs) + ")";
  else
    atom = "(" + l.predicate().family + " " + std::to_string(l.predicate().index) + ")";
  return l.positive ? atom : "(not " + atom + ")";
}

std::string to_string(const Cube& c) {
  if (c.size() == 1) return to_string(c.literals.front());
  std::string out = "(and";
  for (const auto& l : c.literals) out += " " + to_string(l);
  return out + ")";
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Literal: return to_string(f.literal());
    case Formula::Kind::Not: return "(not " + to_string(f.children().front()) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string out = f.kind() == Formula::Kind::And ? "(and" : "(or";
      for (const auto& k : f.children()) out += " " + to_string(k);
      return out + ")";
    }
  }
  return {};
}

std::string to_string(const Arrangement& a) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : a.blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + block[i];
    out += "}";
  }
  return out + "}";
}

namespace {

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::End, "", i_};
      return;
    }
    char c = src_[i_];
    if (c == '(' || c == ')') {
      tok_ = {c == '(' ? Token::Open : Token::Close, std::string(1, c), i_};
      ++i_;
      return;
    }
    std::size_t start = i_;
    while (i_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[i_])) && src_[i_] != '(' &&
           src_[i_] != ')')
      ++i_;
    tok_ = {Token::Atom, std::string(src_.substr(start, i_ - start)), start};
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_family_name(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) {}

  Formula formula_only() {
    Formula f = formula();
    if (lex_.peek().kind != Token::End) throw ParseError("trailing input", lex_.peek().pos);
    return f;
  }

 private:
  Token expect(Token::Kind k, const char* what) {
    if (lex_.peek().kind != k) throw ParseError(std::string("expected ") + what, lex_.peek().pos);
    return lex_.take();
  }

  Formula formula() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Open) throw ParseError("expected '('", t.pos);
    lex_.take();
    Token head = expect(Token::Atom, "connective or atom");
    if (head.text == "and" || head.text == "or") {
      std::vector<Formula> kids;
      while (lex_.peek().kind == Token::Open) kids.push_back(formula());
      expect(Token::Close, "')'");
      return head.text == "and" ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    if (head.text == "not") {
      Formula inner = formula();
      expect(Token::Close, "')'");
      if (inner.kind() == Formula::Kind::Literal && inner.literal().positive)
        return Formula::lit(inner.literal().negated());
      return Formula::negate(std::move(inner));
    }
    if (head.text == "=") {
      Term lhs = term();
      Term rhs = term();
      expect(Token::Close, "')'");
      return Formula::lit(Literal::eq(std::move(lhs), std::move(rhs)));
    }
    if (is_family_name(head.text)) {
      if (!sig_.has_family(head.text)) throw UnknownSymbolError(head.text);
      Token idx = expect(Token::Atom, "predicate index");
      unsigned long value = 0;
      bool ok = !idx.text.empty() && idx.text.size() <= 9 && idx.text[0] != '0';
      for (char c : idx.text) ok = ok && std::isdigit(static_cast<unsigned char>(c));
      if (!ok) throw ParseError("predicate index must be a positive integer", idx.pos);
      value = std::stoul(idx.text);
      expect(Token::Close, "')'");
      return Formula::lit(Literal::pred(head.text, static_cast<unsigned>(value)));
    }
    throw ParseError("unknown connective '" + head.text + "'", head.pos);
  }

  Term term() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Atom) {
      Token a = lex_.take();
      check_name(a);
      if (sig_.has_constant(a.text)) return Term::constant(a.text);
      if (sig_.has_function(a.text)) throw ParseError("function symbol '" + a.text + "' used as a term", a.pos);
      return Term::var(a.text);
    }
    if (t.kind != Token::Open) throw ParseError("expected a term", t.pos);
    lex_.take();
    Token fn = expect(Token::Atom, "function symbol");
    check_name(fn);
    if (!sig_.has_function(fn.text)) throw UnknownSymbolError(fn.text);
    Term inner = term();
    expect(Token::Close, "')'");
    return inner.applied(fn.text);
  }

  void check_name(const Token& a) {
    if (!a.text.empty() && a.text[0] == '_') throw ParseError("identifiers may not start with '_'", a.pos);
    if (!is_identifier(a.text)) throw ParseError("malformed identifier '" + a.text + "'", a.pos);
    if (a.text == "and" || a.text == "or" || a.text == "not")
      throw ParseError("reserved word '" + a.text + "' used as a term", a.pos);
  }

  Lexer lex_;
  const Signature& sig_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).formula_only(); }

Cube parse_cube(std::string_view text, const Signature& sig) {
  Formula f = parse_formula(text, sig);
  if (f.kind() == Formula::Kind::Literal) return Cube{f.literal()};
  if (f.kind() != Formula::Kind::And) throw ParseError("not a conjunction of literals", 0);
  Cube c;
  for (const auto& k : f.children()) {
    if (k.kind() != Formula::Kind::Literal) throw ParseError("not a conjunction of literals", 0);
    c.add(k.literal());
  }
  return c;
}

}  // namespace tcomb
