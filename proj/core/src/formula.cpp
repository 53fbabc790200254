#include "icln/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace icln {

bool shortlex_less(const NWord& a, const NWord& b) {
  if (a.negs.size() != b.negs.size()) return a.negs.size() < b.negs.size();
  return a.negs < b.negs;
}

std::vector<NWord> all_nwords(int max_len) {
  std::vector<NWord> out;
  for (int len = 0; len <= max_len; ++len) {
    // Counting in binary with Int = 0 yields lexicographic order per length.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      NWord w;
      w.negs.reserve(len);
      for (int i = len - 1; i >= 0; --i)
        w.negs.push_back((bits >> i) & 1 ? NegKind::Perp : NegKind::Int);
      out.push_back(std::move(w));
    }
  }
  return out;
}

FormulaPtr Formula::variable(int index) {
  if (index < 1 || index > 30)
    throw std::invalid_argument("variable index out of range 1..30");
  return FormulaPtr(new Formula(Conn::Var, index, nullptr, nullptr));
}
FormulaPtr Formula::zero() { return FormulaPtr(new Formula(Conn::Zero, 0, nullptr, nullptr)); }
FormulaPtr Formula::one() { return FormulaPtr(new Formula(Conn::One, 0, nullptr, nullptr)); }
FormulaPtr Formula::bot() { return FormulaPtr(new Formula(Conn::Bot, 0, nullptr, nullptr)); }
FormulaPtr Formula::neg(NegKind k, FormulaPtr a) {
  Conn c = k == NegKind::Int ? Conn::NegInt : Conn::NegPerp;
  return FormulaPtr(new Formula(c, 0, std::move(a), nullptr));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::And, 0, std::move(a), std::move(b)));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::Or, 0, std::move(a), std::move(b)));
}
FormulaPtr Formula::imp(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::Imp, 0, std::move(a), std::move(b)));
}

bool equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.conn() != b.conn() || a.var() != b.var()) return false;
  if (bool(a.left()) != bool(b.left()) || bool(a.right()) != bool(b.right())) return false;
  if (a.left() && !equal(*a.left(), *b.left())) return false;
  if (a.right() && !equal(*a.right(), *b.right())) return false;
  return true;
}
bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  return equal(*a, *b);
}

int max_variable(const Formula& f) {
  int m = f.conn() == Conn::Var ? f.var() : 0;
  if (f.left()) m = std::max(m, max_variable(*f.left()));
  if (f.right()) m = std::max(m, max_variable(*f.right()));
  return m;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}

namespace {

enum class Tok : std::uint8_t {
  LParen, RParen, And, Or, Imp, Iff, TildeNeg, BangNeg, Zero, One, Bot, Var, End,
};

struct Token {
  Tok kind;
  int var = 0;        // Var only
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) return {Tok::End, 0, start};
    char c = text_[i_];
    switch (c) {
      case '(': ++i_; return {Tok::LParen, 0, start};
      case ')': ++i_; return {Tok::RParen, 0, start};
      case '&': ++i_; return {Tok::And, 0, start};
      case '|': ++i_; return {Tok::Or, 0, start};
      case '~': ++i_; return {Tok::TildeNeg, 0, start};
      case '!': ++i_; return {Tok::BangNeg, 0, start};
      case '0': ++i_; return {Tok::Zero, 0, start};
      case '1': ++i_; return {Tok::One, 0, start};
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') { i_ += 2; return {Tok::Imp, 0, start}; }
        throw ParseError("expected '->'", start);
      case '<':
        if (i_ + 2 < text_.size() && text_[i_ + 1] == '-' && text_[i_ + 2] == '>') {
          i_ += 3;
          return {Tok::Iff, 0, start};
        }
        throw ParseError("expected '<->'", start);
      default: break;
    }
    if (starts_with("\xc2\xac")) { i_ += 2; return {Tok::BangNeg, 0, start}; }      // U+00AC
    if (starts_with("\xe2\x8a\xa5")) { i_ += 3; return {Tok::Bot, 0, start}; }      // U+22A5
    if (starts_with("bot")) { i_ += 3; return {Tok::Bot, 0, start}; }
    if (c == 'p') {
      ++i_;
      if (i_ < text_.size() && text_[i_] >= '1' && text_[i_] <= '9') {
        long idx = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          idx = idx * 10 + (text_[i_] - '0');
          if (idx > 30) throw ParseError("variable index too large (max p30)", start);
          ++i_;
        }
        return {Tok::Var, static_cast<int>(idx), start};
      }
      return {Tok::Var, 1, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(i_).substr(0, s.size()) == s; }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  FormulaPtr parse_full() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

  NWord parse_word() {
    NWord w;
    for (;;) {
      if (cur_.kind == Tok::TildeNeg) w.negs.push_back(NegKind::Int);
      else if (cur_.kind == Tok::BangNeg) w.negs.push_back(NegKind::Perp);
      else break;
      advance();
    }
    if (cur_.kind != Tok::Var || cur_.var != 1)
      throw ParseError("negation words are built from '~', '!' and the variable p", cur_.pos);
    advance();
    expect_end();
    return w;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect_end() {
    if (cur_.kind != Tok::End) throw ParseError("unexpected trailing input", cur_.pos);
  }

  FormulaPtr parse_iff() {
    FormulaPtr a = parse_imp();
    if (cur_.kind == Tok::Iff) {
      advance();
      FormulaPtr b = parse_iff();
      return Formula::conj(Formula::imp(a, b), Formula::imp(b, a));
    }
    return a;
  }

  FormulaPtr parse_imp() {
    FormulaPtr a = parse_or();
    if (cur_.kind == Tok::Imp) {
      advance();
      return Formula::imp(std::move(a), parse_imp());
    }
    return a;
  }

  FormulaPtr parse_or() {
    FormulaPtr a = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      a = Formula::disj(std::move(a), parse_and());
    }
    return a;
  }

  FormulaPtr parse_and() {
    FormulaPtr a = parse_unary();
    while (cur_.kind == Tok::And) {
      advance();
      a = Formula::conj(std::move(a), parse_unary());
    }
    return a;
  }

  FormulaPtr parse_unary() {
    if (cur_.kind == Tok::TildeNeg) { advance(); return Formula::neg_int(parse_unary()); }
    if (cur_.kind == Tok::BangNeg) { advance(); return Formula::neg_perp(parse_unary()); }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::Var: advance(); return Formula::variable(t.var);
      case Tok::Zero: advance(); return Formula::zero();
      case Tok::One: advance(); return Formula::one();
      case Tok::Bot: advance(); return Formula::bot();
      case Tok::LParen: {
        advance();
        FormulaPtr f = parse_iff();
        if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.pos);
        advance();
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, 0, 0};
};

// Precedence levels used by the renderer: Imp 1, Or 2, And 3, unary 4.
int prec(Conn c) {
  switch (c) {
    case Conn::Imp: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
    case Conn::NegInt:
    case Conn::NegPerp: return 4;
    default: return 5;
  }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  int p = prec(f.conn());
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.conn()) {
    case Conn::Var:
      out += 'p';
      if (f.var() != 1) out += std::to_string(f.var());
      break;
    case Conn::Zero: out += '0'; break;
    case Conn::One: out += '1'; break;
    case Conn::Bot: out += "bot"; break;
    case Conn::NegInt:
    case Conn::NegPerp:
      out += f.conn() == Conn::NegInt ? '~' : '!';
      render_into(*f.left(), p, out);
      break;
    case Conn::And:
      render_into(*f.left(), p, out);
      out += " & ";
      render_into(*f.right(), p + 1, out);
      break;
    case Conn::Or:
      render_into(*f.left(), p, out);
      out += " | ";
      render_into(*f.right(), p + 1, out);
      break;
    case Conn::Imp:
      render_into(*f.left(), p + 1, out);  // '->' is right-associative
      out += " -> ";
      render_into(*f.right(), p, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse_full(); }

NWord parse_nword(std::string_view text) { return Parser(text).parse_word(); }

FormulaPtr to_formula(const NWord& w, NegationReading r) {
  FormulaPtr f = Formula::variable(1);
  for (auto it = w.negs.rbegin(); it != w.negs.rend(); ++it) {
    if (r == NegationReading::Primitive)
      f = Formula::neg(*it, std::move(f));
    else
      f = Formula::imp(std::move(f), *it == NegKind::Int ? Formula::zero() : Formula::bot());
  }
  return f;
}

FormulaPtr with_defined_negations(const FormulaPtr& f) {
  if (!f) return f;
  FormulaPtr l = with_defined_negations(f->left());
  FormulaPtr r = with_defined_negations(f->right());
  switch (f->conn()) {
    case Conn::NegInt: return Formula::imp(std::move(l), Formula::zero());
    case Conn::NegPerp: return Formula::imp(std::move(l), Formula::bot());
    case Conn::And: return Formula::conj(std::move(l), std::move(r));
    case Conn::Or: return Formula::disj(std::move(l), std::move(r));
    case Conn::Imp: return Formula::imp(std::move(l), std::move(r));
    default: return f;  // atoms are shared as-is
  }
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 1, out);
  return out;
}

std::string render(const NWord& w) {
  std::string out;
  out.reserve(w.negs.size() + 1);
  for (NegKind k : w.negs) out += k == NegKind::Int ? '~' : '!';
  out += 'p';
  return out;
}

}  // namespace icln
