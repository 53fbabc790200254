#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icln {

// Connectives of the full language. The language has two falsity constants
// (0 is forced nowhere, bot exactly at imaginary worlds) and accordingly two
// negations: ~A abbreviates A -> 0, !A abbreviates A -> bot. Both exist as
// primitive connectives here so the two readings can be compared.
// A biconditional a <-> b is parsed as (a -> b) & (b -> a), never stored.
enum class Conn : std::uint8_t {
  Var,      // propositional variable: p, p2, p3, ...
  Zero,     // 0
  One,      // 1
  Bot,      // bot
  NegInt,   // ~A
  NegPerp,  // !A
  And,
  Or,
  Imp,
};

enum class NegKind : std::uint8_t { Int, Perp };  // '~' respectively '!'

// A negation word: a (possibly empty) stack of negations applied to the
// variable p, outermost first. {Perp, Int} is !~p.
struct NWord {
  std::vector<NegKind> negs;

  int length() const { return static_cast<int>(negs.size()); }
  bool even() const { return negs.size() % 2 == 0; }
  friend auto operator<=>(const NWord&, const NWord&) = default;
};

// Length first, then lexicographic with Int < Perp. This is the order in
// which words are enumerated and listed.
bool shortlex_less(const NWord& a, const NWord& b);

// All words of length 0..max_len in shortlex order (2^(max_len+1) - 1 words).
std::vector<NWord> all_nwords(int max_len);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Subtrees are shared; sharing is safe across
// threads since nodes never change after construction.
class Formula {
 public:
  Conn conn() const { return conn_; }
  int var() const { return var_; }                  // Var nodes: index >= 1, p == 1
  const FormulaPtr& left() const { return left_; }  // unary operand, or lhs
  const FormulaPtr& right() const { return right_; }

  static FormulaPtr variable(int index);
  static FormulaPtr zero();
  static FormulaPtr one();
  static FormulaPtr bot();
  static FormulaPtr neg(NegKind k, FormulaPtr a);
  static FormulaPtr neg_int(FormulaPtr a) { return neg(NegKind::Int, std::move(a)); }
  static FormulaPtr neg_perp(FormulaPtr a) { return neg(NegKind::Perp, std::move(a)); }
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr imp(FormulaPtr a, FormulaPtr b);

 private:
  Formula(Conn c, int v, FormulaPtr l, FormulaPtr r)
      : conn_(c), var_(v), left_(std::move(l)), right_(std::move(r)) {}

  Conn conn_;
  int var_;
  FormulaPtr left_, right_;
};

bool equal(const Formula& a, const Formula& b);  // structural equality
bool equal(const FormulaPtr& a, const FormulaPtr& b);
int max_variable(const Formula& f);  // largest variable index, 0 if none

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(const std::string& what, std::size_t pos);
};

// Grammar (lowest precedence first, '->' and '<->' right-associative):
//   formula := imp ("<->" formula)?
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "!") unary | atom
//   atom    := var | "0" | "1" | "bot" | "(" formula ")"
//   var     := "p" [1-9][0-9]*
// Unicode aliases: U+00AC for '!', U+22A5 for "bot". Whitespace is free.
FormulaPtr parse_formula(std::string_view text);

// Accepts exactly ("~" | "!" | U+00AC)* "p" modulo whitespace.
NWord parse_nword(std::string_view text);

// How negations of a word are spelled out as connectives.
enum class NegationReading : std::uint8_t {
  Primitive,  // ~A, !A as unary connectives
  Defined,    // A -> 0, A -> bot
};
FormulaPtr to_formula(const NWord& w, NegationReading r = NegationReading::Primitive);

// Replaces every ~A by A -> 0 and every !A by A -> bot, recursively.
FormulaPtr with_defined_negations(const FormulaPtr& f);

// Minimal parentheses; parse_formula(render(f)) is structurally equal to f.
std::string render(const Formula& f);
std::string render(const NWord& w);  // e.g. "~!p"

}  // namespace icln
