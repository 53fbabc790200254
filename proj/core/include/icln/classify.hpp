#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icln/contexts.hpp"
#include "icln/formula.hpp"

namespace icln {

// Validity profile across the canonical suite, one bit per context in
// column order c0, c1, m00, m01, m11, V, i0, i1, i01.
struct Signature {
  std::uint16_t bits = 0;

  bool test(int i) const { return (bits >> i) & 1u; }
  void set(int i, bool v) { bits = v ? bits | (1u << i) : bits & ~(1u << i); }
  bool subset_of(Signature o) const { return (bits & ~o.bits) == 0; }
  std::string str() const;  // nine '+'/'-' characters
  friend bool operator==(Signature, Signature) = default;
  friend auto operator<=>(Signature, Signature) = default;
};

Signature signature(const Formula& f);  // valid_in per context
Signature signature(const NWord& w);    // primitive reading

// The entailment criterion: a entails b exactly when every context
// validating a validates b. preceq decides it by signature inclusion;
// verify_signature_criterion cross-checks against bounded model search.
bool preceq(const NWord& a, const NWord& b);
bool equivalent(const NWord& a, const NWord& b);

// Canonical form by rewriting alone — no models are consulted. The rules:
//   A  aaa  -> a            (a triple of one negation collapses to one)
//   B  ~!v  -> ~!  / ~!!    (a ~! prefix absorbs its tail: to ~! when the
//                            tail has even length >= 2, to ~!! when odd >= 3)
//   C  ~!~p -> ~!!p         (the |tail| = 1 case of B)
//   E1 !~!p    -> ~~!p      (suffix equivalences between the two negations)
//   E2 !~!!p   -> ~~!!p
//   E5 !!~~!p  -> ~~!p
//   E6 !!~~!!p -> ~~!!p
// Each rule preserves equivalence, every run terminates, and the words on
// which no rule fires are exactly the fifteen canonical representatives.
NWord normalize(const NWord& w);

// Canonical form by evaluation: the word's signature is looked up among the
// fifteen class signatures of the length-5 census. Throws std::logic_error
// if the signature matches none — that would mean the classification
// machinery disagrees with itself.
NWord normalize_semantic(const NWord& w);

// A word is irreducible when no strictly shorter word is equivalent to it.
bool irreducible(const NWord& w);

struct EquivClass {
  NWord rep;                      // shortest member; ties broken by fewest
                                  // alternation blocks, then lexicographically
  Signature sig;
  std::vector<NWord> members;     // shortlex order, within the census length cap
  std::vector<NWord> irreducibles;
};

// Groups all words of length <= max_len by signature. Classes are sorted by
// shortlex order of their representatives.
std::vector<EquivClass> census(int max_len);

struct CriterionDisagreement {
  NWord a, b;
  bool by_signature;  // preceq(a, b)
  bool by_search;     // a -> b had no countermodel within the bound
};

struct CriterionReport {
  long long pairs = 0;
  std::vector<CriterionDisagreement> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Compares preceq with exhaustive countermodel search for every ordered
// pair of words of length <= max_len.
CriterionReport verify_signature_criterion(int max_len, const SearchBound& bound);

}  // namespace icln
