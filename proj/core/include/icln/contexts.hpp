#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "icln/model.hpp"

namespace icln {

// The nine evaluation contexts that separate all negation words: the six
// rooted models over one variable with at most two maximal worlds carrying
// distinct p-values, and the three pseudosubmodels arising as their
// imaginary parts. Column order is fixed everywhere (tables, signatures).
enum class ContextId : int {
  c0,   // single world, p false        (○)
  c1,   // single world, p true         (●)
  m00,  // 2-chain, p false/false       (○/○)
  m01,  // 2-chain, p false at the root, true on top (●/○)
  m11,  // 2-chain, p true/true         (●/●)
  V,    // root below two incomparable tops, p false at one and true at the other
  i0,   // pseudo single world, p false:  imaginary part of m00
  i1,   // pseudo single world, p true:   imaginary part of m11
  i01,  // pseudo two-world anti-chain:   imaginary part of V
};

constexpr int kContextCount = 9;

std::string_view context_name(ContextId id);     // ASCII: "c0", ..., "i01"
std::string_view context_display(ContextId id);  // "○", "●", "○/○", ...

struct EvalContext {
  ContextId id;
  RModel model;
};

const std::array<EvalContext, kContextCount>& canonical_suite();

// Bounds for exhaustive model search. Height counts worlds on a longest
// chain, so a single world has height 1.
struct SearchBound {
  int max_worlds = 4;
  int max_height = 3;
};

// Every rooted model with at most max_worlds worlds, height at most
// max_height, and a monotone valuation over variables p..p<num_vars>, up to
// isomorphism, in a fixed order: world count first, then a canonical
// encoding. Worlds are named w0 (the root), w1, ...
std::vector<RModel> enumerate_rmodels(const SearchBound& bound, int num_vars = 1);

struct Countermodel {
  RModel model;
  int world;  // a world refuting the formula
  std::string world_name() const { return model.names[world]; }
};

// Smallest enumerated model containing a world that refutes f, if any
// exists within the bound. Variables searched: those occurring in f.
std::optional<Countermodel> find_countermodel(const Formula& f, const SearchBound& bound);

// True when no countermodel exists within the bound.
bool check_validity(const Formula& f, const SearchBound& bound);

}  // namespace icln
