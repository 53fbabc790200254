#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "icln/classify.hpp"

namespace icln {

// One node of the entailment poset: an equivalence class of negation words,
// or one of the constants 0, bot, 1 when those are included.
struct PosetNode {
  std::optional<NWord> word;  // disengaged for constant nodes
  std::string label;          // "p", "~!p", ..., or "0" / "bot" / "1"
  Signature sig;

  FormulaPtr formula() const;
};

struct Poset {
  std::vector<PosetNode> nodes;
  std::vector<std::pair<int, int>> leq;     // all pairs a <= b, diagonal included
  std::vector<std::pair<int, int>> covers;  // transitive reduction of the strict order
};

// Orders the class representatives (and optionally 0, bot, 1, whose
// signatures come from full-formula evaluation) by signature inclusion.
Poset build_poset(const std::vector<EquivClass>& classes, bool with_constants);

std::vector<std::pair<int, int>> hasse_edges(const Poset& p);  // == p.covers

// Graphviz output, bottom-up ranks; node and edge lines in a fixed order.
std::string emit_dot(const Poset& p);

// {"nodes":[{"label":..., "signature":...}, ...],
//  "covers":[["~!p","~p"], ...]}
nlohmann::json poset_to_json(const Poset& p);

}  // namespace icln
