#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "icln/formula.hpp"

namespace icln {

// A model is a set of worlds under a reflexive transitive order, with a
// monotone valuation. Rooted models have a unique least world, the root;
// pseudosubmodels have no root and every world counts as imaginary.
//
// Worlds are indices into the sorted name table; at most 30 worlds, so
// up-sets and valuations fit in one word each. up[] always stores the
// reflexive transitive closure.
struct RModel {
  std::vector<std::string> names;  // sorted, unique, non-empty
  std::vector<std::uint32_t> up;   // up[w] = bitmask of v with w <= v
  std::vector<std::uint32_t> val;  // val[w] bit (i-1) = variable p_i holds at w
  std::optional<int> root;         // engaged exactly when !pseudo
  bool pseudo = false;

  int size() const { return static_cast<int>(names.size()); }
  bool leq(int u, int v) const { return (up[u] >> v) & 1u; }
  bool imaginary(int w) const { return pseudo || w != *root; }
  int index_of(std::string_view name) const;  // -1 when absent
};

constexpr int kMaxWorlds = 30;

// Everything that can be wrong with a model semantically. Structural
// problems (unknown names, bad shapes) are reported as MalformedModel
// instead, since no model exists to attach them to.
enum class DefectKind : std::uint8_t {
  EmptyWorldSet,
  NotReflexive,          // verify-closure mode only
  NotTransitive,         // verify-closure mode only
  NoLeastRoot,           // some world is not above the root, or sits below it
  NonMonotoneValuation,  // u <= v but a variable true at u is false at v
};

struct ModelDefect {
  DefectKind kind;
  std::string witness_a, witness_b;  // offending world(s); b may be empty
  std::string message() const;
};

struct MalformedModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownWorld : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input shape for validation, typically decoded from JSON.
struct RawModel {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> order;  // u <= v pairs
  std::optional<std::string> root;  // required iff !pseudo
  std::map<std::string, std::vector<int>> valuation;  // world -> variable indices
  bool pseudo = false;
};

// Close: take the reflexive transitive closure of the given pairs.
// Verify: require the given pairs to already be closed and report
// NotReflexive / NotTransitive otherwise.
enum class ClosurePolicy : std::uint8_t { Close, Verify };

struct ValidatedModel {
  std::optional<RModel> model;  // engaged iff defects is empty
  std::vector<ModelDefect> defects;
  bool ok() const { return defects.empty(); }
};

ValidatedModel validate_model(const RawModel& raw, ClosurePolicy policy = ClosurePolicy::Close);

// Forcing. A world u forces:
//   a variable  iff the valuation grants it at u;
//   1 always, 0 never;
//   bot         iff u is imaginary;
//   A & B, A | B pointwise;
//   A -> B      iff every v >= u forcing A forces B;
//   ~A          iff no v >= u forces A;
//   !A          iff every v >= u is imaginary or does not force A.
bool forces(const RModel& m, int world, const Formula& f);
bool forces(const RModel& m, std::string_view world, const Formula& f);  // throws UnknownWorld

// Forced at every world. For rooted models this coincides with forcing at
// the root, since forcing is monotone along <=.
bool valid_in(const RModel& m, const Formula& f);
bool valid_in(const RModel& m, const NWord& w);  // primitive reading

// Restriction to the up-set of w. Rooted at w when w is the root of a rooted
// model; a pseudosubmodel otherwise (w was imaginary, and stays so). Forcing
// of every formula at every surviving world is unchanged.
RModel generated_submodel(const RModel& m, int world);

// Restriction to the imaginary worlds, as a pseudosubmodel; disengaged when
// there are none (the model was a single real world).
std::optional<RModel> imaginary_part(const RModel& m);

// JSON shape:
//   {"worlds":["r","a"], "root":"r", "order":[["r","a"]],
//    "valuation":{"a":["p"]}, "pseudo":false}
// "pseudo" defaults to false; "root" must be present iff "pseudo" is false;
// "order" need not be closed; worlds may be omitted from "valuation".
RawModel model_from_json(const nlohmann::json& j);  // throws MalformedModel
nlohmann::json model_to_json(const RModel& m);

}  // namespace icln
