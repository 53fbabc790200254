#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "icln/poset.hpp"

using namespace icln;

namespace {

using LabelEdge = std::pair<std::string, std::string>;

std::vector<LabelEdge> cover_labels(const Poset& p) {
  std::vector<LabelEdge> out;
  for (auto [a, b] : p.covers)
    out.emplace_back(p.nodes[a].label, p.nodes[b].label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelEdge> sorted(std::vector<LabelEdge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The strict-entailment covers among the fifteen classes.  Words with an
// even total of negations never compare with odd ones, so the diagram is
// two disjoint components.
const std::vector<LabelEdge> kEvenCovers = {
    {"~!p", "p"},      {"p", "~~p"},      {"p", "!!p"},
    {"~!p", "!~~!p"},  {"!~~!p", "!!p"},  {"~~p", "!!~~p"},
    {"!!p", "!!~~p"},  {"!!~~p", "!~p"},  {"!~p", "~~!!p"},
};
const std::vector<LabelEdge> kOddCovers = {
    {"~!!p", "~p"},     {"~!!p", "!~~!!p"}, {"~p", "!!~p"},
    {"!~~!!p", "!!~p"}, {"!!~p", "!~~p"},   {"!~~p", "!p"},
    {"!p", "~~!p"},
};
const std::vector<LabelEdge> kConstantCovers = {
    {"0", "~!p"},   {"0", "bot"},      {"0", "~!!p"},    {"bot", "!~~!p"},
    {"bot", "!~~!!p"}, {"~~!!p", "1"}, {"~~!p", "1"},
};

int parity(const NWord& w) {
  return static_cast<int>(w.negs.size()) % 2;
}

}  // namespace

TEST_CASE("the fifteen classes form two seven-and-eight element components") {
  Poset p = build_poset(census(5), false);
  REQUIRE(p.nodes.size() == 15);
  CHECK(p.nodes[0].label == "p");
  CHECK(p.nodes[14].label == "!~~!!p");

  std::vector<LabelEdge> expected = kEvenCovers;
  expected.insert(expected.end(), kOddCovers.begin(), kOddCovers.end());
  CHECK(cover_labels(p) == sorted(expected));

  // Comparability never crosses the even/odd boundary.
  for (auto [a, b] : p.leq) {
    if (a == b) continue;
    CHECK(parity(*p.nodes[a].word) == parity(*p.nodes[b].word));
  }
}

TEST_CASE("adding the constants splices the components together") {
  Poset p = build_poset(census(5), true);
  REQUIRE(p.nodes.size() == 18);
  CHECK(p.nodes[15].label == "0");
  CHECK(p.nodes[16].label == "bot");
  CHECK(p.nodes[17].label == "1");

  std::vector<LabelEdge> expected = kEvenCovers;
  expected.insert(expected.end(), kOddCovers.begin(), kOddCovers.end());
  expected.insert(expected.end(), kConstantCovers.begin(),
                  kConstantCovers.end());
  CHECK(cover_labels(p) == sorted(expected));

  // 0 is the least element and 1 the greatest.
  for (int v = 0; v < 18; ++v) {
    CHECK(std::count(p.leq.begin(), p.leq.end(), std::make_pair(15, v)) == 1);
    CHECK(std::count(p.leq.begin(), p.leq.end(), std::make_pair(v, 17)) == 1);
  }
}

TEST_CASE("the reported order is the reflexive transitive closure of covers") {
  Poset p = build_poset(census(5), true);
  int n = static_cast<int>(p.nodes.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) reach[v][v] = true;
  for (auto [a, b] : p.covers) reach[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (reach[a][k] && reach[k][b]) reach[a][b] = true;

  std::set<std::pair<int, int>> leq(p.leq.begin(), p.leq.end());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      CHECK(reach[a][b] == (leq.count({a, b}) == 1));
}

TEST_CASE("dot output is stable and bottom-up") {
  Poset p = build_poset(census(5), false);
  std::string dot = emit_dot(p);
  CHECK(dot == emit_dot(p));
  CHECK(dot.find("digraph entailment {") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 [label=\"p\"];") != std::string::npos);
  CHECK(dot.find("n4 -> n0;") != std::string::npos);  // ~!p -> p

  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 2))
    ++arrows;
  CHECK(arrows == 16);

  // Both components have chains of six covers, so six ranks are emitted.
  std::size_t ranks = 0;
  for (std::size_t at = dot.find("rank=same"); at != std::string::npos;
       at = dot.find("rank=same", at + 9))
    ++ranks;
  CHECK(ranks == 6);
}

TEST_CASE("json output lists nodes with signatures and covers by label") {
  Poset p = build_poset(census(5), true);
  nlohmann::json j = poset_to_json(p);
  REQUIRE(j.at("nodes").size() == 18);
  REQUIRE(j.at("covers").size() == 23);
  CHECK(j["nodes"][0]["label"] == "p");
  CHECK(j["nodes"][0]["signature"] == "-+--+--+-");
  CHECK(j["nodes"][15]["label"] == "0");
  CHECK(j["nodes"][15]["signature"] == "---------");

  bool found = false;
  for (const auto& e : j["covers"])
    if (e[0] == "~!p" && e[1] == "p") found = true;
  CHECK(found);
}
