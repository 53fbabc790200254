#include "icln/poset.hpp"

#include <algorithm>
#include <sstream>

namespace icln {

FormulaPtr PosetNode::formula() const {
  if (word) return to_formula(*word);
  if (label == "0") return Formula::zero();
  if (label == "1") return Formula::one();
  return Formula::bot();
}

Poset build_poset(const std::vector<EquivClass>& classes, bool with_constants) {
  Poset p;
  for (const EquivClass& c : classes)
    p.nodes.push_back({c.rep, render(c.rep), c.sig});
  if (with_constants) {
    p.nodes.push_back({std::nullopt, "0", signature(*Formula::zero())});
    p.nodes.push_back({std::nullopt, "bot", signature(*Formula::bot())});
    p.nodes.push_back({std::nullopt, "1", signature(*Formula::one())});
  }

  int n = static_cast<int>(p.nodes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.nodes[a].sig.subset_of(p.nodes[b].sig)) p.leq.emplace_back(a, b);

  auto leq = [&](int a, int b) { return p.nodes[a].sig.subset_of(p.nodes[b].sig); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != a && k != b && leq(a, k) && leq(k, b)) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

std::vector<std::pair<int, int>> hasse_edges(const Poset& p) { return p.covers; }

std::string emit_dot(const Poset& p) {
  int n = static_cast<int>(p.nodes.size());

  // Rank = longest cover chain from a minimal node, so equally deep nodes
  // share a row in the drawing.
  std::vector<int> rank(n, 0);
  auto depth = [&](auto&& self, int v) -> int {
    if (rank[v]) return rank[v];
    int best = 1;
    for (auto [a, b] : p.covers)
      if (b == v) best = std::max(best, 1 + self(self, a));
    return rank[v] = best;
  };
  int max_rank = 0;
  for (int v = 0; v < n; ++v) max_rank = std::max(max_rank, depth(depth, v));

  std::ostringstream out;
  out << "digraph entailment {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int v = 0; v < n; ++v)
    out << "  n" << v << " [label=\"" << p.nodes[v].label << "\"];\n";
  for (int r = 1; r <= max_rank; ++r) {
    out << "  { rank=same;";
    for (int v = 0; v < n; ++v)
      if (rank[v] == r) out << " n" << v << ";";
    out << " }\n";
  }
  for (auto [a, b] : p.covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const PosetNode& n : p.nodes)
    nodes.push_back({{"label", n.label}, {"signature", n.sig.str()}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers)
    covers.push_back({p.nodes[a].label, p.nodes[b].label});
  return {{"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

}  // namespace icln
