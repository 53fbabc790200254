#include "icln/model.hpp"

#include <algorithm>
#include <set>

namespace icln {

int RModel::index_of(std::string_view name) const {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

std::string ModelDefect::message() const {
  switch (kind) {
    case DefectKind::EmptyWorldSet:
      return "EmptyWorldSet: a model needs at least one world";
    case DefectKind::NotReflexive:
      return "NotReflexive: missing " + witness_a + " <= " + witness_a;
    case DefectKind::NotTransitive:
      return "NotTransitive: " + witness_a + " <= " + witness_b +
             " follows by transitivity but is not listed";
    case DefectKind::NoLeastRoot:
      return witness_b.empty()
                 ? "NoLeastRoot: world " + witness_a + " is not above the root"
                 : "NoLeastRoot: world " + witness_a + " sits below the root " + witness_b;
    case DefectKind::NonMonotoneValuation:
      return "NonMonotoneValuation: " + witness_a + " <= " + witness_b +
             " but some variable true at " + witness_a + " is false at " + witness_b;
  }
  return "unknown defect";
}

namespace {

std::vector<std::uint32_t> transitive_closure(std::vector<std::uint32_t> up, int n) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((up[i] >> k) & 1u) up[i] |= up[k];
  return up;
}

}  // namespace

ValidatedModel validate_model(const RawModel& raw, ClosurePolicy policy) {
  ValidatedModel out;

  if (raw.pseudo && raw.root)
    throw MalformedModel("pseudosubmodels have no root");
  if (!raw.pseudo && !raw.root)
    throw MalformedModel("rooted models need a root");
  if (static_cast<int>(raw.worlds.size()) > kMaxWorlds)
    throw MalformedModel("too many worlds (max 30)");

  std::vector<std::string> names = raw.worlds;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw MalformedModel("duplicate world name");
  for (const std::string& n : names)
    if (n.empty()) throw MalformedModel("empty world name");

  if (names.empty()) {
    out.defects.push_back({DefectKind::EmptyWorldSet, "", ""});
    return out;
  }

  RModel m;
  m.names = std::move(names);
  m.pseudo = raw.pseudo;
  int n = m.size();

  auto index = [&](const std::string& name, const char* where) {
    int i = m.index_of(name);
    if (i < 0) throw MalformedModel(std::string("unknown world \"") + name + "\" in " + where);
    return i;
  };

  std::vector<std::uint32_t> given(n, 0);
  for (int i = 0; i < n; ++i) given[i] |= 1u << i;
  for (const auto& [a, b] : raw.order)
    given[index(a, "order")] |= 1u << index(b, "order");

  m.up = transitive_closure(given, n);
  if (policy == ClosurePolicy::Verify) {
    std::vector<std::uint32_t> bare(n, 0);
    for (const auto& [a, b] : raw.order) bare[index(a, "order")] |= 1u << index(b, "order");
    for (int i = 0; i < n; ++i)
      if (!((bare[i] >> i) & 1u))
        out.defects.push_back({DefectKind::NotReflexive, m.names[i], ""});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((m.up[i] >> j) & 1u && !((bare[i] >> j) & 1u) && i != j)
          out.defects.push_back({DefectKind::NotTransitive, m.names[i], m.names[j]});
  }

  m.val.assign(n, 0);
  for (const auto& [world, vars] : raw.valuation) {
    int w = index(world, "valuation");
    for (int v : vars) {
      if (v < 1 || v > kMaxWorlds) throw MalformedModel("variable index out of range 1..30");
      m.val[w] |= 1u << (v - 1);
    }
  }

  if (!m.pseudo) {
    int r = index(*raw.root, "root");
    m.root = r;
    for (int i = 0; i < n; ++i) {
      if (!m.leq(r, i))
        out.defects.push_back({DefectKind::NoLeastRoot, m.names[i], ""});
      else if (i != r && m.leq(i, r))
        out.defects.push_back({DefectKind::NoLeastRoot, m.names[i], m.names[r]});
    }
  }

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && m.leq(u, v) && (m.val[u] & ~m.val[v]) != 0)
        out.defects.push_back({DefectKind::NonMonotoneValuation, m.names[u], m.names[v]});

  if (out.defects.empty()) out.model = std::move(m);
  return out;
}

bool forces(const RModel& m, int w, const Formula& f) {
  switch (f.conn()) {
    case Conn::Var: return (m.val[w] >> (f.var() - 1)) & 1u;
    case Conn::Zero: return false;
    case Conn::One: return true;
    case Conn::Bot: return m.imaginary(w);
    case Conn::And: return forces(m, w, *f.left()) && forces(m, w, *f.right());
    case Conn::Or: return forces(m, w, *f.left()) || forces(m, w, *f.right());
    case Conn::Imp:
      for (int v = 0; v < m.size(); ++v)
        if (m.leq(w, v) && forces(m, v, *f.left()) && !forces(m, v, *f.right())) return false;
      return true;
    case Conn::NegInt:
      for (int v = 0; v < m.size(); ++v)
        if (m.leq(w, v) && forces(m, v, *f.left())) return false;
      return true;
    case Conn::NegPerp:
      for (int v = 0; v < m.size(); ++v)
        if (m.leq(w, v) && !m.imaginary(v) && forces(m, v, *f.left())) return false;
      return true;
  }
  return false;
}

bool forces(const RModel& m, std::string_view world, const Formula& f) {
  int w = m.index_of(world);
  if (w < 0) throw UnknownWorld("unknown world \"" + std::string(world) + "\"");
  return forces(m, w, f);
}

bool valid_in(const RModel& m, const Formula& f) {
  for (int w = 0; w < m.size(); ++w)
    if (!forces(m, w, f)) return false;
  return true;
}

bool valid_in(const RModel& m, const NWord& w) { return valid_in(m, *to_formula(w)); }

namespace {

// Restriction of m to the worlds of `keep`; root preserved when asked.
RModel restrict_to(const RModel& m, std::uint32_t keep, std::optional<int> new_root) {
  RModel s;
  std::vector<int> old_of;
  for (int i = 0; i < m.size(); ++i)
    if ((keep >> i) & 1u) {
      old_of.push_back(i);
      s.names.push_back(m.names[i]);  // subsequence of a sorted list stays sorted
    }
  int k = static_cast<int>(old_of.size());
  s.up.assign(k, 0);
  s.val.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    s.val[i] = m.val[old_of[i]];
    for (int j = 0; j < k; ++j)
      if (m.leq(old_of[i], old_of[j])) s.up[i] |= 1u << j;
  }
  if (new_root) {
    auto it = std::find(old_of.begin(), old_of.end(), *new_root);
    s.root = static_cast<int>(it - old_of.begin());
    s.pseudo = false;
  } else {
    s.pseudo = true;
  }
  return s;
}

}  // namespace

RModel generated_submodel(const RModel& m, int world) {
  bool keeps_root = !m.pseudo && world == *m.root;
  return restrict_to(m, m.up[world], keeps_root ? m.root : std::nullopt);
}

std::optional<RModel> imaginary_part(const RModel& m) {
  std::uint32_t keep = 0;
  for (int i = 0; i < m.size(); ++i)
    if (m.imaginary(i)) keep |= 1u << i;
  if (keep == 0) return std::nullopt;
  return restrict_to(m, keep, std::nullopt);  // up-closed: root is never above others
}

RawModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedModel("model must be a JSON object");
  RawModel raw;
  if (!j.contains("worlds") || !j["worlds"].is_array())
    throw MalformedModel("\"worlds\" must be an array of names");
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) throw MalformedModel("world names must be strings");
    raw.worlds.push_back(w.get<std::string>());
  }
  if (j.contains("pseudo")) {
    if (!j["pseudo"].is_boolean()) throw MalformedModel("\"pseudo\" must be a boolean");
    raw.pseudo = j["pseudo"].get<bool>();
  }
  if (j.contains("root")) {
    if (!j["root"].is_string()) throw MalformedModel("\"root\" must be a world name");
    raw.root = j["root"].get<std::string>();
  }
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw MalformedModel("\"order\" must be an array of pairs");
    for (const auto& pr : j["order"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw MalformedModel("each order entry must be a pair of world names");
      raw.order.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw MalformedModel("\"valuation\" must be an object");
    for (const auto& [world, vars] : j["valuation"].items()) {
      if (!vars.is_array()) throw MalformedModel("valuation entries must be arrays of variables");
      std::vector<int> idx;
      for (const auto& v : vars) {
        if (!v.is_string()) throw MalformedModel("variables must be strings like \"p\" or \"p2\"");
        try {
          FormulaPtr f = parse_formula(v.get<std::string>());
          if (f->conn() != Conn::Var) throw MalformedModel("");
          idx.push_back(f->var());
        } catch (const ParseError&) {
          throw MalformedModel("bad variable name \"" + v.get<std::string>() + "\"");
        } catch (const MalformedModel&) {
          throw MalformedModel("bad variable name \"" + v.get<std::string>() + "\"");
        }
      }
      raw.valuation[world] = std::move(idx);
    }
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "worlds" && key != "root" && key != "order" && key != "valuation" &&
        key != "pseudo")
      throw MalformedModel("unknown key \"" + key + "\"");
  }
  return raw;
}

nlohmann::json model_to_json(const RModel& m) {
  nlohmann::json j;
  j["worlds"] = m.names;
  if (!m.pseudo) j["root"] = m.names[*m.root];
  nlohmann::json order = nlohmann::json::array();
  for (int u = 0; u < m.size(); ++u)
    for (int v = 0; v < m.size(); ++v)
      if (u != v && m.leq(u, v)) order.push_back({m.names[u], m.names[v]});
  j["order"] = std::move(order);
  nlohmann::json valuation = nlohmann::json::object();
  for (int w = 0; w < m.size(); ++w) {
    if (m.val[w] == 0) continue;
    nlohmann::json vars = nlohmann::json::array();
    for (int v = 1; v <= kMaxWorlds; ++v)
      if ((m.val[w] >> (v - 1)) & 1u) vars.push_back(v == 1 ? "p" : "p" + std::to_string(v));
    valuation[m.names[w]] = std::move(vars);
  }
  j["valuation"] = std::move(valuation);
  j["pseudo"] = m.pseudo;
  return j;
}

}  // namespace icln
