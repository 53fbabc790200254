#include "icln/contexts.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace icln {

std::string_view context_name(ContextId id) {
  static constexpr std::string_view names[] = {"c0", "c1", "m00", "m01", "m11",
                                               "V",  "i0", "i1",  "i01"};
  return names[static_cast<int>(id)];
}

std::string_view context_display(ContextId id) {
  static constexpr std::string_view names[] = {"○",      "●",    "○/○",  "●/○", "●/●",
                                               "V", "i(○)", "i(●)", "i(○,●)"};
  return names[static_cast<int>(id)];
}

namespace {

RModel rooted(std::vector<std::string> names, std::vector<std::uint32_t> up,
              std::vector<std::uint32_t> val) {
  RModel m;
  m.names = std::move(names);
  m.up = std::move(up);
  m.val = std::move(val);
  m.root = 0;
  return m;
}

std::array<EvalContext, kContextCount> build_suite() {
  RModel c0 = rooted({"r"}, {0b1}, {0});
  RModel c1 = rooted({"r"}, {0b1}, {1});
  RModel m00 = rooted({"r", "s"}, {0b11, 0b10}, {0, 0});
  RModel m01 = rooted({"r", "s"}, {0b11, 0b10}, {0, 1});
  RModel m11 = rooted({"r", "s"}, {0b11, 0b10}, {1, 1});
  RModel v = rooted({"r", "s", "t"}, {0b111, 0b010, 0b100}, {0, 0, 1});
  // The pseudo contexts are literally the imaginary parts of the two-valued
  // chains and of V; a single real world leaves no imaginary part, so these
  // are taken from models whose top carries the wanted value.
  RModel i0 = *imaginary_part(m00);
  RModel i1 = *imaginary_part(m11);
  RModel i01 = *imaginary_part(v);
  return {{{ContextId::c0, std::move(c0)},
           {ContextId::c1, std::move(c1)},
           {ContextId::m00, std::move(m00)},
           {ContextId::m01, std::move(m01)},
           {ContextId::m11, std::move(m11)},
           {ContextId::V, std::move(v)},
           {ContextId::i0, std::move(i0)},
           {ContextId::i1, std::move(i1)},
           {ContextId::i01, std::move(i01)}}};
}

// ----- exhaustive enumeration of rooted models, up to isomorphism -----

// Strict partial orders on k labeled points, as up-masks of the strictly
// greater points. Each unordered pair is unrelated, forward or backward;
// candidates failing transitivity or antisymmetry are discarded.
std::vector<std::vector<std::uint32_t>> strict_orders(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> above(k, 0);
  auto transitive = [&]() {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if ((above[a] >> b) & 1u)
          if ((above[b] & ~above[a]) != 0) return false;
    return true;
  };
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::fill(above.begin(), above.end(), 0);
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      switch (c % 3) {
        case 1: above[i] |= 1u << j; break;
        case 2: above[j] |= 1u << i; break;
        default: break;
      }
      c /= 3;
    }
    if (transitive()) out.push_back(above);
  }
  return out;
}

int longest_chain(const std::vector<std::uint32_t>& up, int n) {
  std::vector<int> h(n, 0);
  auto rec = [&](auto&& self, int w) -> int {
    if (h[w]) return h[w];
    int best = 1;
    for (int v = 0; v < n; ++v)
      if (v != w && ((up[w] >> v) & 1u)) best = std::max(best, 1 + self(self, v));
    return h[w] = best;
  };
  int best = 0;
  for (int w = 0; w < n; ++w) best = std::max(best, rec(rec, w));
  return best;
}

using Encoding = std::vector<std::uint64_t>;

Encoding encode(const std::vector<std::uint32_t>& up, const std::vector<std::uint32_t>& val,
                const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  Encoding e(n);
  for (int i = 0; i < n; ++i) {
    std::uint32_t row = 0;
    for (int j = 0; j < n; ++j)
      if ((up[sigma[i]] >> sigma[j]) & 1u) row |= 1u << j;
    e[i] = (std::uint64_t(row) << 32) | val[sigma[i]];
  }
  return e;
}

// Minimum encoding over all relabelings fixing the root at index 0.
Encoding canonical(const std::vector<std::uint32_t>& up, const std::vector<std::uint32_t>& val) {
  int n = static_cast<int>(up.size());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Encoding best = encode(up, val, sigma);
  while (std::next_permutation(sigma.begin() + 1, sigma.end())) {
    Encoding e = encode(up, val, sigma);
    if (e < best) best = e;
  }
  return best;
}

RModel model_of(const Encoding& e) {
  int n = static_cast<int>(e.size());
  RModel m;
  m.up.resize(n);
  m.val.resize(n);
  for (int i = 0; i < n; ++i) {
    m.up[i] = static_cast<std::uint32_t>(e[i] >> 32);
    m.val[i] = static_cast<std::uint32_t>(e[i] & 0xffffffffu);
    m.names.push_back("w" + std::to_string(i));
  }
  m.root = 0;
  return m;
}

}  // namespace

const std::array<EvalContext, kContextCount>& canonical_suite() {
  static const std::array<EvalContext, kContextCount> suite = build_suite();
  return suite;
}

std::vector<RModel> enumerate_rmodels(const SearchBound& bound, int num_vars) {
  if (bound.max_worlds < 1 || bound.max_worlds > 6)
    throw std::invalid_argument("max_worlds must be in 1..6");
  if (bound.max_height < 1) throw std::invalid_argument("max_height must be positive");
  if (num_vars < 1 || num_vars > 4) throw std::invalid_argument("num_vars must be in 1..4");

  std::vector<RModel> out;
  for (int n = 1; n <= bound.max_worlds; ++n) {
    int k = n - 1;  // worlds above the root
    std::set<Encoding> seen;
    for (const auto& above : strict_orders(k)) {
      // World 0 is the root, below everything; the rest sit at indices 1..k.
      std::vector<std::uint32_t> up(n, 0);
      up[0] = (1u << n) - 1u;
      for (int i = 0; i < k; ++i) up[i + 1] = (1u << (i + 1)) | (above[i] << 1);
      if (longest_chain(up, n) > bound.max_height) continue;

      std::uint32_t var_mask = (1u << num_vars) - 1u;
      std::uint64_t assignments = std::uint64_t{1} << (n * num_vars);
      for (std::uint64_t a = 0; a < assignments; ++a) {
        std::vector<std::uint32_t> val(n);
        for (int i = 0; i < n; ++i) val[i] = (a >> (i * num_vars)) & var_mask;
        bool monotone = true;
        for (int u = 0; u < n && monotone; ++u)
          for (int v = 0; v < n && monotone; ++v)
            if (u != v && ((up[u] >> v) & 1u) && (val[u] & ~val[v]) != 0) monotone = false;
        if (monotone) seen.insert(canonical(up, val));
      }
    }
    for (const Encoding& e : seen) out.push_back(model_of(e));
  }
  return out;
}

std::optional<Countermodel> find_countermodel(const Formula& f, const SearchBound& bound) {
  int vars = std::max(1, max_variable(f));
  for (RModel& m : enumerate_rmodels(bound, vars))
    for (int w = 0; w < m.size(); ++w)
      if (!forces(m, w, f)) return Countermodel{std::move(m), w};
  return std::nullopt;
}

bool check_validity(const Formula& f, const SearchBound& bound) {
  return !find_countermodel(f, bound).has_value();
}

}  // namespace icln
