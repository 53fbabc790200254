#include "icln/classify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace icln {

std::string Signature::str() const {
  std::string s(kContextCount, '-');
  for (int i = 0; i < kContextCount; ++i)
    if (test(i)) s[i] = '+';
  return s;
}

Signature signature(const Formula& f) {
  Signature s;
  const auto& suite = canonical_suite();
  for (int i = 0; i < kContextCount; ++i) s.set(i, valid_in(suite[i].model, f));
  return s;
}

Signature signature(const NWord& w) { return signature(*to_formula(w)); }

bool preceq(const NWord& a, const NWord& b) { return signature(a).subset_of(signature(b)); }

bool equivalent(const NWord& a, const NWord& b) { return signature(a) == signature(b); }

// ===== rewriting =====================================================
//
// The engine never consults a model; each rule is an equivalence of the
// logic. Shorthand: I = '~', P = '!', words written outermost first.

namespace {

using Word = std::vector<NegKind>;

constexpr NegKind I = NegKind::Int;
constexpr NegKind P = NegKind::Perp;

// aaa -> a: both ~~~A == ~A and !!!A == !A, so any run of three equal
// negations loses two. Rightmost occurrence, to keep runs near p short.
bool rule_triple(Word& w) {
  for (int i = static_cast<int>(w.size()) - 3; i >= 0; --i)
    if (w[i] == w[i + 1] && w[i] == w[i + 2]) {
      w.erase(w.begin() + i, w.begin() + i + 2);
      return true;
    }
  return false;
}

// ~! absorbs whatever it negates: ~!Np == ~!p for N of even length, and
// ~!Np == ~!!p for N odd. Applied when the tail has length >= 2 so the
// word strictly shrinks; the length-1 tails are rules C and identity.
bool rule_absorb(Word& w) {
  for (int i = static_cast<int>(w.size()) - 4; i >= 0; --i) {
    if (w[i] == I && w[i + 1] == P) {
      std::size_t tail = w.size() - (i + 2);
      w.resize(i + 2);
      if (tail % 2 == 1) w.push_back(P);
      return true;
    }
  }
  return false;
}

bool ends_with(const Word& w, std::initializer_list<NegKind> suffix) {
  if (w.size() < suffix.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

void replace_suffix(Word& w, std::size_t len, std::initializer_list<NegKind> repl) {
  w.resize(w.size() - len);
  w.insert(w.end(), repl.begin(), repl.end());
}

// The remaining equivalences act on the innermost negations only:
//   C   ~!~p == ~!!p       (absorption with a length-1 tail)
//   E1  !~!p == ~~!p
//   E2  !~!!p == ~~!!p
//   E5  !!~~!p == ~~!p
//   E6  !!~~!!p == ~~!!p   (from E2 under !: !!~!!p == !~~!!p backwards,
//                           then a triple of ! collapses)
bool rule_suffix(Word& w) {
  if (ends_with(w, {I, P, I})) { replace_suffix(w, 3, {I, P, P}); return true; }
  if (ends_with(w, {P, P, I, I, P, P})) { replace_suffix(w, 6, {I, I, P, P}); return true; }
  if (ends_with(w, {P, P, I, I, P})) { replace_suffix(w, 5, {I, I, P}); return true; }
  if (ends_with(w, {P, I, P, P})) { replace_suffix(w, 4, {I, I, P, P}); return true; }
  if (ends_with(w, {P, I, P})) { replace_suffix(w, 3, {I, I, P}); return true; }
  return false;
}

}  // namespace

NWord normalize(const NWord& input) {
  Word w = input.negs;
  // Termination: triples and absorption shorten the word; the suffix rules
  // keep the length but strictly reduce, in this order, (count of '~' in
  // the last three, count of '!' in positions before them), so no suffix
  // rule ever undoes another. The bound is generous.
  int budget = 10 * static_cast<int>(w.size()) + 64;
  for (;;) {
    if (rule_triple(w)) {}
    else if (rule_absorb(w)) {}
    else if (rule_suffix(w)) {}
    else break;
    if (--budget < 0) throw std::logic_error("normalize: rewrite did not terminate");
  }
  return NWord{std::move(w)};
}

// ===== classification ================================================

namespace {

int alternation_blocks(const NWord& w) {
  if (w.negs.empty()) return 0;
  int blocks = 1;
  for (std::size_t i = 1; i < w.negs.size(); ++i)
    if (w.negs[i] != w.negs[i - 1]) ++blocks;
  return blocks;
}

// Shortest member of a class; among equals, the one with the fewest
// alternation blocks, then the lexicographically least. Plain shortlex
// would pick e.g. ~!~p over the customary ~!!p.
bool rep_less(const NWord& a, const NWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  int ba = alternation_blocks(a), bb = alternation_blocks(b);
  if (ba != bb) return ba < bb;
  return a.negs < b.negs;
}

}  // namespace

std::vector<EquivClass> census(int max_len) {
  if (max_len < 0 || max_len > 16) throw std::invalid_argument("census max_len must be in 0..16");
  std::map<std::uint16_t, EquivClass> by_sig;
  for (NWord& w : all_nwords(max_len)) {
    Signature s = signature(w);
    EquivClass& c = by_sig[s.bits];
    c.sig = s;
    c.members.push_back(std::move(w));  // all_nwords is shortlex-ordered
  }
  std::vector<EquivClass> out;
  out.reserve(by_sig.size());
  for (auto& [bits, c] : by_sig) {
    c.rep = *std::min_element(c.members.begin(), c.members.end(), rep_less);
    for (const NWord& m : c.members)
      if (m.length() == c.rep.length()) c.irreducibles.push_back(m);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const EquivClass& a, const EquivClass& b) { return shortlex_less(a.rep, b.rep); });
  return out;
}

NWord normalize_semantic(const NWord& w) {
  static const std::map<std::uint16_t, NWord> reps = [] {
    std::map<std::uint16_t, NWord> m;
    for (EquivClass& c : census(5)) m.emplace(c.sig.bits, std::move(c.rep));
    return m;
  }();
  auto it = reps.find(signature(w).bits);
  if (it == reps.end())
    throw std::logic_error("signature of " + render(w) + " matches no equivalence class");
  return it->second;
}

bool irreducible(const NWord& w) { return w.length() == normalize_semantic(w).length(); }

CriterionReport verify_signature_criterion(int max_len, const SearchBound& bound) {
  std::vector<NWord> words = all_nwords(max_len);
  std::vector<RModel> models = enumerate_rmodels(bound, 1);

  // forced[m][w] = bitmask of worlds of model m forcing word w. Since every
  // world sees every other through some up-set, "a -> b valid in m" is just
  // forced-set inclusion.
  std::vector<std::vector<std::uint32_t>> forced(models.size());
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    forced[mi].resize(words.size());
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      FormulaPtr f = to_formula(words[wi]);
      std::uint32_t mask = 0;
      for (int u = 0; u < models[mi].size(); ++u)
        if (forces(models[mi], u, *f)) mask |= 1u << u;
      forced[mi][wi] = mask;
    }
  }

  std::vector<Signature> sigs(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) sigs[i] = signature(words[i]);

  CriterionReport report;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b) {
      ++report.pairs;
      bool by_sig = sigs[a].subset_of(sigs[b]);
      bool by_search = true;
      for (std::size_t mi = 0; mi < models.size() && by_search; ++mi)
        if ((forced[mi][a] & ~forced[mi][b]) != 0) by_search = false;
      if (by_sig != by_search)
        report.disagreements.push_back({words[a], words[b], by_sig, by_search});
    }
  return report;
}

}  // namespace icln
