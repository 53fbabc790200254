#include "icln/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace icln {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); r_.passed = true; }

  template <typename F>
  void check(bool ok, F&& describe) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = describe();
    }
  }

  void add_checks(long long n) { r_.checks += n; }

  SuiteResult finish() { return std::move(r_); }

 private:
  SuiteResult r_;
};

struct Ctx {
  VerifyOptions opt;
  std::vector<RModel> models;       // rooted, within opt.bound, one variable
  std::vector<RModel> models2;      // rooted, two variables, for sampled checks
  std::vector<NWord> words;         // length <= opt.max_len
  std::vector<const RModel*> all;   // models + the nine canonical contexts
  std::vector<const RModel*> rooted;  // models + the six rooted contexts
};

FormulaPtr random_formula(std::mt19937& rng, int depth, int num_vars) {
  int top = depth == 0 ? 4 : 11;
  switch (std::uniform_int_distribution<int>(0, top)(rng)) {
    case 0:
    case 1:
      return Formula::variable(std::uniform_int_distribution<int>(1, num_vars)(rng));
    case 2: return Formula::zero();
    case 3: return Formula::one();
    case 4: return Formula::bot();
    case 5: return Formula::neg_int(random_formula(rng, depth - 1, num_vars));
    case 6: return Formula::neg_perp(random_formula(rng, depth - 1, num_vars));
    case 7:
    case 8:
      return Formula::conj(random_formula(rng, depth - 1, num_vars),
                           random_formula(rng, depth - 1, num_vars));
    case 9:
    case 10:
      return Formula::disj(random_formula(rng, depth - 1, num_vars),
                           random_formula(rng, depth - 1, num_vars));
    default:
      return Formula::imp(random_formula(rng, depth - 1, num_vars),
                          random_formula(rng, depth - 1, num_vars));
  }
}

std::string where(const RModel& m, int w) {
  return "world " + m.names[w] + " of " + model_to_json(m).dump();
}

// ----- individual suites ---------------------------------------------

// ~A and A -> 0, !A and A -> bot force alike, everywhere.
SuiteResult suite_negation_definitions(const Ctx& c) {
  Suite s("negation-definitions");
  for (const RModel* m : c.all)
    for (const NWord& w : c.words) {
      FormulaPtr prim = to_formula(w, NegationReading::Primitive);
      FormulaPtr defd = to_formula(w, NegationReading::Defined);
      for (int u = 0; u < m->size(); ++u)
        s.check(forces(*m, u, *prim) == forces(*m, u, *defd),
                [&] { return render(w) + " readings disagree at " + where(*m, u); });
    }
  std::mt19937 rng(c.opt.seed);
  for (int i = 0; i < c.opt.samples; ++i) {
    const RModel& m =
        c.models2[std::uniform_int_distribution<std::size_t>(0, c.models2.size() - 1)(rng)];
    FormulaPtr f = random_formula(rng, 5, 2);
    FormulaPtr g = with_defined_negations(f);
    for (int u = 0; u < m.size(); ++u)
      s.check(forces(m, u, *f) == forces(m, u, *g),
              [&] { return render(*f) + " readings disagree at " + where(m, u); });
  }
  return s.finish();
}

// Anything forced at u stays forced upward; in rooted models, validity is
// forcing at the root.
SuiteResult suite_monotonicity(const Ctx& c) {
  Suite s("forcing-monotonicity");
  auto check_formula = [&](const RModel& m, const Formula& f) {
    for (int u = 0; u < m.size(); ++u) {
      bool fu = forces(m, u, f);
      if (!fu) continue;
      for (int v = 0; v < m.size(); ++v)
        s.check(!m.leq(u, v) || forces(m, v, f),
                [&] { return render(f) + " lost above " + where(m, u); });
    }
    if (!m.pseudo)
      s.check(valid_in(m, f) == forces(m, *m.root, f),
              [&] { return render(f) + ": root verdict differs from validity in " +
                           model_to_json(m).dump(); });
  };
  for (const RModel* m : c.all)
    for (const NWord& w : c.words) check_formula(*m, *to_formula(w));
  std::mt19937 rng(c.opt.seed + 1);
  for (int i = 0; i < c.opt.samples; ++i) {
    const RModel& m =
        c.models2[std::uniform_int_distribution<std::size_t>(0, c.models2.size() - 1)(rng)];
    check_formula(m, *random_formula(rng, 5, 2));
  }
  return s.finish();
}

// In a rooted model the only real world is the root, which pins down !A:
// at the root it negates A classically, it fails only at a root forcing A,
// and imaginary worlds force it no matter what A is.
SuiteResult suite_perp_at_root(const Ctx& c) {
  Suite s("perp-negation-at-root");
  auto check_formula = [&](const RModel& m, const FormulaPtr& a) {
    FormulaPtr na = Formula::neg_perp(a);
    int root = *m.root;
    bool fa = forces(m, root, *a);
    s.check(forces(m, root, *na) == !fa,
            [&] { return "!(" + render(*a) + ") at the root of " + model_to_json(m).dump(); });
    for (int u = 0; u < m.size(); ++u) {
      s.check(!forces(m, u, *na) == (u == root && fa),
              [&] { return "!(" + render(*a) + ") fails unexpectedly at " + where(m, u); });
      if (m.imaginary(u))
        s.check(forces(m, u, *na),
                [&] { return "!(" + render(*a) + ") unforced at imaginary " + where(m, u); });
    }
  };
  for (const RModel* m : c.rooted)
    for (const NWord& w : c.words) check_formula(*m, to_formula(w));
  std::mt19937 rng(c.opt.seed + 2);
  for (int i = 0; i < c.opt.samples; ++i) {
    const RModel& m =
        c.models2[std::uniform_int_distribution<std::size_t>(0, c.models2.size() - 1)(rng)];
    check_formula(m, random_formula(rng, 5, 2));
  }
  return s.finish();
}

// A word's validity in the one-world contexts is decided by its parity
// alone, so words of opposite parity never entail each other.
SuiteResult suite_parity(const Ctx& c) {
  Suite s("parity-of-validity");
  for (const NWord& w : all_nwords(c.opt.parity_len)) {
    Signature sig = signature(w);
    s.check(sig.test(static_cast<int>(ContextId::c0)) == !w.even(),
            [&] { return render(w) + " at ○"; });
    s.check(sig.test(static_cast<int>(ContextId::c1)) == w.even(),
            [&] { return render(w) + " at ●"; });
  }
  for (const NWord& a : c.words)
    for (const NWord& b : c.words)
      if (a.even() != b.even())
        s.check(!preceq(a, b),
                [&] { return render(a) + " entails " + render(b) + " across parity"; });
  return s.finish();
}

// p | !p holds everywhere (the only real world either forces p or
// !p-negates it; imaginary worlds force !p outright), while p | ~p already
// fails in the chain with p true only on top.
SuiteResult suite_excluded_middle(const Ctx& c) {
  Suite s("excluded-middle");
  FormulaPtr strong = parse_formula("p | !p");
  s.check(check_validity(*strong, c.opt.bound), [&] { return "countermodel for p | !p"; });
  for (const EvalContext& ctx : canonical_suite())
    s.check(valid_in(ctx.model, *strong),
            [&] { return std::string("p | !p fails in ") + std::string(context_name(ctx.id)); });
  auto cm = find_countermodel(*parse_formula("p | ~p"), c.opt.bound);
  s.check(cm.has_value(), [&] { return std::string("p | ~p has no countermodel"); });
  if (cm) {
    const RModel& m = cm->model;
    s.check(m.size() == 2 && m.up == std::vector<std::uint32_t>{3, 2} &&
                m.val == std::vector<std::uint32_t>{0, 1},
            [&] { return "smallest countermodel for p | ~p is " + model_to_json(m).dump(); });
  }
  return s.finish();
}

// !!p -> p is refuted at the root of the plain two-chain: the top world is
// imaginary, so it forces !!p while refuting p.
SuiteResult suite_double_perp(const Ctx& c) {
  Suite s("double-perp-countermodel");
  auto cm = find_countermodel(*parse_formula("!!p -> p"), c.opt.bound);
  s.check(cm.has_value(), [&] { return std::string("no countermodel for !!p -> p"); });
  if (cm) {
    const RModel& m = cm->model;
    s.check(m.size() == 2 && m.up == std::vector<std::uint32_t>{3, 2} &&
                m.val == std::vector<std::uint32_t>{0, 0},
            [&] { return "smallest countermodel is " + model_to_json(m).dump(); });
    s.check(cm->world == 0 && cm->world_name() == "w0",
            [&] { return "refuted at " + cm->world_name() + ", not at the root"; });
  }
  return s.finish();
}

SuiteResult suite_signature_criterion(const Ctx& c) {
  Suite s("signature-criterion");
  CriterionReport report = verify_signature_criterion(c.opt.max_len, c.opt.bound);
  s.add_checks(report.pairs - 1);
  s.check(report.ok(), [&] {
    const auto& d = report.disagreements.front();
    return render(d.a) + " vs " + render(d.b) + ": signature says " +
           (d.by_signature ? "yes" : "no") + ", search says " + (d.by_search ? "yes" : "no");
  });
  return s.finish();
}

SuiteResult suite_normalizer_agreement(const Ctx& c) {
  Suite s("normalizer-agreement");
  for (const NWord& w : all_nwords(c.opt.agreement_len)) {
    NWord by_rules = normalize(w);
    NWord by_models = normalize_semantic(w);
    s.check(by_rules == by_models, [&] {
      return render(w) + ": rules give " + render(by_rules) + ", evaluation gives " +
             render(by_models);
    });
    s.check(normalize(by_rules) == by_rules,
            [&] { return "normalize not idempotent on " + render(w); });
  }
  return s.finish();
}

SuiteResult suite_census_stability(const Ctx&) {
  Suite s("census-stability");
  std::vector<EquivClass> c5 = census(5);
  std::vector<EquivClass> c8 = census(8);
  s.check(c5.size() == 15, [&] { return "census(5): " + std::to_string(c5.size()) + " classes"; });
  s.check(c8.size() == 15, [&] { return "census(8): " + std::to_string(c8.size()) + " classes"; });
  std::size_t n5 = 0, n8 = 0;
  for (std::size_t i = 0; i < std::min(c5.size(), c8.size()); ++i) {
    s.check(c5[i].rep == c8[i].rep,
            [&] { return "representative drifted: " + render(c5[i].rep) + " vs " +
                         render(c8[i].rep); });
    s.check(c5[i].sig == c8[i].sig, [&] { return "signature drifted at " + render(c5[i].rep); });
    s.check(c5[i].irreducibles == c8[i].irreducibles,
            [&] { return "irreducibles drifted at " + render(c5[i].rep); });
    n5 += c5[i].members.size();
    n8 += c8[i].members.size();
    s.check(irreducible(c5[i].rep),
            [&] { return render(c5[i].rep) + " is not irreducible"; });
    for (const NWord& m : c5[i].members)
      s.check(equivalent(m, c5[i].rep),
              [&] { return render(m) + " not equivalent to its representative"; });
  }
  s.check(n5 == 63, [&] { return "census(5) covers " + std::to_string(n5) + " words"; });
  s.check(n8 == 511, [&] { return "census(8) covers " + std::to_string(n8) + " words"; });
  std::vector<EquivClass> c1 = census(1);
  s.check(c1.size() == 3 && render(c1[0].rep) == "p" && render(c1[1].rep) == "~p" &&
              render(c1[2].rep) == "!p",
          [&] { return "census(1): " + std::to_string(c1.size()) + " classes"; });
  return s.finish();
}

// ~!p and ~!!p are the least even and odd words, ~~!!p and ~~!p the
// greatest; 0 is below everything, 1 above everything, bot strictly
// between 0 and the two length-four words it is covered by.
SuiteResult suite_extremes(const Ctx& c) {
  Suite s("extreme-elements");
  Signature e_min = signature(parse_nword("~!p")), e_max = signature(parse_nword("~~!!p"));
  Signature o_min = signature(parse_nword("~!!p")), o_max = signature(parse_nword("~~!p"));
  Signature zero = signature(*Formula::zero()), one = signature(*Formula::one());
  Signature bot = signature(*Formula::bot());
  for (const NWord& w : all_nwords(c.opt.parity_len)) {
    Signature sig = signature(w);
    Signature lo = w.even() ? e_min : o_min;
    Signature hi = w.even() ? e_max : o_max;
    s.check(lo.subset_of(sig), [&] { return "minimum above " + render(w); });
    s.check(sig.subset_of(hi), [&] { return "maximum below " + render(w); });
    s.check(zero.subset_of(sig) && sig.subset_of(one),
            [&] { return "0 or 1 misplaced against " + render(w); });
  }
  s.check(zero.subset_of(bot) && zero != bot, [&] { return std::string("0 not under bot"); });
  s.check(bot.subset_of(signature(parse_nword("!~~!p"))) &&
              bot.subset_of(signature(parse_nword("!~~!!p"))),
          [&] { return std::string("bot not under !~~!p and !~~!!p"); });
  return s.finish();
}

constexpr std::array<std::pair<const char*, const char*>, 9> kEvenChain = {{
    {"~!p", "p"}, {"p", "~~p"}, {"p", "!!p"}, {"~!p", "!~~!p"}, {"!~~!p", "!!p"},
    {"~~p", "!!~~p"}, {"!!p", "!!~~p"}, {"!!~~p", "!~p"}, {"!~p", "~~!!p"},
}};

constexpr std::array<std::pair<const char*, const char*>, 7> kOddChain = {{
    {"~!!p", "~p"}, {"~!!p", "!~~!!p"}, {"~p", "!!~p"}, {"!~~!!p", "!!~p"},
    {"!!~p", "!~~p"}, {"!~~p", "!p"}, {"!p", "~~!p"},
}};

constexpr std::array<std::pair<const char*, const char*>, 7> kConstantCovers = {{
    {"0", "~!p"}, {"0", "bot"}, {"0", "~!!p"}, {"bot", "!~~!p"}, {"bot", "!~~!!p"},
    {"~~!!p", "1"}, {"~~!p", "1"},
}};

// The two strict chains of entailments between representatives, each step
// valid everywhere, no step reversible; the canonical contexts witness
// every failure of a converse. The stock example !~~p -> !!~p is refuted
// exactly in V and nothing smaller.
SuiteResult suite_implication_theorems(const Ctx& c) {
  Suite s("implication-theorems");
  auto run = [&](const char* from, const char* to) {
    FormulaPtr a = to_formula(parse_nword(from));
    FormulaPtr b = to_formula(parse_nword(to));
    FormulaPtr fwd = Formula::imp(a, b);
    FormulaPtr bwd = Formula::imp(b, a);
    s.check(check_validity(*fwd, c.opt.bound),
            [&] { return std::string(from) + " -> " + to + " has a countermodel"; });
    bool refuted = false;
    for (const EvalContext& ctx : canonical_suite()) {
      s.check(valid_in(ctx.model, *fwd),
              [&] { return std::string(from) + " -> " + to + " fails in " +
                           std::string(context_name(ctx.id)); });
      refuted = refuted || !valid_in(ctx.model, *bwd);
    }
    s.check(refuted,
            [&] { return std::string(to) + " -> " + from + " unrefuted in the suite"; });
  };
  for (auto [a, b] : kEvenChain) run(a, b);
  for (auto [a, b] : kOddChain) run(a, b);

  auto cm = find_countermodel(*parse_formula("!~~p -> !!~p"), c.opt.bound);
  s.check(cm.has_value(), [&] { return std::string("no countermodel for !~~p -> !!~p"); });
  if (cm) {
    const RModel& m = cm->model;
    s.check(m.size() == 3 && m.up == std::vector<std::uint32_t>{7, 2, 4} &&
                m.val == std::vector<std::uint32_t>{0, 0, 1},
            [&] { return "smallest countermodel is " + model_to_json(m).dump() +
                         ", expected the V context"; });
  }
  return s.finish();
}

SuiteResult suite_poset_figure(const Ctx&) {
  Suite s("poset-figure");
  std::vector<EquivClass> classes = census(5);
  auto labels = [](const Poset& p, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : edges) out.insert({p.nodes[a].label, p.nodes[b].label});
    return out;
  };

  Poset plain = build_poset(classes, false);
  s.check(plain.nodes.size() == 15,
          [&] { return std::to_string(plain.nodes.size()) + " nodes without constants"; });
  std::set<std::pair<std::string, std::string>> expected;
  for (auto [a, b] : kEvenChain) expected.insert({a, b});
  for (auto [a, b] : kOddChain) expected.insert({a, b});
  s.check(labels(plain, plain.covers) == expected,
          [&] { return std::string("cover edges differ from the two chains"); });
  for (auto [a, b] : plain.leq)
    if (a != b) {
      bool pa = plain.nodes[a].word->even(), pb = plain.nodes[b].word->even();
      s.check(pa == pb, [&] { return plain.nodes[a].label + " <= " + plain.nodes[b].label +
                                     " crosses parity"; });
    }

  Poset full = build_poset(classes, true);
  s.check(full.nodes.size() == 18,
          [&] { return std::to_string(full.nodes.size()) + " nodes with constants"; });
  for (auto [a, b] : kConstantCovers) expected.insert({a, b});
  s.check(labels(full, full.covers) == expected,
          [&] { return std::string("cover edges with constants differ from the figure"); });
  s.check(full.covers.size() == 23,
          [&] { return std::to_string(full.covers.size()) + " covers with constants"; });
  Signature zero = signature(*Formula::zero()), one = signature(*Formula::one());
  for (const PosetNode& n : full.nodes) {
    s.check(zero.subset_of(n.sig), [&] { return "0 not below " + n.label; });
    s.check(n.sig.subset_of(one), [&] { return "1 not above " + n.label; });
  }
  s.check(hasse_edges(full) == full.covers, [&] { return std::string("hasse_edges mismatch"); });
  return s.finish();
}

SuiteResult suite_errata(const Ctx&) {
  Suite s("published-table-errata");
  std::vector<Mismatch> errata = find_errata();
  s.check(errata.size() == 7,
          [&] { return std::to_string(errata.size()) + " mismatching cells, expected 7"; });
  std::set<std::pair<std::string, std::string>> found, expected;
  for (const Mismatch& m : errata) {
    found.insert({render(m.word), std::string(context_name(m.context))});
    s.check(m.justification != "unexplained disagreement",
            [&] { return "no justification for " + render(m.word) + " at " +
                         std::string(context_name(m.context)); });
    s.check(m.printed != m.computed, [] { return std::string("non-mismatch reported"); });
  }
  expected = {{"p", "i01"},      {"!!!!!p", "c0"}, {"!!!!!p", "c1"}, {"!!!!!p", "m00"},
              {"!!!!!p", "m01"}, {"!!!!!p", "m11"}, {"!!!!!p", "V"}};
  s.check(found == expected, [&] { return std::string("unexpected erratum cell set"); });
  // The corrected !!!!!p row must equal the !p row, and row p must now
  // differ from the printed cell only at i01.
  s.check(signature(parse_nword("!!!!!p")) == signature(parse_nword("!p")),
          [] { return std::string("!!!!!p does not evaluate like !p"); });
  return s.finish();
}

// Verdicts for word-to-word implications are already settled by models of
// at most three worlds and height two; growing the bound to (4, 3) never
// finds a first countermodel.
SuiteResult suite_height_sufficiency(const Ctx& c) {
  Suite s("height-sufficiency");
  std::vector<RModel> small = enumerate_rmodels({3, 2}, 1);
  auto masks = [&](const std::vector<RModel>& ms) {
    std::vector<std::vector<std::uint32_t>> f(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
      f[i].resize(c.words.size());
      for (std::size_t j = 0; j < c.words.size(); ++j) {
        FormulaPtr formula = to_formula(c.words[j]);
        std::uint32_t mask = 0;
        for (int u = 0; u < ms[i].size(); ++u)
          if (forces(ms[i], u, *formula)) mask |= 1u << u;
        f[i][j] = mask;
      }
    }
    return f;
  };
  auto fs = masks(small), fb = masks(c.models);
  auto refuted = [](const std::vector<std::vector<std::uint32_t>>& f, std::size_t a,
                    std::size_t b) {
    for (const auto& m : f)
      if ((m[a] & ~m[b]) != 0) return true;
    return false;
  };
  for (std::size_t a = 0; a < c.words.size(); ++a)
    for (std::size_t b = 0; b < c.words.size(); ++b)
      s.check(refuted(fs, a, b) == refuted(fb, a, b), [&] {
        return render(c.words[a]) + " -> " + render(c.words[b]) +
               ": verdict changes between bounds (3,2) and (4,3)";
      });
  return s.finish();
}

// Restricting to an up-set changes no forcing. In particular the three
// pseudo contexts, being imaginary parts, agree with their parents.
SuiteResult suite_locality(const Ctx& c) {
  Suite s("forcing-locality");
  int cap = std::min(c.opt.max_len, 4);
  std::vector<NWord> words = all_nwords(cap);
  auto agree = [&](const RModel& m, const RModel& sub, const Formula& f) {
    for (int v = 0; v < sub.size(); ++v) {
      int orig = m.index_of(sub.names[v]);
      s.check(forces(sub, v, f) == forces(m, orig, f),
              [&] { return render(f) + " changes in the submodel at " + sub.names[v]; });
    }
  };
  for (const RModel* m : c.all) {
    for (int w = 0; w < m->size(); ++w) {
      RModel sub = generated_submodel(*m, w);
      for (const NWord& word : words) agree(*m, sub, *to_formula(word));
    }
    if (std::optional<RModel> ip = imaginary_part(*m))
      for (const NWord& word : words) agree(*m, *ip, *to_formula(word));
  }
  std::mt19937 rng(c.opt.seed + 3);
  for (int i = 0; i < c.opt.samples; ++i) {
    const RModel& m =
        c.models2[std::uniform_int_distribution<std::size_t>(0, c.models2.size() - 1)(rng)];
    int w = std::uniform_int_distribution<int>(0, m.size() - 1)(rng);
    RModel sub = generated_submodel(m, w);
    agree(m, sub, *random_formula(rng, 5, 2));
  }
  return s.finish();
}

// Keeping only the models with at most two maximal worlds of distinct
// p-values recovers exactly the six rooted contexts.
SuiteResult suite_es_recovery(const Ctx&) {
  Suite s("es-recovery");
  std::vector<RModel> pool = enumerate_rmodels({3, 2}, 1);
  std::vector<const RModel*> filtered;
  for (const RModel& m : pool) {
    std::vector<int> maximal;
    for (int w = 0; w < m.size(); ++w)
      if (m.up[w] == (1u << w)) maximal.push_back(w);
    if (maximal.size() > 2) continue;
    if (maximal.size() == 2 && (m.val[maximal[0]] & 1u) == (m.val[maximal[1]] & 1u)) continue;
    filtered.push_back(&m);
  }
  s.check(filtered.size() == 6,
          [&] { return std::to_string(filtered.size()) + " models pass the filter"; });
  std::vector<NWord> words = all_nwords(5);
  auto same = [&](const RModel& a, const RModel& b) {
    for (const NWord& w : words)
      if (valid_in(a, w) != valid_in(b, w)) return false;
    return a.size() == b.size();
  };
  const auto& suite = canonical_suite();
  for (int i = 0; i < 6; ++i) {
    int matches = 0;
    for (const RModel* m : filtered)
      if (same(suite[i].model, *m)) ++matches;
    s.check(matches == 1, [&] {
      return std::string(context_name(suite[i].id)) + " matched " + std::to_string(matches) +
             " filtered models";
    });
  }
  return s.finish();
}

SuiteResult suite_enumeration(const Ctx& c) {
  Suite s("enumeration-determinism");
  auto equal_models = [](const std::vector<RModel>& a, const std::vector<RModel>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].names != b[i].names || a[i].up != b[i].up || a[i].val != b[i].val ||
          a[i].root != b[i].root)
        return false;
    return true;
  };
  std::vector<RModel> again = enumerate_rmodels(c.opt.bound, 1);
  s.check(equal_models(c.models, again), [] { return std::string("enumeration not stable"); });

  auto count = [](SearchBound b) { return enumerate_rmodels(b, 1).size(); };
  s.check(count({1, 1}) == 2, [&] { return std::to_string(count({1, 1})) + " one-world models"; });
  s.check(count({2, 2}) == 5, [&] { return std::to_string(count({2, 2})) + " models within (2,2)"; });
  s.check(count({3, 2}) == 9, [&] { return std::to_string(count({3, 2})) + " models within (3,2)"; });
  s.check(count({4, 3}) == 35, [&] { return std::to_string(count({4, 3})) + " models within (4,3)"; });

  for (const RModel* m : c.all) {
    nlohmann::json j = model_to_json(*m);
    ValidatedModel back = validate_model(model_from_json(j));
    s.check(back.ok(), [&] { return "round trip rejects " + j.dump(); });
    if (back.ok()) {
      const RModel& rm = *back.model;
      s.check(rm.names == m->names && rm.up == m->up && rm.val == m->val && rm.root == m->root &&
                  rm.pseudo == m->pseudo,
              [&] { return "round trip altered " + j.dump(); });
    }
  }
  return s.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
  Ctx c;
  c.opt = opt;
  c.models = enumerate_rmodels(opt.bound, 1);
  c.models2 = enumerate_rmodels({3, 3}, 2);
  c.words = all_nwords(opt.max_len);
  for (const RModel& m : c.models) {
    c.all.push_back(&m);
    c.rooted.push_back(&m);
  }
  for (const EvalContext& ctx : canonical_suite()) {
    c.all.push_back(&ctx.model);
    if (!ctx.model.pseudo) c.rooted.push_back(&ctx.model);
  }

  std::vector<SuiteResult> results;
  results.push_back(suite_negation_definitions(c));
  results.push_back(suite_monotonicity(c));
  results.push_back(suite_perp_at_root(c));
  results.push_back(suite_parity(c));
  results.push_back(suite_excluded_middle(c));
  results.push_back(suite_double_perp(c));
  results.push_back(suite_signature_criterion(c));
  results.push_back(suite_normalizer_agreement(c));
  results.push_back(suite_census_stability(c));
  results.push_back(suite_extremes(c));
  results.push_back(suite_implication_theorems(c));
  results.push_back(suite_poset_figure(c));
  results.push_back(suite_errata(c));
  results.push_back(suite_height_sufficiency(c));
  results.push_back(suite_locality(c));
  results.push_back(suite_es_recovery(c));
  results.push_back(suite_enumeration(c));
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

}  // namespace icln
