#include <map>

#include "doctest.h"
#include "icln/classify.hpp"

using namespace icln;

namespace {

// Signatures of the fifteen representatives, column order
// c0 c1 m00 m01 m11 V i0 i1 i01.
const std::map<std::string, std::string> kRepSignatures = {
    {"p", "-+--+--+-"},      {"~p", "+-+---+--"},     {"!p", "+-++-++++"},
    {"~~p", "-+-++--+-"},    {"~!p", "-+-------"},    {"!~p", "-+-++++++"},
    {"!!p", "-+--+-+++"},    {"~~!p", "+-+++++++"},   {"~!!p", "+--------"},
    {"!~~p", "+-+--++++"},   {"!!~p", "+-+---+++"},   {"~~!!p", "-++++++++"},
    {"!~~!p", "-+----+++"},  {"!!~~p", "-+-++-+++"},  {"!~~!!p", "+-----+++"},
};

const std::vector<std::string> kRepOrder = {
    "p",    "~p",   "!p",   "~~p",   "~!p",   "!~p",   "!!p",    "~~!p",
    "~!!p", "!~~p", "!!~p", "~~!!p", "!~~!p", "!!~~p", "!~~!!p",
};

}  // namespace

TEST_CASE("signatures of the representatives") {
  for (const auto& [word, expected] : kRepSignatures)
    CHECK(signature(parse_nword(word)).str() == expected);
  CHECK(signature(*parse_formula("0")).str() == "---------");
  CHECK(signature(*parse_formula("bot")).str() == "------+++");
  CHECK(signature(*parse_formula("1")).str() == "+++++++++");
}

TEST_CASE("entailment is signature inclusion") {
  CHECK(preceq(parse_nword("~!p"), parse_nword("p")));
  CHECK(preceq(parse_nword("p"), parse_nword("~~p")));
  CHECK(preceq(parse_nword("p"), parse_nword("!!p")));
  CHECK(!preceq(parse_nword("~~p"), parse_nword("p")));
  CHECK(!preceq(parse_nword("p"), parse_nword("~p")));
  CHECK(!preceq(parse_nword("~p"), parse_nword("p")));
  CHECK(equivalent(parse_nword("~~~p"), parse_nword("~p")));
  CHECK(!equivalent(parse_nword("~~p"), parse_nword("p")));
}

TEST_CASE("rewriting reaches the customary representatives") {
  auto norm = [](const char* w) { return render(normalize(parse_nword(w))); };
  CHECK(norm("~!~!p") == "~!p");    // absorption, even tail
  CHECK(norm("~!!~!p") == "~!!p");  // absorption, odd tail
  CHECK(norm("~!~p") == "~!!p");    // absorption, tail of length one
  CHECK(norm("!!!!!p") == "!p");    // triple collapse, twice
  CHECK(norm("~~~p") == "~p");
  CHECK(norm("!~!p") == "~~!p");
  CHECK(norm("!~!!p") == "~~!!p");
  CHECK(norm("!!~!p") == "!~~!p");
  CHECK(norm("!!~~!p") == "~~!p");
  CHECK(norm("!!~~!!p") == "~~!!p");
  CHECK(norm("!!!~!!~~!p") == "~~!p");  // a longer mixed word
  for (const std::string& rep : kRepOrder) CHECK(norm(rep.c_str()) == rep);
}

TEST_CASE("rewriting agrees with evaluation up to length eight") {
  for (const NWord& w : all_nwords(8)) {
    CAPTURE(render(w));
    NWord by_rules = normalize(w);
    CHECK(by_rules == normalize_semantic(w));
    CHECK(normalize(by_rules) == by_rules);
    CHECK(equivalent(w, by_rules));
  }
}

TEST_CASE("census at length five matches the published classification") {
  std::vector<EquivClass> classes = census(5);
  REQUIRE(classes.size() == 15);
  const std::map<std::string, std::size_t> kMembers = {
      {"p", 1},    {"~p", 3},   {"!p", 3},   {"~~p", 2},    {"~!p", 6},
      {"!~p", 3},  {"!!p", 2},  {"~~!p", 14}, {"~!!p", 12},  {"!~~p", 3},
      {"!!~p", 3}, {"~~!!p", 4}, {"!~~!p", 2}, {"!!~~p", 1}, {"!~~!!p", 4},
  };
  const std::map<std::string, std::vector<std::string>> kIrreducibles = {
      {"p", {"p"}},
      {"~p", {"~p"}},
      {"!p", {"!p"}},
      {"~~p", {"~~p"}},
      {"~!p", {"~!p"}},
      {"!~p", {"!~p"}},
      {"!!p", {"!!p"}},
      {"~~!p", {"~~!p", "!~!p"}},
      {"~!!p", {"~!~p", "~!!p"}},
      {"!~~p", {"!~~p"}},
      {"!!~p", {"!!~p"}},
      {"~~!!p", {"~~!~p", "~~!!p", "!~!~p", "!~!!p"}},
      {"!~~!p", {"!~~!p", "!!~!p"}},
      {"!!~~p", {"!!~~p"}},
      {"!~~!!p", {"!~~!~p", "!~~!!p", "!!~!~p", "!!~!!p"}},
  };
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const EquivClass& c = classes[i];
    std::string rep = render(c.rep);
    CHECK(rep == kRepOrder[i]);
    CHECK(c.sig.str() == kRepSignatures.at(rep));
    CHECK(c.members.size() == kMembers.at(rep));
    std::vector<std::string> irr;
    for (const NWord& w : c.irreducibles) irr.push_back(render(w));
    CHECK(irr == kIrreducibles.at(rep));
    for (const NWord& w : c.members) CHECK(signature(w) == c.sig);
    total += c.members.size();
  }
  CHECK(total == 63);
}

TEST_CASE("census is stable when the length cap grows") {
  std::vector<EquivClass> c8 = census(8);
  REQUIRE(c8.size() == 15);
  std::size_t total = 0;
  for (std::size_t i = 0; i < c8.size(); ++i) {
    CHECK(render(c8[i].rep) == kRepOrder[i]);
    total += c8[i].members.size();
  }
  CHECK(total == 511);

  std::vector<EquivClass> c1 = census(1);
  REQUIRE(c1.size() == 3);
  CHECK(render(c1[0].rep) == "p");
  CHECK(render(c1[1].rep) == "~p");
  CHECK(render(c1[2].rep) == "!p");
}

TEST_CASE("irreducibility means no shorter equivalent") {
  CHECK(irreducible(parse_nword("p")));
  CHECK(irreducible(parse_nword("~~p")));
  CHECK(irreducible(parse_nword("!~!p")));   // tied with ~~!p at length three
  CHECK(!irreducible(parse_nword("~~~p")));
  CHECK(!irreducible(parse_nword("~!~!p")));
  CHECK(!irreducible(parse_nword("!!!!!p")));
}

TEST_CASE("the criterion survives cross-checking against bounded search") {
  CriterionReport r = verify_signature_criterion(3, {4, 3});
  CHECK(r.pairs == 225);
  CHECK(r.ok());
}
