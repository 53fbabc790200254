#include <random>

#include "doctest.h"
#include "icln/formula.hpp"

using namespace icln;

namespace {

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  int top = depth == 0 ? 4 : 11;
  switch (std::uniform_int_distribution<int>(0, top)(rng)) {
    case 0:
    case 1: return Formula::variable(std::uniform_int_distribution<int>(1, 3)(rng));
    case 2: return Formula::zero();
    case 3: return Formula::one();
    case 4: return Formula::bot();
    case 5: return Formula::neg_int(random_formula(rng, depth - 1));
    case 6: return Formula::neg_perp(random_formula(rng, depth - 1));
    case 7:
    case 8: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 9:
    case 10: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing follows the precedence table") {
  FormulaPtr p = Formula::variable(1), q = Formula::variable(2), r = Formula::variable(3);
  CHECK(equal(parse_formula("p -> p2 -> p3"), Formula::imp(p, Formula::imp(q, r))));
  CHECK(equal(parse_formula("p & p2 | p3"), Formula::disj(Formula::conj(p, q), r)));
  CHECK(equal(parse_formula("p | p2 & p3"), Formula::disj(p, Formula::conj(q, r))));
  CHECK(equal(parse_formula("p & p2 -> p3 | p"),
              Formula::imp(Formula::conj(p, q), Formula::disj(r, p))));
  CHECK(equal(parse_formula("~p & p2"), Formula::conj(Formula::neg_int(p), q)));
  CHECK(equal(parse_formula("~(p & p2)"), Formula::neg_int(Formula::conj(p, q))));
  CHECK(equal(parse_formula("~!p"), Formula::neg_int(Formula::neg_perp(p))));
  CHECK(equal(parse_formula("(p -> 0) -> 0"),
              Formula::imp(Formula::imp(p, Formula::zero()), Formula::zero())));
}

TEST_CASE("biconditional is sugar for both implications") {
  FormulaPtr p = Formula::variable(1), q = Formula::variable(2);
  FormulaPtr expect = Formula::conj(Formula::imp(p, q), Formula::imp(q, p));
  CHECK(equal(parse_formula("p <-> p2"), expect));
  // Lowest precedence, right-associative.
  CHECK(equal(parse_formula("p -> p2 <-> p2 -> p"),
              Formula::conj(Formula::imp(Formula::imp(p, q), Formula::imp(q, p)),
                            Formula::imp(Formula::imp(q, p), Formula::imp(p, q)))));
}

TEST_CASE("unicode aliases map onto the ascii connectives") {
  CHECK(equal(parse_formula("\xc2\xacp"), parse_formula("!p")));
  CHECK(equal(parse_formula("\xe2\x8a\xa5"), Formula::bot()));
  CHECK(equal(parse_formula("~\xc2\xac\xc2\xacp -> \xe2\x8a\xa5"),
              parse_formula("~!!p -> bot")));
}

TEST_CASE("parse errors carry the byte offset") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p)"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p31"), ParseError);
  try {
    parse_formula("p -> (p2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 8);
  }
  try {
    parse_formula("p $ p2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("variables normalize their spelling") {
  CHECK(equal(parse_formula("p1"), Formula::variable(1)));
  CHECK(render(*parse_formula("p1")) == "p");
  CHECK(render(*parse_formula("p2")) == "p2");
  CHECK(render(*parse_formula("p30")) == "p30");
  CHECK(max_variable(*parse_formula("p & p2 -> p3")) == 3);
  CHECK(max_variable(*Formula::bot()) == 0);
}

TEST_CASE("negation words parse strictly") {
  CHECK(parse_nword("p").negs.empty());
  CHECK(parse_nword("~!p").negs == std::vector<NegKind>{NegKind::Int, NegKind::Perp});
  CHECK(parse_nword(" ~ ! p ").negs == std::vector<NegKind>{NegKind::Int, NegKind::Perp});
  CHECK(parse_nword("\xc2\xac~p").negs == std::vector<NegKind>{NegKind::Perp, NegKind::Int});
  CHECK_THROWS_AS(parse_nword("~p q"), ParseError);
  CHECK_THROWS_AS(parse_nword("~(p)"), ParseError);
  CHECK_THROWS_AS(parse_nword("~p2"), ParseError);
  CHECK_THROWS_AS(parse_nword("q"), ParseError);
  CHECK_THROWS_AS(parse_nword("~~"), ParseError);
}

TEST_CASE("word enumeration is shortlex") {
  std::vector<NWord> words = all_nwords(3);
  CHECK(words.size() == 15);
  CHECK(render(words[0]) == "p");
  CHECK(render(words[1]) == "~p");
  CHECK(render(words[2]) == "!p");
  CHECK(render(words[3]) == "~~p");
  CHECK(render(words[4]) == "~!p");
  CHECK(render(words[5]) == "!~p");
  CHECK(render(words[6]) == "!!p");
  CHECK(render(words[14]) == "!!!p");
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1], words[i]));
  CHECK(words[0].even());
  CHECK(!words[1].even());
}

TEST_CASE("words become formulas under either reading") {
  NWord w = parse_nword("~!p");
  FormulaPtr p = Formula::variable(1);
  CHECK(equal(to_formula(w), Formula::neg_int(Formula::neg_perp(p))));
  CHECK(equal(to_formula(w, NegationReading::Defined),
              Formula::imp(Formula::imp(p, Formula::bot()), Formula::zero())));
  CHECK(equal(with_defined_negations(parse_formula("~(p & !p2)")),
              Formula::imp(Formula::conj(p, Formula::imp(Formula::variable(2), Formula::bot())),
                           Formula::zero())));
}

TEST_CASE("rendering inserts only necessary parentheses") {
  FormulaPtr p = Formula::variable(1), q = Formula::variable(2), r = Formula::variable(3);
  CHECK(render(*Formula::disj(p, Formula::neg_perp(p))) == "p | !p");
  CHECK(render(*Formula::imp(Formula::imp(p, Formula::zero()), Formula::zero())) ==
        "(p -> 0) -> 0");
  CHECK(render(*Formula::imp(p, Formula::imp(q, r))) == "p -> p2 -> p3");
  CHECK(render(*Formula::conj(p, Formula::conj(q, r))) == "p & (p2 & p3)");
  CHECK(render(*Formula::conj(Formula::conj(p, q), r)) == "p & p2 & p3");
  CHECK(render(*Formula::neg_int(Formula::imp(p, Formula::zero()))) == "~(p -> 0)");
  CHECK(render(*Formula::disj(Formula::conj(p, q), r)) == "p & p2 | p3");
  CHECK(render(parse_nword("~!!p")) == "~!!p");
}

TEST_CASE("parse of render is the identity on trees") {
  std::mt19937 rng(271828);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, 6);
    CAPTURE(render(*f));
    CHECK(equal(parse_formula(render(*f)), f));
  }
  for (const NWord& w : all_nwords(6)) CHECK(parse_nword(render(w)) == w);
}
