#include "doctest.h"
#include "icln/model.hpp"

using namespace icln;
using nlohmann::json;

namespace {

RModel from_text(const char* text) {
  ValidatedModel v = validate_model(model_from_json(json::parse(text)));
  REQUIRE(v.ok());
  return *v.model;
}

}  // namespace

TEST_CASE("a two-chain with p on top") {
  RModel m = from_text(R"({"worlds":["r","a"],"root":"r","order":[["r","a"]],
                           "valuation":{"a":["p"]},"pseudo":false})");
  CHECK(m.size() == 2);
  CHECK(m.names == std::vector<std::string>{"a", "r"});  // sorted
  CHECK(*m.root == m.index_of("r"));
  CHECK(m.leq(m.index_of("r"), m.index_of("a")));
  CHECK(!m.leq(m.index_of("a"), m.index_of("r")));
  CHECK(m.imaginary(m.index_of("a")));
  CHECK(!m.imaginary(m.index_of("r")));

  FormulaPtr p = parse_formula("p");
  CHECK(forces(m, "a", *p));
  CHECK(!forces(m, "r", *p));
  CHECK(forces(m, "a", *parse_formula("bot")));
  CHECK(!forces(m, "r", *parse_formula("bot")));
  CHECK(valid_in(m, *parse_formula("!p")));   // the real world refutes p
  CHECK(!valid_in(m, *parse_formula("~p")));  // p holds above
  CHECK(forces(m, "r", *parse_formula("~~p")));
  CHECK_THROWS_AS(forces(m, "b", *p), UnknownWorld);
}

TEST_CASE("order closure is automatic") {
  RModel m = from_text(R"({"worlds":["r","a","b"],"root":"r",
                           "order":[["r","a"],["a","b"]],"valuation":{},"pseudo":false})");
  CHECK(m.leq(m.index_of("r"), m.index_of("b")));
  json j = model_to_json(m);
  CHECK(j["order"].size() == 3);  // r<=a, r<=b, a<=b
  CHECK(j["root"] == "r");
  CHECK(j["pseudo"] == false);
}

TEST_CASE("verify policy reports missing closure instead of adding it") {
  RawModel raw = model_from_json(json::parse(
      R"({"worlds":["r","a","b"],"root":"r","order":[["r","a"],["a","b"]],"pseudo":false})"));
  ValidatedModel v = validate_model(raw, ClosurePolicy::Verify);
  REQUIRE(!v.ok());
  bool refl = false, trans = false;
  for (const ModelDefect& d : v.defects) {
    refl = refl || d.kind == DefectKind::NotReflexive;
    trans = trans || d.kind == DefectKind::NotTransitive;
  }
  CHECK(refl);
  CHECK(trans);
}

TEST_CASE("semantic defects are reported, not thrown") {
  SUBCASE("incomparable pair under a root candidate") {
    ValidatedModel v = validate_model(model_from_json(
        json::parse(R"({"worlds":["r","a"],"root":"r","order":[],"pseudo":false})")));
    REQUIRE(v.defects.size() == 1);
    CHECK(v.defects[0].kind == DefectKind::NoLeastRoot);
    CHECK(v.defects[0].witness_a == "a");
    CHECK(v.defects[0].message().find("NoLeastRoot") == 0);
  }
  SUBCASE("world below the root") {
    ValidatedModel v = validate_model(model_from_json(json::parse(
        R"({"worlds":["r","a"],"root":"r","order":[["a","r"]],"pseudo":false})")));
    REQUIRE(!v.ok());
    CHECK(v.defects[0].kind == DefectKind::NoLeastRoot);
  }
  SUBCASE("valuation loses a variable upward") {
    ValidatedModel v = validate_model(model_from_json(json::parse(
        R"({"worlds":["r","a"],"root":"r","order":[["r","a"]],
            "valuation":{"r":["p"]},"pseudo":false})")));
    REQUIRE(v.defects.size() == 1);
    CHECK(v.defects[0].kind == DefectKind::NonMonotoneValuation);
    CHECK(v.defects[0].witness_a == "r");
    CHECK(v.defects[0].witness_b == "a");
  }
}

TEST_CASE("empty world set is a defect") {
  ValidatedModel v =
      validate_model(model_from_json(json::parse(R"({"worlds":[],"pseudo":true})")));
  REQUIRE(v.defects.size() == 1);
  CHECK(v.defects[0].kind == DefectKind::EmptyWorldSet);
}

TEST_CASE("structural problems throw MalformedModel") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(validate_model(model_from_json(json::parse(text))), MalformedModel);
  };
  reject(R"({"worlds":["u"],"pseudo":true,"root":"u"})");          // pseudo with root
  reject(R"({"worlds":["u"],"pseudo":false})");                    // rooted without root
  reject(R"({"worlds":["u","u"],"root":"u"})");                    // duplicate name
  reject(R"({"worlds":["u"],"root":"v"})");                        // unknown root
  reject(R"({"worlds":["u"],"root":"u","order":[["u","v"]]})");    // unknown world in order
  reject(R"({"worlds":["u"],"root":"u","valuation":{"v":["p"]}})");
  reject(R"({"worlds":["u"],"root":"u","valuation":{"u":["q"]}})");
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"worlds":["u"],"root":"u","extra":1})")),
                  MalformedModel);
  CHECK_THROWS_AS(model_from_json(json::parse(R"([1,2,3])")), MalformedModel);
  {
    json big;
    big["pseudo"] = true;
    for (int i = 0; i < 31; ++i) big["worlds"].push_back("w" + std::to_string(i));
    CHECK_THROWS_AS(validate_model(model_from_json(big)), MalformedModel);
  }
}

TEST_CASE("clusters are legal preorders away from the root") {
  ValidatedModel v = validate_model(model_from_json(json::parse(
      R"({"worlds":["r","a","b"],"root":"r",
          "order":[["r","a"],["a","b"],["b","a"]],
          "valuation":{"a":["p"],"b":["p"]},"pseudo":false})")));
  REQUIRE(v.ok());
  const RModel& m = *v.model;
  CHECK(m.leq(m.index_of("a"), m.index_of("b")));
  CHECK(m.leq(m.index_of("b"), m.index_of("a")));
  CHECK(valid_in(m, *parse_formula("~~p")));

  // A cluster through the root defeats unique leastness.
  ValidatedModel bad = validate_model(model_from_json(json::parse(
      R"({"worlds":["r","a"],"root":"r","order":[["r","a"],["a","r"]],"pseudo":false})")));
  REQUIRE(!bad.ok());
  CHECK(bad.defects[0].kind == DefectKind::NoLeastRoot);

  // Unequal valuations inside a cluster break monotonicity.
  ValidatedModel worse = validate_model(model_from_json(json::parse(
      R"({"worlds":["r","a","b"],"root":"r",
          "order":[["r","a"],["a","b"],["b","a"]],
          "valuation":{"a":["p"]},"pseudo":false})")));
  CHECK(!worse.ok());
}

TEST_CASE("pseudosubmodels force bot and perp negations everywhere") {
  RModel m = from_text(R"({"worlds":["u","v"],"order":[],
                           "valuation":{"v":["p"]},"pseudo":true})");
  CHECK(m.pseudo);
  CHECK(!m.root.has_value());
  for (int w = 0; w < m.size(); ++w) {
    CHECK(m.imaginary(w));
    CHECK(forces(m, w, *parse_formula("bot")));
    CHECK(forces(m, w, *parse_formula("!p")));
    CHECK(forces(m, w, *parse_formula("!!p")));
  }
  CHECK(!valid_in(m, *parse_formula("p")));
  CHECK(!valid_in(m, *parse_formula("~p")));  // v forces p above u? no: u,v incomparable
  CHECK(forces(m, "u", *parse_formula("~p")));
  CHECK(!forces(m, "v", *parse_formula("~p")));

  json j = model_to_json(m);
  CHECK(!j.contains("root"));
  CHECK(j["pseudo"] == true);
}

TEST_CASE("generated submodels preserve forcing") {
  RModel m = from_text(R"({"worlds":["r","a","b"],"root":"r",
                           "order":[["r","a"],["a","b"]],
                           "valuation":{"b":["p"]},"pseudo":false})");
  SUBCASE("at the root: the whole model, still rooted") {
    RModel s = generated_submodel(m, *m.root);
    CHECK(!s.pseudo);
    CHECK(s.size() == 3);
  }
  SUBCASE("above the root: a pseudosubmodel") {
    int a = m.index_of("a");
    RModel s = generated_submodel(m, a);
    CHECK(s.pseudo);
    CHECK(s.size() == 2);
    CHECK(s.index_of("r") == -1);
    for (const char* text : {"p", "~p", "!p", "bot", "~~p", "!!p", "p -> bot"}) {
      FormulaPtr f = parse_formula(text);
      for (int v = 0; v < s.size(); ++v)
        CHECK(forces(s, v, *f) == forces(m, m.index_of(s.names[v]), *f));
    }
  }
  SUBCASE("imaginary part drops exactly the root") {
    std::optional<RModel> ip = imaginary_part(m);
    REQUIRE(ip.has_value());
    CHECK(ip->pseudo);
    CHECK(ip->size() == 2);
    CHECK(ip->index_of("r") == -1);
  }
  SUBCASE("a single real world has no imaginary part") {
    RModel single = from_text(R"({"worlds":["r"],"root":"r","pseudo":false})");
    CHECK(!imaginary_part(single).has_value());
  }
}
