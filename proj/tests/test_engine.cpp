#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dast/engine.hpp"
#include "dast/error.hpp"
#include "dast/json_io.hpp"
#include "dast/parser.hpp"
#include "helpers.hpp"

using namespace dast;

namespace {

Lattice derive_text(const SemanticLogic& logic, const std::string& text,
                    const DerivationLimits& limits = {}) {
  Lattice l = derive(logic.quantize(text), logic, limits);
  l.text = text;
  return l;
}

}  // namespace

TEST_CASE("a linear chain derives one node per round") {
  SemanticLogic logic = test::fixture_logic("chain3.sl");
  Lattice lattice = derive_text(logic, "Step0");
  REQUIRE(lattice.nodes.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(lattice.nodes[i].id == i + 1);
    CHECK(lattice.nodes[i].level == i + 1);
  }
  CHECK(lattice.nodes[0].is_axiom());
  CHECK(lattice.nodes[3].premises == std::vector<int>{3});
  CHECK(lattice.contains(parse_term("Step3")));
  CHECK(lattice.producer(parse_term("Step2"))->rule_id == 2);
  CHECK(lattice.producer(parse_term("Missing")) == nullptr);
}

TEST_CASE("each initial term becomes its own axiom node, duplicates collapse") {
  SemanticLogic logic = parse_logic("theory T:\n  intuitions: A, B\n");
  Lattice lattice = derive({parse_term("A"), parse_term("B"), parse_term("A")}, logic);
  REQUIRE(lattice.nodes.size() == 2);
  CHECK(lattice.nodes[0].terms == std::vector<Term>{parse_term("A")});
  CHECK(lattice.nodes[1].terms == std::vector<Term>{parse_term("B")});

  CHECK_THROWS_AS(derive({parse_term("F($X)")}, logic), Error);  // initial terms must be ground
}

TEST_CASE("level is one above the deepest matched premise") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: A, B, C\n"
      "  rule: A ==> B\n"
      "  rule: A And B ==> C\n");
  Lattice lattice = derive({parse_term("A")}, logic);
  REQUIRE(lattice.nodes.size() == 3);
  const LatticeNode* c = lattice.producer(parse_term("C"));
  REQUIRE(c != nullptr);
  CHECK(c->level == 3);  // premises at levels 1 and 2
  CHECK(c->premises == std::vector<int>{1, 2});
}

TEST_CASE("rules fire against the round-start snapshot in id order") {
  // Both rules match A in round one, so B and C appear in the same round and
  // the rule consuming B cannot fire before round two.
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: A, B, C, D\n"
      "  rule: A ==> B\n"
      "  rule: A ==> C\n"
      "  rule: B ==> D\n");
  Lattice lattice = derive({parse_term("A")}, logic);
  REQUIRE(lattice.nodes.size() == 4);
  CHECK(lattice.nodes[1].terms == std::vector<Term>{parse_term("B")});
  CHECK(lattice.nodes[2].terms == std::vector<Term>{parse_term("C")});
  CHECK(lattice.nodes[3].terms == std::vector<Term>{parse_term("D")});
  CHECK(lattice.producer(parse_term("D"))->level == 3);
}

TEST_CASE("a term is produced exactly once") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: A, B, C\n"
      "  rule: A ==> C\n"
      "  rule: B ==> C\n");
  Lattice lattice = derive({parse_term("A"), parse_term("B")}, logic);
  std::vector<Term> closure = lattice.terms();
  std::set<std::string> distinct;
  for (const Term& t : closure) distinct.insert(t.str());
  CHECK(closure.size() == distinct.size());
  CHECK(lattice.producer(parse_term("C"))->rule_id == 1);  // first derivation wins
}

TEST_CASE("a firing that adds nothing creates no node") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: A, B\n"
      "  rule: A ==> A And B\n");
  Lattice lattice = derive({parse_term("A")}, logic);
  REQUIRE(lattice.nodes.size() == 2);
  CHECK(lattice.nodes[1].terms == std::vector<Term>{parse_term("B")});  // A was known
}

TEST_CASE("premises attribute to the first memory occurrence of the match") {
  // B occurs first inside F(B); the rule matching the bare B must credit the
  // node that produced F(B), not a later standalone copy.
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: A, B, F, G\n"
      "  rule: A ==> F(B)\n"
      "  rule: B ==> G(B)\n");
  Lattice lattice = derive({parse_term("A")}, logic);
  const LatticeNode* g = lattice.producer(parse_term("G(B)"));
  REQUIRE(g != nullptr);
  const LatticeNode* f = lattice.producer(parse_term("F(B)"));
  CHECK(g->premises == std::vector<int>{f->id});
}

TEST_CASE("head variables only bind atoms") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: F, G, A, Hit\n"
      "  rule: $H(A) ==> Hit($H)\n");
  Lattice lattice = derive({parse_term("F(G(A))")}, logic);
  // G(A) matches $H(A) with H = G; F(G(A)) would need H = F but the argument
  // G(A) is no atom A, so only one firing happens.
  CHECK(lattice.contains(parse_term("Hit(G)")));
  CHECK(lattice.terms().size() == 2);
}

TEST_CASE("the iteration guard throws and keeps the partial lattice") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: F, A\n"
      "  rule: $X ==> F($X)\n");
  DerivationLimits limits;
  limits.max_iterations = 3;
  try {
    derive({parse_term("A")}, logic, limits);
    FAIL("expected the iteration guard to trip");
  } catch (const LimitError& e) {
    CHECK(e.kind() == ErrorKind::Limit);
    const Lattice& partial = e.partial();
    CHECK(partial.contains(parse_term("A")));
    CHECK(partial.contains(parse_term("F(F(F(A)))")));
  }
}

TEST_CASE("the depth guard throws before producing an oversized term") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: F, A\n"
      "  rule: $X ==> F($X)\n");
  DerivationLimits limits;
  limits.max_term_depth = 8;
  try {
    derive({parse_term("A")}, logic, limits);
    FAIL("expected the depth guard to trip");
  } catch (const LimitError& e) {
    for (const Term& t : e.partial().terms()) CHECK(t.depth() <= 8);
  }
  CHECK_THROWS_AS(derive({parse_term("A")}, logic, DerivationLimits{0, 8}), Error);
}

TEST_CASE("apply_rule instantiates every conclusion") {
  SemanticLogic logic = parse_logic(
      "theory T:\n"
      "  intuitions: F, G, A\n"
      "  rule: F($X) ==> G($X) And $X\n");
  const Rule& rule = logic.theories[0].rules[0];
  std::vector<Term> out = apply_rule(rule, {{"X", parse_term("A")}});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == parse_term("G(A)"));
  CHECK(out[1] == parse_term("A"));
}

TEST_CASE("derivation is deterministic") {
  SemanticLogic logic = test::fixture_logic("semantic_logic_2.sl");
  Lattice first = derive_text(logic, "#S");
  Lattice second = derive_text(logic, "#S");
  CHECK(first == second);
}

TEST_CASE("lattices survive the JSON round trip") {
  SemanticLogic logic = test::fixture_logic("semantic_logic_2.sl");
  Lattice lattice = derive_text(logic, "#S");
  Lattice back = lattice_from_json(lattice_to_json(lattice));
  CHECK(back == lattice);
  CHECK_THROWS_AS(lattice_from_json(Json::object()), Error);
}

TEST_CASE("the seeing rule base reaches its full deduction set") {
  SemanticLogic logic = test::fixture_logic("semantic_logic_2.sl");
  Lattice lattice = derive_text(logic, "#S");
  CHECK(lattice.terms().size() == 23);

  const char* expected[] = {
      "P(Not(Excitement))",
      "Attention-Policy(Excitement(Wonder(How(Ability(See(Unseen))))))",
      "Wonder(How(Ability(See(Unseen))))",
      "Attention-Policy",
      "Positive-Sense(Ability(See(Unseen)))",
      "Question(Ability(See(Unseen)))",
      "Excitement(Wonder(How(Ability(See(Unseen)))))",
      "Engagement(Ability(See(Unseen)))",
      "Abduction(P(Not(See(Unseen))))",
      "Attention-Policy(Engagement(Ability(See(Unseen))))",
      "P(Not(Promotion))",
      "Propagation(Engagement(Ability(See(Unseen))))",
  };
  for (const char* t : expected) {
    CAPTURE(t);
    CHECK(lattice.contains(parse_term(t)));
  }
}

TEST_CASE("the cognitive-meanings rule base closes over seventy-one terms") {
  SemanticLogic logic = test::fixture_logic("semantic_logic_1.sl");
  Lattice lattice = derive_text(logic, "#S");
  CHECK(lattice.terms().size() == 71);
  // The duplicated quality-lift rule adds no second derivation of anything.
  std::set<std::string> distinct;
  for (const Term& t : lattice.terms()) distinct.insert(t.str());
  CHECK(distinct.size() == 71);
  CHECK(lattice.contains(parse_term("\xE2\x86\x91Quality(Entertainment)")));
}
