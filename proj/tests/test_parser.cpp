//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psps/parser.h"

using namespace psps;

namespace {

Errc parseError(const std::string& text) {
  try {
    parseProgram(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return Errc::Parse;
}

} // namespace

TEST_CASE("facts and rules") {
  auto rules = parseProgram("p(a).\nq(b,c) -> p(a).\ntrue -> p(b).\np(a) -> false.");
  REQUIRE(rules.size() == 4);
  CHECK(rules[0].ante.empty());
  CHECK(rules[0].cons.size() == 1);
  CHECK(rules[1].ante.size() == 1);
  CHECK(rules[2].ante.empty());
  CHECK(rules[3].cons.empty());
}

TEST_CASE("disjunctive facts") {
  auto rules = parseProgram("a | b | c.");
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].ante.empty());
  CHECK(rules[0].cons.size() == 3);
}

TEST_CASE("comments and whitespace") {
  auto rules = parseProgram("% leading comment\np(a). % trailing\n\n  q(b).\n");
  CHECK(rules.size() == 2);
}

TEST_CASE("holes parse only as full arguments") {
  auto rules = parseProgram("p(X) -> q(X,_).");
  const Atom& q = std::get<Atom>(rules[0].cons[0]);
  CHECK(q.args[1].kind == TermKind::Hole);
}

TEST_CASE("negative integers and zero") {
  auto data = parseData("d(-3). d(0).");
  CHECK(data[0].args[0] == Term::integer(-3));
  CHECK(data[1].args[0] == Term::integer(0));
}

TEST_CASE("range sugar expands per argument") {
  auto data = parseData("p(1..3).");
  REQUIRE(data.size() == 3);
  CHECK(data[0].args[0] == Term::integer(1));
  CHECK(data[2].args[0] == Term::integer(3));
  auto grid = parseData("g(1..2, 1..2).");
  CHECK(grid.size() == 4);
}

TEST_CASE("comparisons use infix notation") {
  auto rules = parseProgram("p(X), X < 3, X != Y -> q(Y).");
  const Atom& lt = std::get<Atom>(rules[0].ante[1]);
  CHECK(lt.pred == "<");
  const Atom& ne = std::get<Atom>(rules[0].ante[2]);
  CHECK(ne.pred == "!=");
}

TEST_CASE("arithmetic keeps standard precedence") {
  auto rules = parseProgram("p(X) -> q(X + 2 * 3).");
  const Term& t = std::get<Atom>(rules[0].cons[0]).args[0];
  REQUIRE(t.kind == TermKind::Expr);
  CHECK(t.op == ArithOp::Add);
  CHECK(t.sub[1].op == ArithOp::Mul);
  auto paren = parseProgram("p(X) -> q((X + 2) * 3).");
  CHECK(std::get<Atom>(paren[0].cons[0]).args[0].op == ArithOp::Mul);
}

TEST_CASE("mod is a keyword operator") {
  auto rules = parseProgram("p(X) -> q(X mod 2).");
  CHECK(std::get<Atom>(rules[0].cons[0]).args[0].op == ArithOp::Mod);
}

TEST_CASE("cardinality atoms with optional bounds") {
  auto rules = parseProgram(
      "vtx(X) -> 1 { clrd(X,C) : color(C) } 1.\n"
      "size(K) -> { invc(X) : vtx(X) } K.\n"
      "d(X) -> X { p(X,Y) : d(Y), Y >= X ; q(Z) : e(Z) }.");
  const CAtom& both = std::get<CAtom>(rules[0].cons[0]);
  CHECK(both.lower.has_value());
  CHECK(both.upper.has_value());
  const CAtom& upperOnly = std::get<CAtom>(rules[1].cons[0]);
  CHECK_FALSE(upperOnly.lower.has_value());
  CHECK(upperOnly.upper.has_value());
  const CAtom& lowerOnly = std::get<CAtom>(rules[2].cons[0]);
  CHECK(lowerOnly.lower.has_value());
  CHECK_FALSE(lowerOnly.upper.has_value());
  REQUIRE(lowerOnly.defs.size() == 2);
  CHECK(lowerOnly.defs[0].conds.size() == 2);
  CHECK(lowerOnly.defs[1].conds.size() == 1);
}

TEST_CASE("horn rules") {
  auto rules = parseProgram("visit(Y) <- visit(X), hc_edge(X,Y).\nvisit(Y) <- start(Y).\np <- true.");
  CHECK(rules[0].hornSyntax);
  CHECK(rules[0].ante.size() == 2);
  CHECK(rules[1].ante.size() == 1);
  CHECK(rules[2].ante.empty());
}

TEST_CASE("reserved identifier prefix is rejected") {
  CHECK(parseError("__d_p_1(X) -> p(X).") == Errc::Parse);
  CHECK(parseError("p(X) -> __q(X).") == Errc::Parse);
}

TEST_CASE("malformed input is a parse error") {
  CHECK(parseError("p(a)") == Errc::Parse);          // missing period
  CHECK(parseError("p(X) -> -> q(X).") == Errc::Parse);
  CHECK(parseError("p(X -> q(X).") == Errc::Parse);
  CHECK(parseError("P(a).") == Errc::Parse);         // predicates are lowercase
  CHECK(parseError("false -> p.") == Errc::Parse);
}

TEST_CASE("data must be ground facts") {
  try {
    parseData("d(X).");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NongroundData);
  }
  try {
    parseData("d(_).");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NongroundData);
  }
}

TEST_CASE("data deduplicates") {
  CHECK(parseData("d(1). d(1). d(2).").size() == 2);
}

TEST_CASE("parse errors carry positions") {
  try {
    parseProgram("p(a).\nq(b) -> .", "prog.ps");
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.span().has_value());
    CHECK(e.span()->file == "prog.ps");
    CHECK(e.span()->line == 2);
  }
}

TEST_CASE("constant bindings") {
  auto consts = parseConstants({"n=70", "root=a", "neg=-5"});
  CHECK(consts.at("n") == Term::integer(70));
  CHECK(consts.at("root") == Term::sym("a"));
  CHECK(consts.at("neg") == Term::integer(-5));

  auto badBinding = [](const std::vector<std::string>& args) {
    try {
      parseConstants(args);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Parse;
  };
  CHECK(badBinding({"n"}) == Errc::BadBinding);
  CHECK(badBinding({"n=X"}) == Errc::BadBinding);
  CHECK(badBinding({"n=1", "n=2"}) == Errc::DuplicateConst);
}
