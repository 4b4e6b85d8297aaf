//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psps/ast.h"
#include "psps/parser.h"

using namespace psps;

namespace {

DataProgramPair makePair(const std::string& data, const std::string& prog,
                         std::map<std::string, Term> consts = {}) {
  DataProgramPair p;
  p.data = parseData(data);
  p.rules = parseProgram(prog);
  p.constants = std::move(consts);
  validate(p);
  return p;
}

Errc validationError(const std::string& data, const std::string& prog) {
  try {
    makePair(data, prog);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return Errc::Parse;
}

} // namespace

TEST_CASE("term basics") {
  CHECK(Term::integer(3) == Term::integer(3));
  CHECK_FALSE(Term::integer(3) == Term::sym("a"));
  CHECK(Term::var("X") == Term::var("X"));
  CHECK(Term::hole() == Term::hole());
  CHECK(Term::integer(1) < Term::integer(2));
  CHECK(Term::sym("a") < Term::sym("b"));
  CHECK(Term::integer(7).isConst());
  CHECK_FALSE(Term::var("X").isConst());
}

TEST_CASE("variable collection is first-occurrence order") {
  Rule r = parseProgram("p(X,Y), q(Y,Z) -> r(Z,X).")[0];
  CHECK(ruleVars(r) == std::vector<std::string>{"X", "Y", "Z"});
}

TEST_CASE("term printing uses standard precedence") {
  Term t = Term::expr(ArithOp::Mul, Term::expr(ArithOp::Add, Term::var("X"), Term::var("Y")),
                      Term::var("Z"));
  CHECK(printTerm(t) == "(X + Y) * Z");
  Term u = Term::expr(ArithOp::Add, Term::var("X"),
                      Term::expr(ArithOp::Mul, Term::var("Y"), Term::var("Z")));
  CHECK(printTerm(u) == "X + Y * Z");
  Term v = Term::expr(ArithOp::Sub, Term::var("X"),
                      Term::expr(ArithOp::Sub, Term::var("Y"), Term::var("Z")));
  CHECK(printTerm(v) == "X - (Y - Z)");
}

TEST_CASE("antecedent expressions decompose in evaluation order") {
  Rule r = parseProgram("q((X + Y) * Z, a), b -> h.")[0];
  Rule d = desugarArithmetic(r);
  CHECK(printRule(d) == "T1 = X + Y, T2 = T1 * Z, q(T2,a), b -> h.");
}

TEST_CASE("consequent expressions move their definitions to the antecedent tail") {
  Rule r = parseProgram("b -> q((X + Y) * Z, a) | h.")[0];
  Rule d = desugarArithmetic(r);
  CHECK(printRule(d) == "b, T1 = X + Y, T2 = T1 * Z -> q(T2,a) | h.");
}

TEST_CASE("equality with a simple expression collapses to the defining atom") {
  Rule r = parseProgram("p(X), Y = X + 1 -> q(X,Y).")[0];
  Rule d = desugarArithmetic(r);
  CHECK(printRule(d) == "p(X), Y = X + 1 -> q(X,Y).");
  // The antecedent equality is now the ternary relation itself.
  const Atom& a = std::get<Atom>(d.ante[1]);
  CHECK(a.pred == "+");
  CHECK(a.args.size() == 3);
  CHECK(a.args[2] == Term::var("Y"));
}

TEST_CASE("consequent equality with an expression stays in place") {
  Rule r = parseProgram("p(X) -> Y = X + 1.")[0];
  Rule d = desugarArithmetic(r);
  const Atom& a = std::get<Atom>(d.cons[0]);
  CHECK(a.pred == "+");
  CHECK(a.args[2] == Term::var("Y"));
}

TEST_CASE("desugaring is idempotent") {
  for (const char* src : {"q((X + Y) * Z, a), b -> h.", "p(X), Y = X + 1 -> q(X,Y).",
                          "index(R) -> { q(R + I - 1, I) : index(I) } 1."}) {
    Rule d = desugarArithmetic(parseProgram(src)[0]);
    CHECK(printRule(desugarArithmetic(d)) == printRule(d));
  }
}

TEST_CASE("set variables split into bound and free") {
  DataProgramPair p = makePair("index(1). index(2).", "index(R) -> 1 { q(R,C) : index(C) } 1.");
  const CAtom& c = std::get<CAtom>(p.rules[0].cons[0]);
  REQUIRE(c.defs.size() == 1);
  CHECK(c.defs[0].bound == std::vector<std::string>{"C"});
  CHECK(c.defs[0].free == std::vector<std::string>{"R"});
}

TEST_CASE("set definitions without conditions have only free variables") {
  DataProgramPair p = makePair("d(1).", "true -> { q(X,Y) } 1.");
  const CAtom& c = std::get<CAtom>(p.rules[0].cons[0]);
  CHECK(c.defs[0].bound.empty());
  CHECK(c.defs[0].free == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("bound variables are renamed apart from rule variables") {
  DataProgramPair p = makePair("index(1).",
                               "p(C), index(R) -> 1 { q(R,C) : index(C) } 1.");
  const CAtom& c = std::get<CAtom>(p.rules[0].cons[0]);
  CHECK(c.defs[0].bound == std::vector<std::string>{"C_b1"});
  CHECK(printElem(p.rules[0].cons[0]) == "1 { q(R,C_b1) : index(C_b1) } 1");
}

TEST_CASE("synthesized variables inside set definitions are bound") {
  DataProgramPair p = makePair("index(1). index(2).",
                               "index(R) -> { q(R + I - 1, I) : index(I) } 1.");
  const CAtom& c = std::get<CAtom>(p.rules[0].cons[0]);
  std::set<std::string> bound(c.defs[0].bound.begin(), c.defs[0].bound.end());
  CHECK(bound.count("I") == 1);
  CHECK(bound.size() == 3); // I plus the two defining-atom results
}

TEST_CASE("predicate classes come from the data") {
  DataProgramPair p = makePair("vtx(1). edge(1,2).", "edge(X,Y) -> sel(X) | sel(Y).");
  CHECK(p.sigs.at("edge").cls == PredClass::Data);
  CHECK(p.sigs.at("sel").cls == PredClass::Program);
  CHECK(std::get<Atom>(p.rules[0].ante[0]).cls == PredClass::Data);
  CHECK(std::get<Atom>(p.rules[0].cons[0]).cls == PredClass::Program);
}

TEST_CASE("named constants substitute into rules and data") {
  std::map<std::string, Term> consts{{"n", Term::integer(4)}, {"root", Term::sym("a")}};
  DataProgramPair p = makePair("d(n).", "p(n) -> q(root).", consts);
  CHECK(p.data[0].args[0] == Term::integer(4));
  CHECK(std::get<Atom>(p.rules[0].ante[0]).args[0] == Term::integer(4));
  CHECK(std::get<Atom>(p.rules[0].cons[0]).args[0] == Term::sym("a"));
}

TEST_CASE("horn rules and verifying rules are flavored") {
  DataProgramPair p = makePair("d(1).",
                               "visit(Y) <- visit(X), move(X,Y).\n"
                               "d(X) -> visit(X).\n"
                               "d(X) -> move(X,X).");
  CHECK(p.rules[0].flavor == Flavor::Horn);
  CHECK(p.rules[1].flavor == Flavor::Verifying);
  CHECK(p.rules[2].flavor == Flavor::Generating);
  CHECK(p.hornHeads == std::set<std::string>{"visit"});
}

TEST_CASE("validation rejects ill-formed pairs") {
  CHECK(validationError("d(1).", "p(_) -> q.") == Errc::EatomInBody);
  CHECK(validationError("d(1).", "visit(X) <- d(X).\nvisit(X) -> q(X).\nq(X), visit(X) -> false.") ==
        Errc::HornHeadInG);
  CHECK(validationError("d(1).", "true -> 1 { p(X) : q(X) } 1.") == Errc::ProgramPredInSetcond);
  CHECK(validationError("d(1).", "p(X,Y) -> p(X).") == Errc::ArityMismatch);
  CHECK(validationError("d(1).", "p(X) -> X < 1 < 2.") == Errc::Parse);
  CHECK(validationError("", "p(X) -> q(X).") == Errc::BadParams);
  CHECK(validationError("d(1).", "p(X) -> d(_).") == Errc::DataEatom);
}

TEST_CASE("data atoms are deduplicated and must be ground") {
  DataProgramPair p = makePair("d(1). d(2). d(1).", "d(X) -> p(X).");
  CHECK(p.data.size() == 2);
  CHECK_THROWS_AS(parseData("d(X)."), Error);
}

TEST_CASE("printing round-trips through the parser") {
  const char* srcs[] = {
      "q(b,c) -> p(a).",
      "p(X) -> q(X,_).",
      "vtx(X) -> 1 { clrd(X,C) : color(C) } 1.",
      "visit(Y) <- visit(X), hc_edge(X,Y).",
      "a | b.",
      "p(X), q(X) -> false.",
      "size(K) -> { invc(X) : vtx(X) } K.",
  };
  for (const char* src : srcs) {
    Rule r = parseProgram(src)[0];
    std::string once = printRule(r);
    Rule again = parseProgram(once)[0];
    CHECK(printRule(again) == once);
  }
}
