//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "psps/ground.h"
#include "psps/parser.h"
#include "test_util.h"

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

GroundTheory core(const std::string& data, const std::string& prog,
                  std::map<std::string, Term> consts = {}) {
  DataProgramPair p = makePair(data, prog, std::move(consts));
  GroundTheory gt = groundPair(p);
  simplifyToCore(gt);
  return gt;
}

std::set<std::string> forcedTrue(const GroundTheory& gt) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.forced[i] == Forced::True) out.insert(gt.atomText[i]);
  return out;
}

std::set<std::set<std::string>> textModels(const GroundTheory& gt) {
  std::set<std::set<std::string>> out;
  for (const auto& m : testutil::bruteModels(gt)) {
    std::set<std::string> s;
    for (int id : m) s.insert(gt.atomText[static_cast<std::size_t>(id)]);
    out.insert(std::move(s));
  }
  return out;
}

Atom evalAtom(const std::string& pred, std::vector<Term> args) {
  Atom a;
  a.pred = pred;
  a.args = std::move(args);
  a.cls = PredClass::Predefined;
  return a;
}

} // namespace

TEST_CASE("herbrand universe orders integers before symbols") {
  DataProgramPair p = makePair("d(2). d(b). d(-1).", "d(X) -> p(X, a, 7).");
  auto hu = herbrandUniverse(p);
  REQUIRE(hu.size() == 5);
  CHECK(hu[0] == Term::integer(-1));
  CHECK(hu[1] == Term::integer(2));
  CHECK(hu[2] == Term::integer(7));
  CHECK(hu[3] == Term::sym("a"));
  CHECK(hu[4] == Term::sym("b"));
}

TEST_CASE("bound constants join the universe") {
  DataProgramPair p = makePair("d(1).", "d(X) -> p(n).", {{"n", Term::integer(70)}});
  auto hu = herbrandUniverse(p);
  CHECK(std::find(hu.begin(), hu.end(), Term::integer(70)) != hu.end());
}

TEST_CASE("comparison evaluation") {
  Term i1 = Term::integer(1), i2 = Term::integer(2);
  Term a = Term::sym("a"), b = Term::sym("b");
  CHECK(evalPredefined(evalAtom("=", {i1, i1})));
  CHECK_FALSE(evalPredefined(evalAtom("=", {i1, i2})));
  CHECK_FALSE(evalPredefined(evalAtom("=", {i1, a})));
  CHECK(evalPredefined(evalAtom("!=", {i1, a})));
  CHECK(evalPredefined(evalAtom("<", {i1, i2})));
  CHECK(evalPredefined(evalAtom("<", {a, b})));
  CHECK(evalPredefined(evalAtom("<", {i2, a})));  // integers precede symbols
  CHECK_FALSE(evalPredefined(evalAtom("<", {a, i2})));
  CHECK(evalPredefined(evalAtom(">=", {b, b})));
  CHECK(evalPredefined(evalAtom("<=", {i1, i1})));
  CHECK(evalPredefined(evalAtom(">", {a, i2})));
}

TEST_CASE("arithmetic evaluation") {
  auto i = [](std::int64_t v) { return Term::integer(v); };
  CHECK(evalPredefined(evalAtom("+", {i(1), i(2), i(3)})));
  CHECK_FALSE(evalPredefined(evalAtom("+", {i(1), i(2), i(4)})));
  CHECK(evalPredefined(evalAtom("-", {i(1), i(2), i(-1)})));
  CHECK(evalPredefined(evalAtom("*", {i(3), i(4), i(12)})));
  CHECK(evalPredefined(evalAtom("/", {i(7), i(2), i(3)})));
  CHECK(evalPredefined(evalAtom("mod", {i(7), i(2), i(1)})));
  CHECK_FALSE(evalPredefined(evalAtom("/", {i(7), i(0), i(0)})));   // division by zero
  CHECK_FALSE(evalPredefined(evalAtom("mod", {i(7), i(0), i(0)}))); // is simply false
  CHECK_FALSE(evalPredefined(evalAtom("+", {Term::sym("a"), i(2), i(3)})));
  CHECK_THROWS_AS(evalPredefined(evalAtom("*", {i(INT64_MAX), i(2), i(1)})), Error);
}

TEST_CASE("a hole grounds to a disjunction over the universe in order") {
  DataProgramPair p = makePair("", "q(b,c) -> p(a).\np(X) -> q(X,_).");
  GroundTheory gt = groundPair(p);
  REQUIRE(gt.rules.size() == 4);
  CHECK(gt.printGroundRule(gt.rules[0]) == "q(b,c) -> p(a).");
  CHECK(gt.printGroundRule(gt.rules[1]) == "p(a) -> q(a,a) | q(a,b) | q(a,c).");
  CHECK(gt.printGroundRule(gt.rules[2]) == "p(b) -> q(b,a) | q(b,b) | q(b,c).");
  CHECK(gt.printGroundRule(gt.rules[3]) == "p(c) -> q(c,a) | q(c,b) | q(c,c).");
}

TEST_CASE("arithmetic grounds through functional bindings") {
  GroundTheory gt = core("", "p(1). p(2). p(X) -> q(X, X + 1).");
  // Only X=1 yields a value inside the universe; everything is then forced.
  CHECK(textModels(gt) == std::set<std::set<std::string>>{{"p(1)", "p(2)", "q(1,2)"}});
}

TEST_CASE("nonmonotonicity of the closed-world grounding") {
  DataProgramPair t1 = makePair("", "p(_). p(a) -> false.");
  GroundTheory g1 = groundPair(t1);
  CHECK_THROWS_AS(simplifyToCore(g1), Error);

  GroundTheory g2 = core("", "p(_). p(a) -> false. p(b).");
  CHECK(textModels(g2) == std::set<std::set<std::string>>{{"p(b)"}});
}

TEST_CASE("cardinality atoms ground per set definition") {
  DataProgramPair p = makePair("d1(1). d1(2). d1(3). d2(a). d2(b).",
                               "d1(X) -> X { p(X,Y) : d1(Y), Y >= X ; q(Z) : d2(Z) }.");
  GroundTheory gt = groundPair(p);
  REQUIRE(gt.catoms.size() == 3);
  auto members = [&](int ci) {
    std::vector<std::string> out;
    for (int id : gt.catoms[static_cast<std::size_t>(ci)].members)
      out.push_back(gt.atomText[static_cast<std::size_t>(id)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(gt.catoms[0].lo == 1);
  CHECK(members(0) ==
        std::vector<std::string>{"p(1,1)", "p(1,2)", "p(1,3)", "q(a)", "q(b)"});
  CHECK(gt.catoms[1].lo == 2);
  CHECK(members(1) == std::vector<std::string>{"p(2,2)", "p(2,3)", "q(a)", "q(b)"});
  CHECK(gt.catoms[2].lo == 3);
  CHECK(members(2) == std::vector<std::string>{"p(3,3)", "q(a)", "q(b)"});

  simplifyToCore(gt);
  CHECK(forcedTrue(gt) == std::set<std::string>{"p(3,3)", "q(a)", "q(b)"});
}

TEST_CASE("missing bounds clamp to the member count") {
  DataProgramPair p = makePair("d(1). d(2).", "true -> { s(X) : d(X) } 1.");
  GroundTheory gt = groundPair(p);
  REQUIRE(gt.catoms.size() == 1);
  CHECK(gt.catoms[0].lo == 0);
  CHECK(gt.catoms[0].hi == 1);
}

TEST_CASE("degenerate cardinality bounds collapse the atom") {
  // Bounds covering every count make the c-atom true: rule disappears.
  GroundTheory top = core("d(1). d(2).", "true -> 0 { s(X) : d(X) } 5.");
  CHECK(top.rules.empty());
  // An unsatisfiable lower bound in a fact position is a contradiction.
  DataProgramPair p = makePair("d(1). d(2).", "true -> 3 { s(X) : d(X) } 3.");
  GroundTheory gt = groundPair(p);
  CHECK_THROWS_AS(simplifyToCore(gt), Error);
}

TEST_CASE("counter extremes force members") {
  GroundTheory all = core("d(1). d(2).", "true -> 2 { s(X) : d(X) } 2.");
  CHECK(forcedTrue(all) == std::set<std::string>{"s(1)", "s(2)"});

  GroundTheory none = core("d(1). d(2).", "true -> 0 { s(X) : d(X) } 0. s(1) -> m.");
  CHECK(forcedTrue(none).empty());
  std::set<std::string> falses;
  for (std::size_t i = 0; i < none.atoms.size(); ++i)
    if (none.forced[i] == Forced::False) falses.insert(none.atomText[i]);
  CHECK(falses.count("s(1)") == 1);
  CHECK(falses.count("s(2)") == 1);
}

TEST_CASE("non-integer instantiated bounds make the c-atom false") {
  // The X=a instance has a true antecedent and a consequent that grounds
  // to false, so the pair is inconsistent.
  DataProgramPair p = makePair("d(1). d(a).", "d(X) -> X { s(Y) : d(Y) }.");
  GroundTheory gt = groundPair(p);
  CHECK_THROWS_AS(simplifyToCore(gt), Error);
}

TEST_CASE("grounding eliminations") {
  // True data antecedents vanish; false ones drop the rule.
  GroundTheory gt = core("d(1).", "d(1), p -> q. d(2), p -> r.");
  std::set<std::string> texts(gt.atomText.begin(), gt.atomText.end());
  CHECK(texts.count("q") == 1);
  CHECK(texts.count("r") == 0);
  REQUIRE(gt.rules.size() == 1);
  CHECK(gt.printGroundRule(gt.rules[0]) == "p -> q.");
}

TEST_CASE("duplicate literals and duplicate rules collapse") {
  DataProgramPair p = makePair("d(1).", "p(X), p(1) -> q. q, p(1) -> false. p(1), q -> false.");
  GroundTheory gt = groundPair(p);
  REQUIRE(gt.rules.size() == 2);
  CHECK(gt.rules[0].ante.size() == 1); // p(1) twice collapses
  CHECK(gt.rules[1].ante.size() == 2);
}

TEST_CASE("overflow during grounding is an error") {
  DataProgramPair p = makePair("d(9223372036854775807). d(1).", "d(X), d(Y) -> p(X + Y).");
  CHECK_THROWS_AS(groundPair(p), Error);
}

TEST_CASE("inconsistency is detected during simplification") {
  DataProgramPair p = makePair("d(1).", "a. a -> false.");
  GroundTheory gt = groundPair(p);
  try {
    simplifyToCore(gt);
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Inconsistent);
  }
}

TEST_CASE("horn rules ground and survive simplification") {
  GroundTheory gt = core("e(1,2). e(2,3).",
                         "visit(Y) <- visit(X), e(X,Y). visit(1) <- true. d(X) -> visit(X).");
  CHECK(gt.horn.size() >= 1);
  // visit atoms are closure atoms.
  bool sawClosure = false;
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.closureAtom[i]) sawClosure = true;
  CHECK(sawClosure);
}

TEST_CASE("ground core files round-trip") {
  const char* progs[] = {
      "q(b,c) -> p(a).\np(X) -> q(X,_).",
      "p(1). p(2). p(X) -> q(X, X + 1).",
      "visit(Y) <- visit(X), e(X,Y). visit(1) <- true. vtx(X) -> visit(X).",
  };
  const char* datas[] = {"", "", "vtx(1). vtx(2). e(1,2). e(2,1)."};
  for (int i = 0; i < 3; ++i) {
    GroundTheory gt = core(datas[i], progs[i]);
    std::string text = writeGnd(gt);
    GroundTheory back = readGnd(text);
    CHECK(writeGnd(back) == text);
    CHECK(textModels(back) == textModels(gt));
  }
}

TEST_CASE("catom cores round-trip") {
  GroundTheory gt = core("d1(1). d1(2). d1(3). d2(a). d2(b).",
                         "d1(X) -> X { p(X,Y) : d1(Y), Y >= X ; q(Z) : d2(Z) }.");
  std::string text = writeGnd(gt);
  GroundTheory back = readGnd(text);
  CHECK(writeGnd(back) == text);
  CHECK(textModels(back) == textModels(gt));
}
