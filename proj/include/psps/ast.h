//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_AST_H
#define PSPS_AST_H

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "psps/error.h"

namespace psps {

// Terms are constants, variables or the placeholder of an e-atom position.
// Arithmetic expression trees exist only between parsing and desugaring.
enum class TermKind { Sym, Int, Var, Hole, Expr };
enum class ArithOp { Add, Sub, Mul, Div, Mod };

const char* opName(ArithOp op); // "+", "-", "*", "/", "mod"

struct Term {
  TermKind kind = TermKind::Sym;
  std::string name;        // Sym, Var
  std::int64_t value = 0;  // Int
  ArithOp op = ArithOp::Add;
  std::vector<Term> sub;   // Expr: exactly two operands

  static Term sym(std::string n);
  static Term integer(std::int64_t v);
  static Term var(std::string n);
  static Term hole();
  static Term expr(ArithOp o, Term lhs, Term rhs);

  bool isConst() const { return kind == TermKind::Sym || kind == TermKind::Int; }
  bool operator==(const Term& o) const;
  bool operator<(const Term& o) const;
};

enum class PredClass { Data, Program, Predefined };

// Predefined relation symbols: binary comparisons "=", "!=", "<", "<=",
// ">", ">=" and ternary defining relations "+", "-", "*", "/", "mod"
// with argument order (lhs, rhs, result).
bool isComparisonPred(const std::string& p);
bool isArithPred(const std::string& p);
bool isPredefinedPred(const std::string& p);

struct Atom {
  std::string pred;
  std::vector<Term> args;
  PredClass cls = PredClass::Program;

  bool hasHole() const;
  bool isGround() const;
  bool operator==(const Atom& o) const;
  bool operator<(const Atom& o) const;
};

// l { S1 ; ... ; Sk } u with set definitions  template : cond, cond.
struct SetDef {
  Atom templ;
  std::vector<Atom> conds;
  // Variables bound inside this definition. Filled by validation:
  // variables in data-condition argument positions plus variables
  // synthesized by arithmetic desugaring inside the definition.
  std::vector<std::string> bound;
  std::vector<std::string> free;
  std::vector<std::string> synthBound; // desugar-introduced, always bound
};

struct CAtom {
  std::optional<Term> lower;
  std::optional<Term> upper;
  std::vector<SetDef> defs;
};

using Elem = std::variant<Atom, CAtom>;

enum class Flavor { Generating, Horn, Verifying };

struct Rule {
  std::vector<Elem> ante;
  std::vector<Elem> cons;
  bool hornSyntax = false; // written head <- body
  Flavor flavor = Flavor::Generating;
  // Variables introduced by arithmetic desugaring. They carry intermediate
  // expression values and are not confined to the Herbrand universe.
  std::vector<std::string> synthVars;
};

struct PredSig {
  int arity = 0;
  PredClass cls = PredClass::Program;
};

struct DataProgramPair {
  std::vector<Atom> data; // ground facts, deduplicated
  std::vector<Rule> rules;
  std::map<std::string, Term> constants; // external name=value bindings
  std::map<std::string, PredSig> sigs;           // filled by validate
  std::set<std::string> hornHeads;               // filled by validate
  bool validated = false;
};

// Variable utilities.
void collectVars(const Term& t, std::vector<std::string>& out);
void collectVars(const Atom& a, std::vector<std::string>& out);
std::vector<std::string> ruleVars(const Rule& r);

// Replaces every compound arithmetic expression by a fresh variable plus
// a defining predefined atom, in evaluation order. Total on valid rules
// and idempotent.
Rule desugarArithmetic(const Rule& r);

// bound = variables in data-condition argument positions (plus synthesized
// ones), free = the rest; with no conditions every template variable is free.
std::pair<std::set<std::string>, std::set<std::string>> classifySetVariables(const SetDef& def);

// Resolves named constants, desugars arithmetic, assigns predicate
// classes and rule flavors, renames bound variables apart and checks the
// static constraints of data-program pairs. Throws Error on violations.
void validate(DataProgramPair& pair);

// Canonical printing (the pretty-printer output is the canonical text form).
std::string printTerm(const Term& t);
std::string printAtom(const Atom& a);
std::string printElem(const Elem& e);
std::string printRule(const Rule& r);
std::string printProgram(const std::vector<Rule>& rules);
std::string printData(const std::vector<Atom>& data);

} // namespace psps

#endif
