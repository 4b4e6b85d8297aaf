//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_GROUND_H
#define PSPS_GROUND_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "psps/ast.h"

namespace psps {

// Herbrand universe: integers ascending, then symbols lexicographic.
std::vector<Term> herbrandUniverse(const DataProgramPair& pair);

// Ground predefined atom evaluation. Comparisons compare integers by value
// and symbols by identity; mixed comparisons other than = and != order all
// integers before all symbols. Arithmetic relations are false on non-integer
// arguments. Throws Errc::Overflow.
bool evalPredefined(const Atom& a);

// A literal of a ground rule: either a program atom id or an index into the
// c-atom pool.
struct GLit {
  bool isCatom = false;
  int id = 0;
  bool operator==(const GLit& o) const { return isCatom == o.isCatom && id == o.id; }
};

struct GroundCAtom {
  int lo = 0;
  int hi = 0;
  std::vector<int> members; // atom ids, ascending, no duplicates
  bool operator==(const GroundCAtom& o) const {
    return lo == o.lo && hi == o.hi && members == o.members;
  }
};

struct GroundRule {
  std::vector<GLit> ante;
  std::vector<GLit> cons;
};

struct HornRule {
  int head = 0;
  std::vector<int> body; // atom ids; empty body = closure fact
};

enum class Forced : signed char { None = 0, True = 1, False = -1 };

// Propositional ground theory. Atom ids are dense from 0 in interning
// order; data and predefined atoms are evaluated away and never appear.
struct GroundTheory {
  std::vector<Atom> atoms;             // id -> ground atom
  std::vector<std::string> atomText;   // id -> canonical print
  std::vector<Forced> forced;          // per atom
  std::vector<bool> closureAtom;       // atom's predicate is a Horn head
  std::vector<GroundCAtom> catoms;     // deduplicated pool
  std::vector<GroundRule> rules;       // generating rules
  std::vector<GroundRule> vrules;      // verifying rules, checked per leaf
  std::vector<HornRule> horn;

  std::unordered_map<std::string, int> atomIndex;
  std::unordered_map<std::string, int> catomIndex;

  int intern(const Atom& a);
  int internCatom(GroundCAtom c);
  std::string printLit(const GLit& l) const;
  std::string printGroundRule(const GroundRule& r) const;
};

// gr(cl(D) u P) with data and predefined atoms evaluated away and the four
// grounding-time eliminations applied. No truth forcing yet.
GroundTheory groundPair(const DataProgramPair& pair);

// Propagates facts, constraints and c-atom counters to a fixpoint and
// eliminates forced atoms from every rule. Throws Errc::Inconsistent when
// some atom is forced both ways (the pair has no models).
void simplifyToCore(GroundTheory& gt);

// Canonical text form of the ground core (diffable, deterministic).
std::string writeGnd(const GroundTheory& gt);
GroundTheory readGnd(const std::string& text, const std::string& filename = "<gnd>");

} // namespace psps

#endif
