//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_TRANSLATE_H
#define PSPS_TRANSLATE_H

#include <set>
#include <string>
#include <vector>

#include "psps/ast.h"

namespace psps {

// head :- q1(...), not q2(...).
struct DatalogClause {
  Atom head;
  std::vector<Atom> pos;
  std::vector<Atom> neg;
};

struct PureProgram {
  std::vector<DatalogClause> clauses;
  std::set<std::string> intentional; // head predicates
  std::set<std::string> extensional; // body-only predicates
};

// Parses ".dlg" syntax: `p(X) :- q(X), not r(X).`; comments with %.
PureProgram parseDatalog(const std::string& text, const std::string& filename = "<dlg>");

// Purity: all clauses defining p share one head p(X) with X distinct
// variables, no constants occur, and the extensional part is nonempty.
// Fills the predicate sets. Throws Errc::NotPure.
void checkPure(PureProgram& p);

// The completion-style translation: per clause r a fresh defining
// predicate __d_<pred>_<i> plus body rules and the two completion rule
// families. Output validates as a plain program.
std::vector<Rule> toPs(const PureProgram& p);

// Runs (data, toPs(p)) through the grounder and solver and projects each
// model to the predicates in show. Projections are sorted and
// deduplicated. Throws Errc::BadParams on empty data.
std::vector<std::vector<Atom>> supportedModels(const std::vector<Atom>& data,
                                               const PureProgram& p,
                                               const std::set<std::string>& show);

} // namespace psps

#endif
