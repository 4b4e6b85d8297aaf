//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_DIMACS_H
#define PSPS_DIMACS_H

#include <string>
#include <vector>

#include "psps/ground.h"

namespace psps {

// Bijection between unforced ground atoms and DIMACS variables 1..n,
// ascending by atom id.
struct VarMap {
  std::vector<int> varToAtom; // index 1..n
  std::vector<int> atomToVar; // -1 for atoms without a variable

  std::string write(const GroundTheory& gt) const; // "<var> <atom>" lines
};

struct CnfExport {
  std::string cnf;
  VarMap map;
};

// Clausal export of a c-atom-free, Horn-free core. Throws
// Errc::CatomPresent / Errc::HornPresent.
CnfExport exportCnf(const GroundTheory& gt);

// Parses a SAT solver assignment ("v" lines or bare literals), lifts it
// through the map and re-verifies it against the core. Unmentioned
// variables default to false. Returns true atom ids ascending, with the
// core's forced-true atoms included. Throws Errc::UnknownVar /
// Errc::ModelMismatch.
std::vector<int> liftModel(const std::string& assignment, const VarMap& map,
                           const GroundTheory& gt);

} // namespace psps

#endif
