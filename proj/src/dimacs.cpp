//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/dimacs.h"

#include <sstream>

#include "psps/solver.h"

namespace psps {

std::string VarMap::write(const GroundTheory& gt) const {
  std::ostringstream out;
  for (std::size_t v = 1; v < varToAtom.size(); ++v)
    out << v << " " << gt.atomText[static_cast<std::size_t>(varToAtom[v])] << "\n";
  return out.str();
}

CnfExport exportCnf(const GroundTheory& gt) {
  if (!gt.horn.empty()) throw Error(Errc::HornPresent, "core contains Horn rules");
  auto checkRules = [&](const std::vector<GroundRule>& rules) {
    for (const auto& r : rules) {
      for (const auto& l : r.ante)
        if (l.isCatom) throw Error(Errc::CatomPresent, "core contains a cardinality atom");
      for (const auto& l : r.cons)
        if (l.isCatom) throw Error(Errc::CatomPresent, "core contains a cardinality atom");
    }
  };
  checkRules(gt.rules);
  checkRules(gt.vrules);

  CnfExport out;
  out.map.atomToVar.assign(gt.atoms.size(), -1);
  out.map.varToAtom.push_back(0); // variables are 1-based
  for (std::size_t a = 0; a < gt.atoms.size(); ++a) {
    if (gt.forced[a] != Forced::None) continue;
    out.map.atomToVar[a] = static_cast<int>(out.map.varToAtom.size());
    out.map.varToAtom.push_back(static_cast<int>(a));
  }

  std::ostringstream clauses;
  std::size_t nClauses = 0;
  auto emit = [&](const GroundRule& r) {
    for (const auto& l : r.ante) clauses << "-" << out.map.atomToVar[static_cast<std::size_t>(l.id)] << " ";
    for (const auto& l : r.cons) clauses << out.map.atomToVar[static_cast<std::size_t>(l.id)] << " ";
    clauses << "0\n";
    ++nClauses;
  };
  for (const auto& r : gt.rules) emit(r);
  for (const auto& r : gt.vrules) emit(r);

  std::ostringstream cnf;
  cnf << "p cnf " << out.map.varToAtom.size() - 1 << " " << nClauses << "\n" << clauses.str();
  out.cnf = cnf.str();
  return out;
}

std::vector<int> liftModel(const std::string& assignment, const VarMap& map,
                           const GroundTheory& gt) {
  std::vector<char> truth(gt.atoms.size(), 0);
  for (std::size_t a = 0; a < gt.atoms.size(); ++a)
    if (gt.forced[a] == Forced::True) truth[a] = 1;

  std::istringstream in(assignment);
  std::string line;
  std::vector<char> seen(map.varToAtom.size(), 0);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "v" || tok == "V" || tok == "s" || tok == "SATISFIABLE") continue;
      long lit;
      try {
        lit = std::stol(tok);
      } catch (const std::exception&) {
        throw Error(Errc::Parse, "bad literal '" + tok + "' in assignment");
      }
      if (lit == 0) continue;
      long v = lit < 0 ? -lit : lit;
      if (v >= static_cast<long>(map.varToAtom.size()))
        throw Error(Errc::UnknownVar, "variable " + std::to_string(v) + " not in map");
      if (seen[static_cast<std::size_t>(v)])
        throw Error(Errc::UnknownVar, "variable " + std::to_string(v) + " mentioned twice");
      seen[static_cast<std::size_t>(v)] = 1;
      if (lit > 0) truth[static_cast<std::size_t>(map.varToAtom[static_cast<std::size_t>(v)])] = 1;
    }
  }
  if (!satisfiesCore(gt, truth))
    throw Error(Errc::ModelMismatch, "assignment does not satisfy the ground core");
  std::vector<int> model;
  for (std::size_t a = 0; a < gt.atoms.size(); ++a)
    if (truth[a]) model.push_back(static_cast<int>(a));
  return model;
}

} // namespace psps
