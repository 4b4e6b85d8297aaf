//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
// Shared helpers for the test binaries: brute-force model enumeration
// over ground theories and seeded random core generation.
//
#ifndef PSPS_TEST_UTIL_H
#define PSPS_TEST_UTIL_H

#include <random>
#include <set>
#include <string>
#include <vector>

#include "psps/ground.h"
#include "psps/solver.h"

namespace psps {
namespace testutil {

// Every model of the theory as a set of true atom ids (closure included),
// found by trying all assignments of the unforced non-closure atoms.
inline std::set<std::vector<int>> bruteModels(const GroundTheory& gt) {
  std::vector<int> free;
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.forced[i] == Forced::None && !gt.closureAtom[i]) free.push_back(static_cast<int>(i));

  std::set<std::vector<int>> out;
  const std::size_t n = gt.atoms.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free.size()); ++mask) {
    std::vector<char> truth(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (gt.forced[i] == Forced::True) truth[i] = 1;
    for (std::size_t b = 0; b < free.size(); ++b)
      if ((mask >> b) & 1) truth[static_cast<std::size_t>(free[b])] = 1;
    truth = hornClosure(gt, truth);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (gt.closureAtom[i] && gt.forced[i] != Forced::None)
        ok = truth[i] == (gt.forced[i] == Forced::True ? 1 : 0);
    if (!ok || !satisfiesCore(gt, truth)) continue;
    std::vector<int> model;
    for (std::size_t i = 0; i < n; ++i)
      if (truth[i]) model.push_back(static_cast<int>(i));
    out.insert(std::move(model));
  }
  return out;
}

inline std::set<std::vector<int>> solverModels(const GroundTheory& gt) {
  std::set<std::vector<int>> out;
  Solver s(gt);
  s.solve([&](const std::vector<int>& m) {
    out.insert(m);
    return true;
  });
  return out;
}

struct CoreOptions {
  int maxAtoms = 12;
  int maxRules = 10;
  bool catoms = true;
  bool horn = true;
};

// A random propositional core. Closure atoms never occur in generating
// rules; Horn heads are drawn from the closure atoms only.
inline GroundTheory randomCore(std::mt19937_64& rng, const CoreOptions& opt = {}) {
  auto pick = [&](int n) { return static_cast<int>(rng() % std::uint64_t(n)); };
  GroundTheory gt;
  int nAtoms = 2 + pick(opt.maxAtoms - 1);
  int nClosure = opt.horn ? pick(nAtoms / 3 + 1) : 0;
  for (int i = 0; i < nAtoms; ++i) {
    Atom a;
    a.pred = "x" + std::to_string(i);
    gt.intern(a);
  }
  for (int i = 0; i < nClosure; ++i) gt.closureAtom[static_cast<std::size_t>(nAtoms - 1 - i)] = true;
  int nPlain = nAtoms - nClosure;

  auto randomCatom = [&]() -> int {
    std::set<int> mem;
    int want = 2 + pick(std::max(1, nPlain - 1));
    while (static_cast<int>(mem.size()) < want) mem.insert(pick(nPlain));
    GroundCAtom c;
    c.members.assign(mem.begin(), mem.end());
    int k = static_cast<int>(c.members.size());
    c.lo = pick(k + 1);
    c.hi = c.lo + pick(k - c.lo + 1);
    return gt.internCatom(std::move(c));
  };
  auto randomLit = [&](bool allowCatom, bool closureOk) -> GLit {
    GLit l;
    if (allowCatom && opt.catoms && nPlain >= 3 && pick(4) == 0) {
      l.isCatom = true;
      l.id = randomCatom();
    } else {
      l.id = closureOk ? pick(nAtoms) : pick(nPlain);
    }
    return l;
  };

  int nRules = 1 + pick(opt.maxRules);
  for (int i = 0; i < nRules; ++i) {
    GroundRule r;
    int na = pick(3), nc = pick(3);
    bool verifying = nClosure > 0 && pick(3) == 0;
    for (int j = 0; j < na; ++j) r.ante.push_back(randomLit(true, verifying));
    for (int j = 0; j < nc; ++j) r.cons.push_back(randomLit(true, verifying));
    if (verifying)
      gt.vrules.push_back(std::move(r));
    else
      gt.rules.push_back(std::move(r));
  }
  for (int i = 0; i < nClosure; ++i) {
    int nh = 1 + pick(2);
    for (int j = 0; j < nh; ++j) {
      HornRule h;
      h.head = nAtoms - 1 - pick(nClosure);
      int nb = pick(3);
      for (int b = 0; b < nb; ++b) h.body.push_back(pick(nAtoms));
      gt.horn.push_back(std::move(h));
    }
  }
  return gt;
}

} // namespace testutil
} // namespace psps

#endif
