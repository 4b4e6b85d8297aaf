//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_SOLVER_H
#define PSPS_SOLVER_H

#include <cstdint>
#include <functional>
#include <vector>

#include "psps/ground.h"

namespace psps {

// Truth of one ground rule under a total assignment (index by atom id).
bool satisfiesRule(const GroundTheory& gt, const std::vector<char>& truth, const GroundRule& r);

// All generating and verifying rules plus the Horn-closure semantics:
// truth must already contain the closure.
bool satisfiesCore(const GroundTheory& gt, const std::vector<char>& truth);

// Least fixpoint of the Horn rules starting from truth; returns the
// extended assignment.
std::vector<char> hornClosure(const GroundTheory& gt, std::vector<char> truth);

struct SolverStats {
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
  std::int64_t conflicts = 0;
  std::int64_t backtracks = 0;
  std::int64_t verifications = 0;
  std::int64_t models = 0;
  double seconds = 0;
};

// Either a two-way atom branch (true first) or a multi-way branch over
// the unassigned members of a truth-forced c-atom.
struct BranchPlan {
  bool isCatom = false;
  int atom = -1;   // atom id
  int catom = -1;  // c-atom pool id
  // Each completion assigns every unassigned member; lexicographic in
  // member-id order, true before false.
  std::vector<std::vector<std::pair<int, bool>>> completions;
};

// Backtracking search with counter-based unit propagation, weighted
// branching and per-leaf Horn closure verification. Deterministic.
class Solver {
 public:
  explicit Solver(const GroundTheory& gt);

  // Enumerates models (true atom ids, ascending, closure included) until
  // the callback returns false or the space is exhausted. Returns the
  // number of models found.
  std::int64_t solve(const std::function<bool(const std::vector<int>&)>& onModel);

  const SolverStats& stats() const { return stats_; }

  // Testing hooks: manual propagation-level control.
  bool propagate();                 // false on conflict
  bool assume(int atom, bool val);  // assign + propagate; false on conflict
  BranchPlan chooseBranch();

 private:
  struct Occ {
    int rule;
    bool cons;
    int lit;
  };
  struct RCnt {
    int anteTrue = 0, anteFalse = 0, consTrue = 0, consFalse = 0;
  };
  struct CState {
    int ct = 0, cf = 0;
    signed char forcedV = 0; // by rule context
    signed char eff = 0;     // cached effective truth
  };
  struct Pending {
    bool isCatom;
    int id;
    signed char v;
  };
  struct Event {
    bool isCatom;
    int id;
  };

  signed char litVal(const GLit& l) const;
  void litDelta(int ri, bool cons, signed char oldv, signed char newv);
  bool checkRule(int ri);
  bool applyAtom(int a, signed char v);
  bool applyCatomForce(int cid, signed char v);
  bool updateCatom(int cid, bool duringUndo);
  void undoTo(std::size_t mark);
  bool atLeaf() const;
  bool emitLeaf(const std::function<bool(const std::vector<int>&)>& onModel, bool& stop);
  bool search(const std::function<bool(const std::vector<int>&)>& onModel, bool& stop);
  void computeWeights(std::vector<double>& wa) const;

  const GroundTheory& gt_;
  std::vector<const GroundRule*> prules_; // propagating rules
  std::vector<RCnt> rcnt_;
  std::vector<CState> cstate_;
  std::vector<signed char> val_;
  std::vector<std::vector<Occ>> atomOcc_;
  std::vector<std::vector<int>> atomCatoms_;
  std::vector<std::vector<Occ>> catomOcc_;
  std::vector<int> branchable_;
  std::vector<Pending> queue_;
  std::vector<Event> trail_;
  SolverStats stats_;
  bool init_ = false;
};

} // namespace psps

#endif
