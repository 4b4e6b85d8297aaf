//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace psps {

bool satisfiesRule(const GroundTheory& gt, const std::vector<char>& truth, const GroundRule& r) {
  auto litTrue = [&](const GLit& l) {
    if (!l.isCatom) return truth[static_cast<std::size_t>(l.id)] != 0;
    const GroundCAtom& c = gt.catoms[static_cast<std::size_t>(l.id)];
    int n = 0;
    for (int m : c.members)
      if (truth[static_cast<std::size_t>(m)]) ++n;
    return c.lo <= n && n <= c.hi;
  };
  for (const auto& l : r.ante)
    if (!litTrue(l)) return true;
  for (const auto& l : r.cons)
    if (litTrue(l)) return true;
  return false;
}

std::vector<char> hornClosure(const GroundTheory& gt, std::vector<char> truth) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& h : gt.horn) {
      if (truth[static_cast<std::size_t>(h.head)]) continue;
      bool fire = true;
      for (int b : h.body)
        if (!truth[static_cast<std::size_t>(b)]) {
          fire = false;
          break;
        }
      if (fire) {
        truth[static_cast<std::size_t>(h.head)] = 1;
        changed = true;
      }
    }
  }
  return truth;
}

bool satisfiesCore(const GroundTheory& gt, const std::vector<char>& truth) {
  for (const auto& r : gt.rules)
    if (!satisfiesRule(gt, truth, r)) return false;
  for (const auto& r : gt.vrules)
    if (!satisfiesRule(gt, truth, r)) return false;
  return true;
}

Solver::Solver(const GroundTheory& gt) : gt_(gt) {
  std::size_t n = gt.atoms.size();
  val_.assign(n, 0);
  atomOcc_.resize(n);
  atomCatoms_.resize(n);
  catomOcc_.resize(gt.catoms.size());
  cstate_.resize(gt.catoms.size());

  for (const auto& r : gt.rules) prules_.push_back(&r);
  for (const auto& r : gt.vrules) {
    bool pure = true;
    auto closureIn = [&](const GLit& l) {
      if (!l.isCatom) return gt.closureAtom[static_cast<std::size_t>(l.id)];
      for (int m : gt.catoms[static_cast<std::size_t>(l.id)].members)
        if (gt.closureAtom[static_cast<std::size_t>(m)]) return true;
      return false;
    };
    for (const auto& l : r.ante)
      if (closureIn(l)) pure = false;
    for (const auto& l : r.cons)
      if (closureIn(l)) pure = false;
    if (pure) prules_.push_back(&r);
  }
  rcnt_.resize(prules_.size());

  std::vector<char> inCatom(gt.catoms.size(), 0);
  for (std::size_t ri = 0; ri < prules_.size(); ++ri) {
    const GroundRule& r = *prules_[ri];
    for (int side = 0; side < 2; ++side) {
      const auto& lits = side ? r.cons : r.ante;
      for (std::size_t li = 0; li < lits.size(); ++li) {
        const GLit& l = lits[li];
        Occ occ{static_cast<int>(ri), side == 1, static_cast<int>(li)};
        if (l.isCatom) {
          catomOcc_[static_cast<std::size_t>(l.id)].push_back(occ);
          inCatom[static_cast<std::size_t>(l.id)] = 1;
        } else {
          atomOcc_[static_cast<std::size_t>(l.id)].push_back(occ);
        }
      }
    }
  }
  for (std::size_t ci = 0; ci < gt.catoms.size(); ++ci) {
    if (catomOcc_[ci].empty()) continue;
    for (int m : gt.catoms[ci].members)
      atomCatoms_[static_cast<std::size_t>(m)].push_back(static_cast<int>(ci));
    // Degenerate pool entries can be decided before any assignment.
    const GroundCAtom& c = gt.catoms[ci];
    int k = static_cast<int>(c.members.size());
    signed char eff = 0;
    if (c.lo <= 0 && k <= c.hi) eff = 1;
    else if (k < c.lo || c.hi < 0) eff = -1;
    if (eff != 0) {
      cstate_[ci].eff = eff;
      for (const auto& o : catomOcc_[ci]) litDelta(o.rule, o.cons, 0, eff);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (gt.forced[a] != Forced::None || gt.closureAtom[a]) continue;
    branchable_.push_back(static_cast<int>(a));
  }
}

signed char Solver::litVal(const GLit& l) const {
  if (!l.isCatom) return val_[static_cast<std::size_t>(l.id)];
  return cstate_[static_cast<std::size_t>(l.id)].eff;
}

void Solver::litDelta(int ri, bool cons, signed char oldv, signed char newv) {
  RCnt& c = rcnt_[static_cast<std::size_t>(ri)];
  int* t = cons ? &c.consTrue : &c.anteTrue;
  int* f = cons ? &c.consFalse : &c.anteFalse;
  if (oldv > 0) --*t;
  else if (oldv < 0) --*f;
  if (newv > 0) ++*t;
  else if (newv < 0) ++*f;
}

// Scans a rule after a counter change; may enqueue unit assignments.
// Returns false on conflict.
bool Solver::checkRule(int ri) {
  const GroundRule& r = *prules_[static_cast<std::size_t>(ri)];
  const RCnt& c = rcnt_[static_cast<std::size_t>(ri)];
  if (c.anteFalse > 0 || c.consTrue > 0) return true; // satisfied
  int unassigned = (static_cast<int>(r.ante.size()) - c.anteTrue) +
                   (static_cast<int>(r.cons.size()) - c.consFalse);
  if (unassigned == 0) {
    ++stats_.conflicts;
    return false;
  }
  if (unassigned > 1) return true;
  for (const auto& l : r.ante)
    if (litVal(l) == 0) {
      queue_.push_back(Pending{l.isCatom, l.id, -1});
      return true;
    }
  for (const auto& l : r.cons)
    if (litVal(l) == 0) {
      queue_.push_back(Pending{l.isCatom, l.id, 1});
      return true;
    }
  return true;
}

bool Solver::updateCatom(int cid, bool duringUndo) {
  CState& s = cstate_[static_cast<std::size_t>(cid)];
  const GroundCAtom& c = gt_.catoms[static_cast<std::size_t>(cid)];
  int k = static_cast<int>(c.members.size());
  bool defTrue = s.ct >= c.lo && k - s.cf <= c.hi;
  bool defFalse = s.ct > c.hi || k - s.cf < c.lo;
  signed char eff = defTrue ? 1 : (defFalse ? static_cast<signed char>(-1) : s.forcedV);
  // Keep the rule counters consistent with eff before any conflict exit;
  // undo rolls back whole occurrence lists and relies on that.
  bool effChanged = eff != s.eff;
  if (effChanged) {
    signed char old = s.eff;
    s.eff = eff;
    for (const auto& o : catomOcc_[static_cast<std::size_t>(cid)])
      litDelta(o.rule, o.cons, old, eff);
  }
  if (duringUndo) return true;
  if ((defTrue && s.forcedV < 0) || (defFalse && s.forcedV > 0)) {
    ++stats_.conflicts;
    return false;
  }
  if (effChanged)
    for (const auto& o : catomOcc_[static_cast<std::size_t>(cid)])
      if (!checkRule(o.rule)) return false;
  if (s.forcedV == 0) return true;
  // A truth-forced c-atom pins its remaining members at the counter
  // extremes.
  int rest = k - s.ct - s.cf;
  if (rest == 0) return true;
  auto pinRest = [&](signed char v) {
    for (int m : c.members)
      if (val_[static_cast<std::size_t>(m)] == 0) queue_.push_back(Pending{false, m, v});
  };
  if (s.forcedV > 0) {
    if (s.ct == c.hi) pinRest(-1);
    else if (k - s.cf == c.lo) pinRest(1);
  } else {
    // Must violate the window: only one direction may remain possible.
    if (s.ct >= c.lo) { // cannot undershoot; must exceed hi
      if (k - s.cf == c.hi + 1) pinRest(1);
    } else if (k - s.cf <= c.hi) { // cannot overshoot; must undershoot
      if (s.ct == c.lo - 1) pinRest(-1);
    }
  }
  return true;
}

bool Solver::applyAtom(int a, signed char v) {
  signed char& cur = val_[static_cast<std::size_t>(a)];
  if (cur != 0) {
    if (cur == v) return true;
    ++stats_.conflicts;
    return false;
  }
  cur = v;
  trail_.push_back(Event{false, a});
  ++stats_.propagations;
  // Counter updates must all land before a conflict return so that undo,
  // which walks whole occurrence lists, restores a consistent state.
  for (const auto& o : atomOcc_[static_cast<std::size_t>(a)]) litDelta(o.rule, o.cons, 0, v);
  for (int cid : atomCatoms_[static_cast<std::size_t>(a)]) {
    CState& s = cstate_[static_cast<std::size_t>(cid)];
    if (v > 0) ++s.ct;
    else ++s.cf;
  }
  for (const auto& o : atomOcc_[static_cast<std::size_t>(a)])
    if (!checkRule(o.rule)) return false;
  for (int cid : atomCatoms_[static_cast<std::size_t>(a)])
    if (!updateCatom(cid, false)) return false;
  return true;
}

bool Solver::applyCatomForce(int cid, signed char v) {
  CState& s = cstate_[static_cast<std::size_t>(cid)];
  if (s.eff == v) return true;
  if (s.eff == -v || s.forcedV == -v) {
    ++stats_.conflicts;
    return false;
  }
  if (s.forcedV == v) return true;
  s.forcedV = v;
  trail_.push_back(Event{true, cid});
  return updateCatom(cid, false);
}

bool Solver::propagate() {
  if (!init_) {
    init_ = true;
    for (std::size_t ri = 0; ri < prules_.size(); ++ri)
      if (!checkRule(static_cast<int>(ri))) {
        queue_.clear();
        return false;
      }
  }
  while (!queue_.empty()) {
    Pending p = queue_.back();
    queue_.pop_back();
    bool ok = p.isCatom ? applyCatomForce(p.id, p.v) : applyAtom(p.id, p.v);
    if (!ok) {
      queue_.clear();
      return false;
    }
  }
  return true;
}

bool Solver::assume(int atom, bool v) {
  queue_.push_back(Pending{false, atom, static_cast<signed char>(v ? 1 : -1)});
  return propagate();
}

void Solver::undoTo(std::size_t mark) {
  while (trail_.size() > mark) {
    Event e = trail_.back();
    trail_.pop_back();
    if (!e.isCatom) {
      int a = e.id;
      signed char v = val_[static_cast<std::size_t>(a)];
      val_[static_cast<std::size_t>(a)] = 0;
      for (const auto& o : atomOcc_[static_cast<std::size_t>(a)]) litDelta(o.rule, o.cons, v, 0);
      for (int cid : atomCatoms_[static_cast<std::size_t>(a)]) {
        CState& s = cstate_[static_cast<std::size_t>(cid)];
        if (v > 0) --s.ct;
        else --s.cf;
        updateCatom(cid, true);
      }
    } else {
      cstate_[static_cast<std::size_t>(e.id)].forcedV = 0;
      updateCatom(e.id, true);
    }
  }
}

bool Solver::atLeaf() const {
  for (int a : branchable_)
    if (val_[static_cast<std::size_t>(a)] == 0) return false;
  return true;
}

void Solver::computeWeights(std::vector<double>& wa) const {
  wa.assign(gt_.atoms.size(), 0.0);
  for (std::size_t ri = 0; ri < prules_.size(); ++ri) {
    const GroundRule& r = *prules_[ri];
    const RCnt& c = rcnt_[ri];
    if (c.anteFalse > 0 || c.consTrue > 0) continue;
    int u = 0;
    for (const auto& l : r.ante)
      if (litVal(l) == 0) ++u;
    for (const auto& l : r.cons)
      if (litVal(l) == 0) ++u;
    if (u == 0) continue;
    double w = std::ldexp(1.0, 16 - std::min(u, 32));
    auto credit = [&](const GLit& l) {
      if (litVal(l) != 0) return;
      if (!l.isCatom) {
        wa[static_cast<std::size_t>(l.id)] += w;
        return;
      }
      for (int m : gt_.catoms[static_cast<std::size_t>(l.id)].members)
        if (val_[static_cast<std::size_t>(m)] == 0) wa[static_cast<std::size_t>(m)] += w;
    };
    for (const auto& l : r.ante) credit(l);
    for (const auto& l : r.cons) credit(l);
  }
}

BranchPlan Solver::chooseBranch() {
  std::vector<double> wa;
  computeWeights(wa);

  BranchPlan best;
  double bestScore = -1.0;
  // Multi-way c-atom branching: a truth-forced c-atom is eligible when it
  // has no more consistent completions than unassigned members.
  for (std::size_t ci = 0; ci < gt_.catoms.size(); ++ci) {
    if (catomOcc_[ci].empty()) continue;
    const CState& s = cstate_[ci];
    if (s.eff == 0) continue;
    const GroundCAtom& c = gt_.catoms[ci];
    std::vector<int> unassigned;
    for (int m : c.members)
      if (val_[static_cast<std::size_t>(m)] == 0) unassigned.push_back(m);
    if (unassigned.empty()) continue;
    // Completions in lexicographic member order, true before false.
    std::vector<std::vector<std::pair<int, bool>>> comps;
    std::vector<std::pair<int, bool>> cur;
    bool overflow = false;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int ct) {
      if (overflow) return;
      int remaining = static_cast<int>(unassigned.size() - i);
      int lo = ct, hi = ct + remaining; // reachable final counts
      bool canTrue = std::max(lo, c.lo) <= std::min(hi, c.hi);
      bool canFalse = lo < c.lo || hi > c.hi;
      if (s.eff > 0 ? !canTrue : !canFalse) return;
      if (i == unassigned.size()) {
        bool inWindow = c.lo <= ct && ct <= c.hi;
        if ((s.eff > 0) == inWindow) {
          comps.push_back(cur);
          if (comps.size() > unassigned.size()) overflow = true;
        }
        return;
      }
      cur.emplace_back(unassigned[i], true);
      rec(i + 1, ct + 1);
      cur.back().second = false;
      rec(i + 1, ct);
      cur.pop_back();
    };
    rec(0, s.ct);
    if (overflow || comps.empty()) continue;
    double score = 0;
    for (int m : unassigned) score += wa[static_cast<std::size_t>(m)];
    if (score > bestScore + 1e-12) {
      bestScore = score;
      best = BranchPlan{};
      best.isCatom = true;
      best.catom = static_cast<int>(ci);
      best.completions = std::move(comps);
    }
  }
  if (best.isCatom) return best;

  int bestAtom = -1;
  bestScore = -1.0;
  for (int a : branchable_) {
    if (val_[static_cast<std::size_t>(a)] != 0) continue;
    double sc = wa[static_cast<std::size_t>(a)];
    if (sc > bestScore + 1e-12) {
      bestScore = sc;
      bestAtom = a;
    }
  }
  best.isCatom = false;
  best.atom = bestAtom;
  return best;
}

bool Solver::emitLeaf(const std::function<bool(const std::vector<int>&)>& onModel, bool& stop) {
  std::vector<char> truth(gt_.atoms.size(), 0);
  for (std::size_t a = 0; a < gt_.atoms.size(); ++a)
    truth[a] = (gt_.forced[a] == Forced::True || val_[a] > 0) ? 1 : 0;
  truth = hornClosure(gt_, truth);
  ++stats_.verifications;
  for (const auto& r : gt_.vrules)
    if (!satisfiesRule(gt_, truth, r)) return false;
  std::vector<int> model;
  for (std::size_t a = 0; a < gt_.atoms.size(); ++a)
    if (truth[a]) model.push_back(static_cast<int>(a));
  ++stats_.models;
  if (!onModel(model)) stop = true;
  return true;
}

bool Solver::search(const std::function<bool(const std::vector<int>&)>& onModel, bool& stop) {
  if (atLeaf()) {
    emitLeaf(onModel, stop);
    return true;
  }
  BranchPlan plan = chooseBranch();
  if (!plan.isCatom) {
    if (plan.atom < 0) return true; // nothing left but unconstrained closure atoms
    for (signed char v : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
      ++stats_.decisions;
      std::size_t mark = trail_.size();
      queue_.push_back(Pending{false, plan.atom, v});
      if (propagate()) search(onModel, stop);
      undoTo(mark);
      ++stats_.backtracks;
      if (stop) return true;
    }
    return true;
  }
  for (const auto& comp : plan.completions) {
    ++stats_.decisions;
    std::size_t mark = trail_.size();
    for (const auto& [m, v] : comp)
      queue_.push_back(Pending{false, m, static_cast<signed char>(v ? 1 : -1)});
    if (propagate()) search(onModel, stop);
    undoTo(mark);
    ++stats_.backtracks;
    if (stop) return true;
  }
  return true;
}

std::int64_t Solver::solve(const std::function<bool(const std::vector<int>&)>& onModel) {
  auto t0 = std::chrono::steady_clock::now();
  stats_ = SolverStats{};
  bool stop = false;
  // Initial propagation of units already present in the core.
  if (propagate()) search(onModel, stop);
  undoTo(0);
  stats_.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats_.models;
}

} // namespace psps
