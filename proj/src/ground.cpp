//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/ground.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "psps/parser.h"

namespace psps {

namespace {

void collectConsts(const Term& t, std::set<Term>& out) {
  if (t.isConst()) out.insert(t);
  if (t.kind == TermKind::Expr)
    for (const auto& s : t.sub) collectConsts(s, out);
}

void collectConsts(const Atom& a, std::set<Term>& out) {
  for (const auto& t : a.args) collectConsts(t, out);
}

} // namespace

std::vector<Term> herbrandUniverse(const DataProgramPair& pair) {
  std::set<Term> consts;
  for (const auto& a : pair.data) collectConsts(a, consts);
  for (const auto& [name, v] : pair.constants) consts.insert(v);
  for (const auto& r : pair.rules) {
    auto doElem = [&](const Elem& e) {
      if (std::holds_alternative<Atom>(e)) {
        collectConsts(std::get<Atom>(e), consts);
      } else {
        const CAtom& c = std::get<CAtom>(e);
        if (c.lower) collectConsts(*c.lower, consts);
        if (c.upper) collectConsts(*c.upper, consts);
        for (const auto& d : c.defs) {
          collectConsts(d.templ, consts);
          for (const auto& cd : d.conds) collectConsts(cd, consts);
        }
      }
    };
    for (const auto& e : r.ante) doElem(e);
    for (const auto& e : r.cons) doElem(e);
  }
  std::vector<Term> hu;
  for (const auto& t : consts)
    if (t.kind == TermKind::Int) hu.push_back(t);
  for (const auto& t : consts)
    if (t.kind == TermKind::Sym) hu.push_back(t);
  std::sort(hu.begin(), hu.end(), [](const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind == TermKind::Int;
    if (a.kind == TermKind::Int) return a.value < b.value;
    return a.name < b.name;
  });
  return hu;
}

bool evalPredefined(const Atom& a) {
  auto isInt = [](const Term& t) { return t.kind == TermKind::Int; };
  if (isComparisonPred(a.pred)) {
    const Term& l = a.args[0];
    const Term& r = a.args[1];
    if (a.pred == "=") return l == r;
    if (a.pred == "!=") return !(l == r);
    // Total order: integers by value before symbols lexicographic.
    int c;
    if (isInt(l) && isInt(r)) c = l.value < r.value ? -1 : (l.value > r.value ? 1 : 0);
    else if (isInt(l)) c = -1;
    else if (isInt(r)) c = 1;
    else c = l.name.compare(r.name) < 0 ? -1 : (l.name == r.name ? 0 : 1);
    if (a.pred == "<") return c < 0;
    if (a.pred == "<=") return c <= 0;
    if (a.pred == ">") return c > 0;
    return c >= 0;
  }
  // Defining arithmetic relation op(l, r, result).
  const Term& l = a.args[0];
  const Term& r = a.args[1];
  const Term& res = a.args[2];
  if (!isInt(l) || !isInt(r) || !isInt(res)) return false;
  std::int64_t x = l.value, y = r.value, z = 0;
  bool ovf = false;
  if (a.pred == "+") ovf = __builtin_add_overflow(x, y, &z);
  else if (a.pred == "-") ovf = __builtin_sub_overflow(x, y, &z);
  else if (a.pred == "*") ovf = __builtin_mul_overflow(x, y, &z);
  else if (a.pred == "/") {
    if (y == 0) return false;
    if (x == INT64_MIN && y == -1) ovf = true;
    else z = x / y;
  } else { // mod
    if (y == 0) return false;
    if (x == INT64_MIN && y == -1) ovf = true;
    else z = x % y;
  }
  if (ovf) throw Error(Errc::Overflow, "arithmetic overflow in " + printAtom(a));
  return z == res.value;
}

int GroundTheory::intern(const Atom& a) {
  std::string key = printAtom(a);
  auto it = atomIndex.find(key);
  if (it != atomIndex.end()) return it->second;
  int id = static_cast<int>(atoms.size());
  atomIndex.emplace(std::move(key), id);
  atoms.push_back(a);
  atomText.push_back(printAtom(a));
  forced.push_back(Forced::None);
  closureAtom.push_back(false);
  return id;
}

int GroundTheory::internCatom(GroundCAtom c) {
  std::string key = std::to_string(c.lo) + " " + std::to_string(c.hi);
  for (int m : c.members) key += " " + std::to_string(m);
  auto it = catomIndex.find(key);
  if (it != catomIndex.end()) return it->second;
  int id = static_cast<int>(catoms.size());
  catomIndex.emplace(std::move(key), id);
  catoms.push_back(std::move(c));
  return id;
}

std::string GroundTheory::printLit(const GLit& l) const {
  if (!l.isCatom) return atomText[static_cast<std::size_t>(l.id)];
  const GroundCAtom& c = catoms[static_cast<std::size_t>(l.id)];
  std::string s = std::to_string(c.lo) + " { ";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) s += "; ";
    s += atomText[static_cast<std::size_t>(c.members[i])];
  }
  return s + " } " + std::to_string(c.hi);
}

std::string GroundTheory::printGroundRule(const GroundRule& r) const {
  std::string s;
  if (r.ante.empty()) {
    s = "true";
  } else {
    for (std::size_t i = 0; i < r.ante.size(); ++i) {
      if (i) s += ", ";
      s += printLit(r.ante[i]);
    }
  }
  s += " -> ";
  if (r.cons.empty()) {
    s += "false";
  } else {
    for (std::size_t i = 0; i < r.cons.size(); ++i) {
      if (i) s += " | ";
      s += printLit(r.cons[i]);
    }
  }
  return s + ".";
}

// ---------------------------------------------------------------------------
// Grounding

namespace {

// Evaluation of ground c-atoms and rule instances produces one of three
// shapes; Val carries the interned c-atom index when Catom.
enum class GShape { Bot, Top, Catom };

struct Subst {
  std::map<std::string, Term> map;
  const Term* find(const std::string& v) const {
    auto it = map.find(v);
    return it == map.end() ? nullptr : &it->second;
  }
};

Term substTerm(const Term& t, const Subst& s) {
  if (t.kind == TermKind::Var) {
    const Term* b = s.find(t.name);
    return b ? *b : t;
  }
  return t; // desugared rules have no Expr terms
}

Atom substAtom(const Atom& a, const Subst& s) {
  Atom out = a;
  for (auto& t : out.args) t = substTerm(t, s);
  return out;
}

bool atomGroundUnder(const Atom& a, const Subst& s) {
  for (const auto& t : a.args) {
    if (t.kind == TermKind::Var && !s.find(t.name)) return false;
    if (t.kind == TermKind::Expr) return false;
  }
  return true;
}

class Grounder {
 public:
  explicit Grounder(const DataProgramPair& pair) : pair_(pair) {
    hu_ = herbrandUniverse(pair);
    for (const auto& t : hu_) huSet_.insert(t);
    for (const auto& a : pair.data) dataSet_.insert(a);
  }

  GroundTheory run() {
    for (const auto& r : pair_.rules) groundRule(r);
    for (std::size_t i = 0; i < gt_.atoms.size(); ++i)
      gt_.closureAtom[i] = pair_.hornHeads.count(gt_.atoms[i].pred) != 0;
    return std::move(gt_);
  }

 private:
  // Variables bound inside set definitions do not take part in the
  // per-rule substitution enumeration.
  static std::vector<std::string> freeRuleVars(const Rule& r) {
    std::set<std::string> bound;
    auto boundOf = [&](const Elem& e) {
      if (!std::holds_alternative<CAtom>(e)) return;
      for (const auto& d : std::get<CAtom>(e).defs)
        bound.insert(d.bound.begin(), d.bound.end());
    };
    for (const auto& e : r.ante) boundOf(e);
    for (const auto& e : r.cons) boundOf(e);
    std::vector<std::string> out;
    for (const auto& v : ruleVars(r))
      if (!bound.count(v)) out.push_back(v);
    return out;
  }

  bool holdsNow(const Atom& a, const Subst& s) {
    Atom g = substAtom(a, s);
    if (g.cls == PredClass::Predefined) return evalPredefined(g);
    if (g.cls == PredClass::Data) return dataSet_.count(g) != 0;
    return true; // program atoms never prune
  }

  // True when every argument of the ground atom lies in the Herbrand
  // universe; atoms outside the base are false in every model.
  bool inBase(const Atom& g) const {
    for (const auto& t : g.args)
      if (!huSet_.count(t)) return false;
    return true;
  }

  // If some predefined antecedent conjunct determines var functionally,
  // return its only admissible value (empty vector when the conjunct is
  // already falsified). Desugar-synthesized variables may take any integer
  // value; ordinary variables range over the universe only.
  bool functionalValue(const std::vector<const Atom*>& preds, const Subst& s,
                       const std::string& var, bool huOnly, std::vector<Term>& out) {
    for (const Atom* a : preds) {
      if (isArithPred(a->pred) && a->args[2].kind == TermKind::Var && a->args[2].name == var) {
        Term l = substTerm(a->args[0], s);
        Term r = substTerm(a->args[1], s);
        if (!l.isConst() || !r.isConst()) continue;
        if (l.kind != TermKind::Int || r.kind != TermKind::Int) return true; // relation false
        Atom probe = *a;
        // Find the unique integer z with op(l,r,z); derive it directly.
        std::int64_t z = 0;
        bool ovf = false;
        std::int64_t x = l.value, y = r.value;
        if (a->pred == "+") ovf = __builtin_add_overflow(x, y, &z);
        else if (a->pred == "-") ovf = __builtin_sub_overflow(x, y, &z);
        else if (a->pred == "*") ovf = __builtin_mul_overflow(x, y, &z);
        else if (a->pred == "/") {
          if (y == 0) return true;
          if (x == INT64_MIN && y == -1) ovf = true;
          else z = x / y;
        } else {
          if (y == 0) return true;
          if (x == INT64_MIN && y == -1) ovf = true;
          else z = x % y;
        }
        if (ovf) throw Error(Errc::Overflow, "arithmetic overflow in " + printAtom(probe));
        Term zt = Term::integer(z);
        if (huOnly && !huSet_.count(zt)) return true; // value outside HU: no instance
        out.push_back(zt);
        return true;
      }
      if (a->pred == "=" && a->args.size() == 2) {
        for (int side = 0; side < 2; ++side) {
          const Term& vt = a->args[static_cast<std::size_t>(side)];
          const Term& ot = a->args[static_cast<std::size_t>(1 - side)];
          if (vt.kind == TermKind::Var && vt.name == var) {
            Term g = substTerm(ot, s);
            if (!g.isConst()) continue;
            if (huOnly && !huSet_.count(g)) return true;
            out.push_back(g);
            return true;
          }
        }
      }
    }
    return false;
  }

  void groundRule(const Rule& r) {
    std::vector<std::string> vars = freeRuleVars(r);
    // Antecedent conjuncts usable for early pruning.
    std::vector<const Atom*> checkable;
    std::vector<const Atom*> predef;
    for (const auto& e : r.ante) {
      if (!std::holds_alternative<Atom>(e)) continue;
      const Atom& a = std::get<Atom>(e);
      if (a.cls == PredClass::Data || a.cls == PredClass::Predefined) checkable.push_back(&a);
      if (a.cls == PredClass::Predefined) predef.push_back(&a);
    }
    Subst sub;
    std::vector<char> checked(checkable.size(), 0);
    // Synthesized variables are free of the universe only while they stay
    // intermediate; once one names an argument of a program or data atom it
    // ranges over the universe like any other variable.
    std::set<std::string> synth(r.synthVars.begin(), r.synthVars.end());
    std::vector<std::string> anchored;
    auto anchor = [&](const Elem& e) {
      if (std::holds_alternative<Atom>(e)) {
        const Atom& a = std::get<Atom>(e);
        if (a.cls != PredClass::Predefined) collectVars(a, anchored);
      } else {
        for (const auto& d : std::get<CAtom>(e).defs) {
          collectVars(d.templ, anchored);
          for (const auto& cd : d.conds)
            if (cd.cls != PredClass::Predefined) collectVars(cd, anchored);
        }
      }
    };
    for (const auto& e : r.ante) anchor(e);
    for (const auto& e : r.cons) anchor(e);
    for (const auto& v : anchored) synth.erase(v);
    dfs(r, vars, 0, sub, checkable, predef, checked, synth);
  }

  void dfs(const Rule& r, const std::vector<std::string>& vars, std::size_t i, Subst& sub,
           const std::vector<const Atom*>& checkable, const std::vector<const Atom*>& predef,
           std::vector<char>& checked, const std::set<std::string>& synth) {
    // Evaluate every antecedent data/predefined conjunct that just became
    // ground; prune the whole subtree on failure.
    std::vector<std::size_t> nowChecked;
    bool ok = true;
    for (std::size_t c = 0; c < checkable.size(); ++c) {
      if (checked[c]) continue;
      if (!atomGroundUnder(*checkable[c], sub)) continue;
      checked[c] = 1;
      nowChecked.push_back(c);
      if (!holdsNow(*checkable[c], sub)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (i == vars.size()) {
        instantiate(r, sub);
      } else {
        const std::string& v = vars[i];
        std::vector<Term> domain;
        if (!functionalValue(predef, sub, v, synth.count(v) == 0, domain)) domain = hu_;
        for (const auto& c : domain) {
          sub.map[v] = c;
          dfs(r, vars, i + 1, sub, checkable, predef, checked, synth);
        }
        sub.map.erase(v);
      }
    }
    for (std::size_t c : nowChecked) checked[c] = 0;
  }

  // Grounds one c-atom under sub. Returns the shape; when Catom, *catomId
  // is the pooled index.
  GShape groundCAtom(const CAtom& c, const Subst& sub, int* catomId) {
    auto boundVal = [&](const Term& t, std::int64_t* out) -> GShape {
      Term g = substTerm(t, sub);
      if (g.kind != TermKind::Int || g.value < 0) return GShape::Bot;
      *out = g.value;
      return GShape::Top; // marker for "fine"
    };
    std::int64_t loV = 0, hiV = 0;
    bool haveLo = c.lower.has_value(), haveHi = c.upper.has_value();
    if (haveLo && boundVal(*c.lower, &loV) == GShape::Bot) return GShape::Bot;
    if (haveHi && boundVal(*c.upper, &hiV) == GShape::Bot) return GShape::Bot;

    std::set<int> members;
    for (const auto& d : c.defs) enumerateDef(d, sub, members);
    GroundCAtom g;
    g.members.assign(members.begin(), members.end());
    std::int64_t k = static_cast<std::int64_t>(g.members.size());
    std::int64_t lo = haveLo ? loV : 0;
    std::int64_t hi = haveHi ? std::min(hiV, k) : k;
    if (lo > k || hi < lo) return GShape::Bot;
    if (lo <= 0 && hi >= k) return GShape::Top;
    g.lo = static_cast<int>(lo);
    g.hi = static_cast<int>(hi);
    *catomId = gt_.internCatom(std::move(g));
    return GShape::Catom;
  }

  void enumerateDef(const SetDef& d, const Subst& outer, std::set<int>& members) {
    std::vector<std::string> vars;
    {
      std::set<std::string> bound(d.bound.begin(), d.bound.end());
      std::vector<std::string> occ;
      collectVars(d.templ, occ);
      for (const auto& cd : d.conds) collectVars(cd, occ);
      for (const auto& v : occ)
        if (bound.count(v)) vars.push_back(v);
    }
    std::vector<const Atom*> checkable;
    std::vector<const Atom*> predef;
    for (const auto& cd : d.conds) {
      checkable.push_back(&cd);
      if (cd.cls == PredClass::Predefined) predef.push_back(&cd);
    }
    Subst sub = outer;
    std::vector<char> checked(checkable.size(), 0);
    std::set<std::string> synth(d.synthBound.begin(), d.synthBound.end());
    std::vector<std::string> anchored;
    collectVars(d.templ, anchored);
    for (const auto& cd : d.conds)
      if (cd.cls != PredClass::Predefined) collectVars(cd, anchored);
    for (const auto& v : anchored) synth.erase(v);
    defDfs(d, vars, 0, sub, checkable, predef, checked, synth, members);
  }

  void defDfs(const SetDef& d, const std::vector<std::string>& vars, std::size_t i, Subst& sub,
              const std::vector<const Atom*>& checkable, const std::vector<const Atom*>& predef,
              std::vector<char>& checked, const std::set<std::string>& synth,
              std::set<int>& members) {
    std::vector<std::size_t> nowChecked;
    bool ok = true;
    for (std::size_t c = 0; c < checkable.size(); ++c) {
      if (checked[c]) continue;
      if (!atomGroundUnder(*checkable[c], sub)) continue;
      checked[c] = 1;
      nowChecked.push_back(c);
      Atom g = substAtom(*checkable[c], sub);
      bool holds = g.cls == PredClass::Predefined ? evalPredefined(g) : dataSet_.count(g) != 0;
      if (!holds) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (i == vars.size()) {
        Atom inst = substAtom(d.templ, sub);
        assert(inst.isGround());
        // Template instances outside the Herbrand base are false in every
        // model and never counted; they are not members.
        if (inBase(inst)) members.insert(gt_.intern(inst));
      } else {
        const std::string& v = vars[i];
        std::vector<Term> domain;
        if (!functionalValue(predef, sub, v, synth.count(v) == 0, domain)) domain = hu_;
        for (const auto& c : domain) {
          sub.map[v] = c;
          defDfs(d, vars, i + 1, sub, checkable, predef, checked, synth, members);
        }
        sub.map.erase(v);
      }
    }
    for (std::size_t c : nowChecked) checked[c] = 0;
  }

  void instantiate(const Rule& r, const Subst& sub) {
    if (r.flavor == Flavor::Horn) {
      instantiateHorn(r, sub);
      return;
    }
    GroundRule out;
    std::set<int> anteAtoms, consAtoms; // within-rule duplicate collapse
    for (const auto& e : r.ante) {
      if (std::holds_alternative<Atom>(e)) {
        Atom g = substAtom(std::get<Atom>(e), sub);
        if (g.cls == PredClass::Predefined) {
          if (!evalPredefined(g)) return; // false conjunct: drop rule
          continue;                       // true conjunct: drop it
        }
        if (g.cls == PredClass::Data) {
          if (!dataSet_.count(g)) return;
          continue;
        }
        if (!inBase(g)) return; // false conjunct: drop rule
        int id = gt_.intern(g);
        if (anteAtoms.insert(id).second) out.ante.push_back(GLit{false, id});
      } else {
        int cid = 0;
        GShape s = groundCAtom(std::get<CAtom>(e), sub, &cid);
        if (s == GShape::Bot) return;
        if (s == GShape::Top) continue;
        out.ante.push_back(GLit{true, cid});
      }
    }
    for (const auto& e : r.cons) {
      if (std::holds_alternative<Atom>(e)) {
        Atom g = substAtom(std::get<Atom>(e), sub);
        if (g.hasHole()) {
          expandEAtom(g, consAtoms, out.cons);
          continue;
        }
        if (g.cls == PredClass::Predefined) {
          if (evalPredefined(g)) return; // true disjunct: rule satisfied
          continue;                      // false disjunct: drop it
        }
        if (g.cls == PredClass::Data) {
          if (dataSet_.count(g)) return;
          continue;
        }
        if (!inBase(g)) continue; // false disjunct: drop it
        int id = gt_.intern(g);
        if (consAtoms.insert(id).second) out.cons.push_back(GLit{false, id});
      } else {
        int cid = 0;
        GShape s = groundCAtom(std::get<CAtom>(e), sub, &cid);
        if (s == GShape::Top) return;
        if (s == GShape::Bot) continue;
        out.cons.push_back(GLit{true, cid});
      }
    }
    // Order-insensitive duplicate detection across instances.
    std::string key = ruleKey(out);
    bool verifying = r.flavor == Flavor::Verifying;
    auto& seen = verifying ? seenV_ : seenG_;
    if (!seen.insert(key).second) return;
    (verifying ? gt_.vrules : gt_.rules).push_back(std::move(out));
  }

  void expandEAtom(const Atom& g, std::set<int>& consAtoms, std::vector<GLit>& cons) {
    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < g.args.size(); ++i)
      if (g.args[i].kind == TermKind::Hole) holes.push_back(i);
    std::vector<std::size_t> idx(holes.size(), 0);
    for (;;) {
      Atom inst = g;
      for (std::size_t h = 0; h < holes.size(); ++h) inst.args[holes[h]] = hu_[idx[h]];
      int id = gt_.intern(inst);
      if (consAtoms.insert(id).second) cons.push_back(GLit{false, id});
      std::size_t h = holes.size();
      while (h > 0) {
        --h;
        if (++idx[h] < hu_.size()) break;
        idx[h] = 0;
        if (h == 0) return;
      }
      if (holes.empty()) return;
    }
  }

  void instantiateHorn(const Rule& r, const Subst& sub) {
    HornRule out;
    std::set<int> bodyAtoms;
    for (const auto& e : r.ante) {
      const Atom& a = std::get<Atom>(e);
      Atom g = substAtom(a, sub);
      if (g.cls == PredClass::Predefined) {
        if (!evalPredefined(g)) return;
        continue;
      }
      if (g.cls == PredClass::Data) {
        if (!dataSet_.count(g)) return;
        continue;
      }
      if (!inBase(g)) return; // false body atom: rule never fires
      int id = gt_.intern(g);
      if (bodyAtoms.insert(id).second) out.body.push_back(id);
    }
    Atom head = substAtom(std::get<Atom>(r.cons[0]), sub);
    if (!inBase(head)) return; // head outside the base is never derivable
    out.head = gt_.intern(head);
    std::string key = std::to_string(out.head) + "<-";
    std::vector<int> sorted = out.body;
    std::sort(sorted.begin(), sorted.end());
    for (int b : sorted) key += " " + std::to_string(b);
    if (!seenH_.insert(key).second) return;
    gt_.horn.push_back(std::move(out));
  }

  std::string ruleKey(const GroundRule& r) const {
    auto side = [&](const std::vector<GLit>& lits) {
      std::vector<std::string> keys;
      for (const auto& l : lits)
        keys.push_back(l.isCatom ? "C" + std::to_string(l.id) : std::to_string(l.id));
      std::sort(keys.begin(), keys.end());
      std::string s;
      for (const auto& k : keys) s += k + " ";
      return s;
    };
    return side(r.ante) + "=>" + side(r.cons);
  }

  const DataProgramPair& pair_;
  std::vector<Term> hu_;
  std::set<Term> huSet_;
  std::set<Atom> dataSet_;
  std::set<std::string> seenG_, seenV_, seenH_;
  GroundTheory gt_;
};

} // namespace

GroundTheory groundPair(const DataProgramPair& pair) {
  if (!pair.validated)
    throw Error(Errc::BadParams, "pair must be validated before grounding");
  Grounder g(pair);
  return g.run();
}

// ---------------------------------------------------------------------------
// Simplification to the ground core

namespace {

class Simplifier {
 public:
  explicit Simplifier(GroundTheory& gt) : gt_(gt) {}

  void run() {
    aliveG_.assign(gt_.rules.size(), 1);
    aliveV_.assign(gt_.vrules.size(), 1);
    aliveH_.assign(gt_.horn.size(), 1);
    // A verifying rule free of closure atoms is an ordinary constraint.
    pureV_.assign(gt_.vrules.size(), 0);
    for (std::size_t i = 0; i < gt_.vrules.size(); ++i)
      pureV_[i] = !mentionsClosure(gt_.vrules[i]);
    do {
      changed_ = false;
      for (std::size_t i = 0; i < gt_.rules.size(); ++i)
        if (aliveG_[i]) step(gt_.rules[i], aliveG_[i], /*mayForce=*/true);
      for (std::size_t i = 0; i < gt_.vrules.size(); ++i)
        if (aliveV_[i]) step(gt_.vrules[i], aliveV_[i], /*mayForce=*/pureV_[i] != 0);
      for (std::size_t i = 0; i < gt_.horn.size(); ++i)
        if (aliveH_[i]) stepHorn(gt_.horn[i], aliveH_[i]);
    } while (changed_);
    compact();
  }

 private:
  bool mentionsClosure(const GroundRule& r) const {
    auto lit = [&](const GLit& l) -> bool {
      if (!l.isCatom) return gt_.closureAtom[static_cast<std::size_t>(l.id)];
      for (int m : gt_.catoms[static_cast<std::size_t>(l.id)].members)
        if (gt_.closureAtom[static_cast<std::size_t>(m)]) return true;
      return false;
    };
    for (const auto& l : r.ante)
      if (lit(l)) return true;
    for (const auto& l : r.cons)
      if (lit(l)) return true;
    return false;
  }

  void force(int id, Forced v) {
    Forced& f = gt_.forced[static_cast<std::size_t>(id)];
    if (f == v) return;
    if (f != Forced::None)
      throw Error(Errc::Inconsistent,
                  "atom " + gt_.atomText[static_cast<std::size_t>(id)] + " forced both ways");
    f = v;
    changed_ = true;
  }

  // Truth status of a c-atom under the current forced sets; may rewrite
  // the literal to a smaller pooled c-atom over unforced members.
  enum class CStat { True, False, Open };
  CStat evalCatomLit(GLit& l) {
    const GroundCAtom& c = gt_.catoms[static_cast<std::size_t>(l.id)];
    int ct = 0, cf = 0;
    for (int m : c.members) {
      Forced f = gt_.forced[static_cast<std::size_t>(m)];
      if (f == Forced::True) ++ct;
      else if (f == Forced::False) ++cf;
    }
    int k = static_cast<int>(c.members.size());
    if (ct > c.hi || k - cf < c.lo) return CStat::False;
    if (ct >= c.lo && k - cf <= c.hi) return CStat::True;
    if (ct == 0 && cf == 0) return CStat::Open;
    GroundCAtom g;
    for (int m : c.members)
      if (gt_.forced[static_cast<std::size_t>(m)] == Forced::None) g.members.push_back(m);
    int k2 = static_cast<int>(g.members.size());
    int lo = std::max(0, c.lo - ct);
    int hi = std::min(c.hi - ct, k2);
    if (lo > k2 || hi < lo) return CStat::False;
    if (lo <= 0 && hi >= k2) return CStat::True;
    g.lo = lo;
    g.hi = hi;
    l.id = gt_.internCatom(std::move(g));
    changed_ = true;
    return CStat::Open;
  }

  void step(GroundRule& r, char& alive, bool mayForce) {
    std::vector<GLit> ante, cons;
    for (GLit l : r.ante) {
      if (!l.isCatom) {
        Forced f = gt_.forced[static_cast<std::size_t>(l.id)];
        if (f == Forced::True) { changed_ = true; continue; }
        if (f == Forced::False) { alive = 0; changed_ = true; return; }
        ante.push_back(l);
      } else {
        CStat s = evalCatomLit(l);
        if (s == CStat::True) { changed_ = true; continue; }
        if (s == CStat::False) { alive = 0; changed_ = true; return; }
        ante.push_back(l);
      }
    }
    for (GLit l : r.cons) {
      if (!l.isCatom) {
        Forced f = gt_.forced[static_cast<std::size_t>(l.id)];
        if (f == Forced::True) { alive = 0; changed_ = true; return; }
        if (f == Forced::False) { changed_ = true; continue; }
        cons.push_back(l);
      } else {
        CStat s = evalCatomLit(l);
        if (s == CStat::True) { alive = 0; changed_ = true; return; }
        if (s == CStat::False) { changed_ = true; continue; }
        cons.push_back(l);
      }
    }
    r.ante = std::move(ante);
    r.cons = std::move(cons);
    if (!mayForce) return;
    if (r.ante.empty() && r.cons.empty())
      throw Error(Errc::Inconsistent, "derived the empty rule");
    if (r.ante.empty() && r.cons.size() == 1) {
      GLit l = r.cons[0];
      if (!l.isCatom) {
        force(l.id, Forced::True);
        alive = 0;
        changed_ = true;
        return;
      }
      // A forced-true c-atom over unforced members determines them only
      // at the counter extremes.
      const GroundCAtom& c = gt_.catoms[static_cast<std::size_t>(l.id)];
      int k = static_cast<int>(c.members.size());
      if (c.lo == k) {
        for (int m : c.members) force(m, Forced::True);
        alive = 0;
        return;
      }
      if (c.hi == 0) {
        for (int m : c.members) force(m, Forced::False);
        alive = 0;
        return;
      }
    }
    if (r.cons.empty() && r.ante.size() == 1) {
      GLit l = r.ante[0];
      if (!l.isCatom) {
        force(l.id, Forced::False);
        alive = 0;
        changed_ = true;
        return;
      }
      // Forced-false c-atom: propagate when only one violation direction
      // remains possible and it pins every member.
      const GroundCAtom& c = gt_.catoms[static_cast<std::size_t>(l.id)];
      int k = static_cast<int>(c.members.size());
      if (c.lo == 0) { // count must exceed hi
        if (c.hi >= k) throw Error(Errc::Inconsistent, "unsatisfiable cardinality constraint");
        if (c.hi == k - 1) {
          for (int m : c.members) force(m, Forced::True);
          alive = 0;
          return;
        }
      } else if (c.hi >= k) { // count must fall below lo
        if (c.lo == 1) {
          for (int m : c.members) force(m, Forced::False);
          alive = 0;
          return;
        }
      }
    }
  }

  void stepHorn(HornRule& r, char& alive) {
    std::vector<int> body;
    for (int b : r.body) {
      Forced f = gt_.forced[static_cast<std::size_t>(b)];
      if (f == Forced::True) { changed_ = true; continue; }
      if (f == Forced::False) { alive = 0; changed_ = true; return; }
      body.push_back(b);
    }
    r.body = std::move(body);
  }

  void compact() {
    auto filter = [](auto& vec, const std::vector<char>& alive) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (!alive[i]) continue;
        if (w != i) vec[w] = std::move(vec[i]);
        ++w;
      }
      vec.resize(w);
    };
    filter(gt_.rules, aliveG_);
    filter(gt_.vrules, aliveV_);
    filter(gt_.horn, aliveH_);
  }

  GroundTheory& gt_;
  std::vector<char> aliveG_, aliveV_, aliveH_, pureV_;
  bool changed_ = false;
};

} // namespace

void simplifyToCore(GroundTheory& gt) {
  Simplifier s(gt);
  s.run();
}

// ---------------------------------------------------------------------------
// Canonical .gnd text form

namespace {

std::string gndLit(const GLit& l, const GroundTheory& gt) {
  if (!l.isCatom) return std::to_string(l.id);
  const GroundCAtom& c = gt.catoms[static_cast<std::size_t>(l.id)];
  std::string s = "c " + std::to_string(c.lo) + " " + std::to_string(c.hi) + " (";
  for (int m : c.members) s += " " + std::to_string(m);
  return s + " )";
}

std::string gndRule(const GroundRule& r, const GroundTheory& gt) {
  std::string s;
  for (std::size_t i = 0; i < r.ante.size(); ++i) {
    if (i) s += " ";
    s += gndLit(r.ante[i], gt);
  }
  s += r.ante.empty() ? "=>" : " =>";
  for (const auto& l : r.cons) s += " " + gndLit(l, gt);
  return s;
}

} // namespace

std::string writeGnd(const GroundTheory& gt) {
  std::ostringstream out;
  out << "gnd 1\n";
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    out << "a " << i << " " << gt.atomText[i] << "\n";
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.closureAtom[i]) out << "k " << i << "\n";
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.forced[i] == Forced::True) out << "t " << i << "\n";
  for (std::size_t i = 0; i < gt.atoms.size(); ++i)
    if (gt.forced[i] == Forced::False) out << "f " << i << "\n";
  for (const auto& r : gt.rules) out << "r " << gndRule(r, gt) << "\n";
  for (const auto& r : gt.vrules) out << "v " << gndRule(r, gt) << "\n";
  for (const auto& h : gt.horn) {
    out << "h " << h.head << " <-";
    for (int b : h.body) out << " " << b;
    out << "\n";
  }
  return out.str();
}

GroundTheory readGnd(const std::string& text, const std::string& filename) {
  GroundTheory gt;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  auto fail = [&](const std::string& msg) -> void {
    SourceSpan sp;
    sp.file = filename;
    sp.line = lineNo;
    throw Error(Errc::Parse, sp, msg);
  };
  auto checkAtom = [&](int id) {
    if (id < 0 || id >= static_cast<int>(gt.atoms.size())) fail("bad atom id");
    return id;
  };
  if (!std::getline(in, line) || line != "gnd 1") {
    lineNo = 1;
    fail("expected header 'gnd 1'");
  }
  lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "a") {
      int id;
      std::string rest;
      if (!(ls >> id)) fail("bad atom line");
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      if (id != static_cast<int>(gt.atoms.size())) fail("atom ids must be dense and ascending");
      if (rest.empty()) fail("missing atom text");
      std::vector<Rule> rs;
      try {
        rs = parseProgram(rest + ".", filename);
      } catch (const Error&) {
        fail("unparsable atom '" + rest + "'");
      }
      if (rs.size() != 1 || rs[0].cons.size() != 1 || !std::holds_alternative<Atom>(rs[0].cons[0]))
        fail("unparsable atom '" + rest + "'");
      gt.intern(std::get<Atom>(rs[0].cons[0]));
    } else if (tag == "k" || tag == "t" || tag == "f") {
      int id;
      if (!(ls >> id)) fail("bad id line");
      checkAtom(id);
      if (tag == "k") gt.closureAtom[static_cast<std::size_t>(id)] = true;
      else gt.forced[static_cast<std::size_t>(id)] = tag == "t" ? Forced::True : Forced::False;
    } else if (tag == "r" || tag == "v") {
      GroundRule r;
      bool inCons = false;
      std::string tok;
      while (ls >> tok) {
        if (tok == "=>") {
          if (inCons) fail("duplicate '=>'");
          inCons = true;
          continue;
        }
        GLit l;
        if (tok == "c") {
          GroundCAtom c;
          std::string paren;
          if (!(ls >> c.lo >> c.hi >> paren) || paren != "(") fail("bad c-atom");
          while (ls >> tok && tok != ")") c.members.push_back(checkAtom(std::stoi(tok)));
          if (tok != ")") fail("unterminated c-atom");
          l.isCatom = true;
          l.id = gt.internCatom(std::move(c));
        } else {
          try {
            l.id = checkAtom(std::stoi(tok));
          } catch (const std::invalid_argument&) {
            fail("bad literal '" + tok + "'");
          }
        }
        (inCons ? r.cons : r.ante).push_back(l);
      }
      if (!inCons) fail("rule without '=>'");
      (tag == "r" ? gt.rules : gt.vrules).push_back(std::move(r));
    } else if (tag == "h") {
      HornRule h;
      std::string arrow;
      if (!(ls >> h.head >> arrow) || arrow != "<-") fail("bad Horn line");
      checkAtom(h.head);
      int b;
      while (ls >> b) h.body.push_back(checkAtom(b));
      gt.horn.push_back(std::move(h));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  return gt;
}

} // namespace psps
