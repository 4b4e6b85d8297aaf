//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/ast.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace psps {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::Parse: return "E_PARSE";
    case Errc::EatomInBody: return "E_EATOM_IN_BODY";
    case Errc::HornHeadInG: return "E_HORN_HEAD_IN_G";
    case Errc::ProgramPredInSetcond: return "E_PROGRAM_PRED_IN_SETCOND";
    case Errc::ArityMismatch: return "E_ARITY_MISMATCH";
    case Errc::NongroundData: return "E_NONGROUND_DATA";
    case Errc::DataEatom: return "E_DATA_EATOM";
    case Errc::DuplicateConst: return "E_DUPLICATE_CONST";
    case Errc::BadBinding: return "E_BAD_BINDING";
    case Errc::Overflow: return "E_OVERFLOW";
    case Errc::Inconsistent: return "E_INCONSISTENT";
    case Errc::CatomPresent: return "E_CATOM_PRESENT";
    case Errc::HornPresent: return "E_HORN_PRESENT";
    case Errc::UnknownVar: return "E_UNKNOWN_VAR";
    case Errc::ModelMismatch: return "E_MODEL_MISMATCH";
    case Errc::NotPure: return "E_NOT_PURE";
    case Errc::BadParams: return "E_BAD_PARAMS";
    case Errc::TooLarge: return "E_TOO_LARGE";
    case Errc::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

const char* opName(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Mod: return "mod";
  }
  return "?";
}

Term Term::sym(std::string n) { Term t; t.kind = TermKind::Sym; t.name = std::move(n); return t; }
Term Term::integer(std::int64_t v) { Term t; t.kind = TermKind::Int; t.value = v; return t; }
Term Term::var(std::string n) { Term t; t.kind = TermKind::Var; t.name = std::move(n); return t; }
Term Term::hole() { Term t; t.kind = TermKind::Hole; return t; }
Term Term::expr(ArithOp o, Term lhs, Term rhs) {
  Term t;
  t.kind = TermKind::Expr;
  t.op = o;
  t.sub.push_back(std::move(lhs));
  t.sub.push_back(std::move(rhs));
  return t;
}

bool Term::operator==(const Term& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case TermKind::Sym:
    case TermKind::Var: return name == o.name;
    case TermKind::Int: return value == o.value;
    case TermKind::Hole: return true;
    case TermKind::Expr: return op == o.op && sub == o.sub;
  }
  return false;
}

bool Term::operator<(const Term& o) const {
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case TermKind::Sym:
    case TermKind::Var: return name < o.name;
    case TermKind::Int: return value < o.value;
    case TermKind::Hole: return false;
    case TermKind::Expr:
      return std::tie(op, sub) < std::tie(o.op, o.sub);
  }
  return false;
}

bool isComparisonPred(const std::string& p) {
  return p == "=" || p == "!=" || p == "<" || p == "<=" || p == ">" || p == ">=";
}
bool isArithPred(const std::string& p) {
  return p == "+" || p == "-" || p == "*" || p == "/" || p == "mod";
}
bool isPredefinedPred(const std::string& p) { return isComparisonPred(p) || isArithPred(p); }

bool Atom::hasHole() const {
  for (const auto& t : args)
    if (t.kind == TermKind::Hole) return true;
  return false;
}

bool Atom::isGround() const {
  for (const auto& t : args)
    if (!t.isConst()) return false;
  return true;
}

bool Atom::operator==(const Atom& o) const { return pred == o.pred && args == o.args; }
bool Atom::operator<(const Atom& o) const {
  return std::tie(pred, args) < std::tie(o.pred, o.args);
}

void collectVars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == TermKind::Var) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
  } else if (t.kind == TermKind::Expr) {
    for (const auto& s : t.sub) collectVars(s, out);
  }
}

void collectVars(const Atom& a, std::vector<std::string>& out) {
  for (const auto& t : a.args) collectVars(t, out);
}

static void collectVars(const Elem& e, std::vector<std::string>& out) {
  if (std::holds_alternative<Atom>(e)) {
    collectVars(std::get<Atom>(e), out);
  } else {
    const CAtom& c = std::get<CAtom>(e);
    if (c.lower) collectVars(*c.lower, out);
    if (c.upper) collectVars(*c.upper, out);
    for (const auto& d : c.defs) {
      collectVars(d.templ, out);
      for (const auto& cd : d.conds) collectVars(cd, out);
    }
  }
}

std::vector<std::string> ruleVars(const Rule& r) {
  std::vector<std::string> out;
  for (const auto& e : r.ante) collectVars(e, out);
  for (const auto& e : r.cons) collectVars(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic desugaring

namespace {

class FreshVars {
 public:
  explicit FreshVars(std::vector<std::string> used) : used_(std::move(used)) {}
  std::string next() {
    for (;;) {
      std::string cand = "T" + std::to_string(++counter_);
      if (std::find(used_.begin(), used_.end(), cand) == used_.end()) {
        used_.push_back(cand);
        made_.push_back(cand);
        return cand;
      }
    }
  }
  std::size_t mark() const { return made_.size(); }
  std::vector<std::string> since(std::size_t m) const {
    return {made_.begin() + static_cast<std::ptrdiff_t>(m), made_.end()};
  }

 private:
  std::vector<std::string> used_;
  std::vector<std::string> made_;
  int counter_ = 0;
};

// Flattens t to an atomic term, emitting defining atoms op(l,r,T) to sink.
Term flatten(const Term& t, FreshVars& fresh, std::vector<Atom>& sink) {
  if (t.kind != TermKind::Expr) return t;
  Term l = flatten(t.sub[0], fresh, sink);
  Term r = flatten(t.sub[1], fresh, sink);
  Term res = Term::var(fresh.next());
  Atom def;
  def.pred = opName(t.op);
  def.cls = PredClass::Predefined;
  def.args = {l, r, res};
  sink.push_back(def);
  return res;
}

bool isSimpleExpr(const Term& t) {
  return t.kind == TermKind::Expr && t.sub[0].kind != TermKind::Expr &&
         t.sub[1].kind != TermKind::Expr;
}

// Desugars one atom. Returns false if the atom was absorbed into sink
// (an equality that became a defining atom).
bool desugarAtom(Atom& a, FreshVars& fresh, std::vector<Atom>& sink, bool allowAbsorb) {
  if (a.pred == "=" && a.args.size() == 2) {
    Term& l = a.args[0];
    Term& r = a.args[1];
    // v = x op y collapses to the defining atom directly.
    if (allowAbsorb && l.kind != TermKind::Expr && r.kind == TermKind::Expr) {
      Term rl = flatten(r.sub[0], fresh, sink);
      Term rr = flatten(r.sub[1], fresh, sink);
      Atom def;
      def.pred = opName(r.op);
      def.cls = PredClass::Predefined;
      def.args = {rl, rr, l};
      sink.push_back(def);
      return false;
    }
    if (allowAbsorb && r.kind != TermKind::Expr && l.kind == TermKind::Expr) {
      Term ll = flatten(l.sub[0], fresh, sink);
      Term lr = flatten(l.sub[1], fresh, sink);
      Atom def;
      def.pred = opName(l.op);
      def.cls = PredClass::Predefined;
      def.args = {ll, lr, r};
      sink.push_back(def);
      return false;
    }
  }
  if (isArithPred(a.pred) && a.args.size() == 3 && a.args[0].kind != TermKind::Expr &&
      a.args[1].kind != TermKind::Expr && a.args[2].kind != TermKind::Expr) {
    return true; // already a defining atom
  }
  // In-place equality shortcut inside consequents: v = x op y stays predefined.
  if (isComparisonPred(a.pred) && a.pred == "=" && a.args.size() == 2 &&
      a.args[0].kind != TermKind::Expr && isSimpleExpr(a.args[1])) {
    Term e = a.args[1];
    Atom def;
    def.pred = opName(e.op);
    def.cls = PredClass::Predefined;
    def.args = {e.sub[0], e.sub[1], a.args[0]};
    a = def;
    return true;
  }
  for (auto& t : a.args) t = flatten(t, fresh, sink);
  return true;
}

void desugarCatom(CAtom& c, FreshVars& fresh, std::vector<Atom>& ruleSink) {
  if (c.lower && c.lower->kind == TermKind::Expr) {
    Term t = flatten(*c.lower, fresh, ruleSink);
    c.lower = t;
  }
  if (c.upper && c.upper->kind == TermKind::Expr) {
    Term t = flatten(*c.upper, fresh, ruleSink);
    c.upper = t;
  }
  for (auto& d : c.defs) {
    std::size_t m = fresh.mark();
    std::vector<Atom> defSink;
    for (auto& t : d.templ.args) t = flatten(t, fresh, defSink);
    std::vector<Atom> conds;
    for (auto& cd : d.conds) {
      std::vector<Atom> s;
      Atom a = cd;
      bool keep = desugarAtom(a, fresh, s, /*allowAbsorb=*/true);
      for (auto& x : s) conds.push_back(std::move(x));
      if (keep) conds.push_back(std::move(a));
    }
    for (auto& x : defSink) conds.push_back(std::move(x));
    d.conds = std::move(conds);
    // Every fresh variable introduced inside this definition is determined
    // by its defining atom, hence bound.
    for (auto& n : fresh.since(m)) d.synthBound.push_back(std::move(n));
  }
}

} // namespace

Rule desugarArithmetic(const Rule& r) {
  Rule out;
  out.hornSyntax = r.hornSyntax;
  out.flavor = r.flavor;
  FreshVars fresh(ruleVars(r));
  std::vector<Atom> tailDefs; // defining atoms for consequent expressions

  for (const auto& e : r.ante) {
    if (std::holds_alternative<Atom>(e)) {
      Atom a = std::get<Atom>(e);
      std::vector<Atom> sink;
      bool keep = desugarAtom(a, fresh, sink, /*allowAbsorb=*/true);
      for (auto& d : sink) out.ante.emplace_back(std::move(d));
      if (keep) out.ante.emplace_back(std::move(a));
    } else {
      CAtom c = std::get<CAtom>(e);
      std::vector<Atom> sink;
      desugarCatom(c, fresh, sink);
      for (auto& d : sink) out.ante.emplace_back(std::move(d));
      out.ante.emplace_back(std::move(c));
    }
  }
  for (const auto& e : r.cons) {
    if (std::holds_alternative<Atom>(e)) {
      Atom a = std::get<Atom>(e);
      bool keep = desugarAtom(a, fresh, tailDefs, /*allowAbsorb=*/false);
      if (keep) out.cons.emplace_back(std::move(a));
    } else {
      CAtom c = std::get<CAtom>(e);
      desugarCatom(c, fresh, tailDefs);
      out.cons.emplace_back(std::move(c));
    }
  }
  for (auto& d : tailDefs) out.ante.emplace_back(std::move(d));
  out.synthVars = r.synthVars;
  for (auto& n : fresh.since(0)) out.synthVars.push_back(std::move(n));
  return out;
}

std::pair<std::set<std::string>, std::set<std::string>> classifySetVariables(const SetDef& def) {
  std::set<std::string> bound(def.synthBound.begin(), def.synthBound.end());
  for (const auto& c : def.conds) {
    if (c.cls == PredClass::Data) {
      std::vector<std::string> vs;
      collectVars(c, vs);
      bound.insert(vs.begin(), vs.end());
    }
  }
  std::set<std::string> free;
  std::vector<std::string> all;
  collectVars(def.templ, all);
  for (const auto& c : def.conds) collectVars(c, all);
  for (const auto& v : all)
    if (!bound.count(v)) free.insert(v);
  return {bound, free};
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void resolveConstants(Term& t, const std::map<std::string, Term>& consts) {
  if (t.kind == TermKind::Sym) {
    auto it = consts.find(t.name);
    if (it != consts.end() && !(it->second == t)) t = it->second;
  } else if (t.kind == TermKind::Expr) {
    for (auto& s : t.sub) resolveConstants(s, consts);
  }
}

void resolveConstants(Atom& a, const std::map<std::string, Term>& consts) {
  for (auto& t : a.args) resolveConstants(t, consts);
}

void resolveConstants(Rule& r, const std::map<std::string, Term>& consts) {
  auto doElem = [&](Elem& e) {
    if (std::holds_alternative<Atom>(e)) {
      resolveConstants(std::get<Atom>(e), consts);
    } else {
      CAtom& c = std::get<CAtom>(e);
      if (c.lower) resolveConstants(*c.lower, consts);
      if (c.upper) resolveConstants(*c.upper, consts);
      for (auto& d : c.defs) {
        resolveConstants(d.templ, consts);
        for (auto& cd : d.conds) resolveConstants(cd, consts);
      }
    }
  };
  for (auto& e : r.ante) doElem(e);
  for (auto& e : r.cons) doElem(e);
}

void classifyAtom(Atom& a, DataProgramPair& pair, bool inSetCond) {
  if (isPredefinedPred(a.pred)) {
    a.cls = PredClass::Predefined;
    std::size_t want = isComparisonPred(a.pred) ? 2 : 3;
    if (a.args.size() != want)
      throw Error(Errc::ArityMismatch, "predefined relation '" + a.pred + "' used with " +
                                           std::to_string(a.args.size()) + " arguments");
    return;
  }
  auto it = pair.sigs.find(a.pred);
  if (it == pair.sigs.end()) {
    pair.sigs[a.pred] = PredSig{static_cast<int>(a.args.size()), PredClass::Program};
    a.cls = PredClass::Program;
    return;
  }
  if (it->second.arity != static_cast<int>(a.args.size()))
    throw Error(Errc::ArityMismatch, "relation '" + a.pred + "' used with arity " +
                                         std::to_string(a.args.size()) + " and " +
                                         std::to_string(it->second.arity));
  a.cls = it->second.cls;
  (void)inSetCond;
}

bool mentionsTermConst(const Term& t) {
  if (t.isConst()) return true;
  if (t.kind == TermKind::Expr)
    for (const auto& s : t.sub)
      if (mentionsTermConst(s)) return true;
  return false;
}

bool elemMentionsPred(const Elem& e, const std::set<std::string>& preds) {
  if (std::holds_alternative<Atom>(e)) return preds.count(std::get<Atom>(e).pred) != 0;
  const CAtom& c = std::get<CAtom>(e);
  for (const auto& d : c.defs) {
    if (preds.count(d.templ.pred)) return true;
    for (const auto& cd : d.conds)
      if (preds.count(cd.pred)) return true;
  }
  return false;
}

} // namespace

void validate(DataProgramPair& pair) {
  // Named constants resolve before anything else.
  for (auto& a : pair.data) resolveConstants(a, pair.constants);
  for (auto& r : pair.rules) resolveConstants(r, pair.constants);
  for (auto& r : pair.rules) r = desugarArithmetic(r);

  pair.sigs.clear();
  pair.hornHeads.clear();

  // Data predicates and their arities; data must be ground.
  std::set<Atom> seen;
  std::vector<Atom> data;
  for (auto& a : pair.data) {
    if (isPredefinedPred(a.pred))
      throw Error(Errc::Parse, "predefined relation '" + a.pred + "' cannot appear in data");
    if (!a.isGround()) throw Error(Errc::NongroundData, "data atom " + printAtom(a) + " is not ground");
    a.cls = PredClass::Data;
    auto it = pair.sigs.find(a.pred);
    if (it == pair.sigs.end())
      pair.sigs[a.pred] = PredSig{static_cast<int>(a.args.size()), PredClass::Data};
    else if (it->second.arity != static_cast<int>(a.args.size()))
      throw Error(Errc::ArityMismatch, "data relation '" + a.pred + "' used with two arities");
    if (seen.insert(a).second) data.push_back(a);
  }
  pair.data = std::move(data);

  // Classify every atom and run the per-rule static checks.
  for (auto& r : pair.rules) {
    for (auto& e : r.ante) {
      if (std::holds_alternative<Atom>(e)) {
        Atom& a = std::get<Atom>(e);
        if (a.hasHole()) throw Error(Errc::EatomInBody, "placeholder in antecedent atom " + a.pred);
        classifyAtom(a, pair, false);
      } else {
        CAtom& c = std::get<CAtom>(e);
        for (auto& d : c.defs) {
          if (d.templ.hasHole())
            throw Error(Errc::EatomInBody, "placeholder inside a set definition");
          classifyAtom(d.templ, pair, false);
          if (d.templ.cls != PredClass::Program)
            throw Error(Errc::ProgramPredInSetcond,
                        "set template '" + d.templ.pred + "' must be a program atom");
          for (auto& cd : d.conds) {
            if (cd.hasHole()) throw Error(Errc::EatomInBody, "placeholder inside a set condition");
            classifyAtom(cd, pair, true);
            if (cd.cls == PredClass::Program)
              throw Error(Errc::ProgramPredInSetcond,
                          "program relation '" + cd.pred + "' in a set condition");
          }
        }
      }
    }
    for (auto& e : r.cons) {
      if (std::holds_alternative<Atom>(e)) {
        Atom& a = std::get<Atom>(e);
        classifyAtom(a, pair, false);
        if (a.hasHole() && a.cls == PredClass::Data)
          throw Error(Errc::DataEatom, "e-atom over data relation '" + a.pred + "'");
        if (a.hasHole() && a.cls == PredClass::Predefined)
          throw Error(Errc::DataEatom, "e-atom over predefined relation '" + a.pred + "'");
      } else {
        CAtom& c = std::get<CAtom>(e);
        for (auto& d : c.defs) {
          if (d.templ.hasHole()) throw Error(Errc::EatomInBody, "placeholder inside a set definition");
          classifyAtom(d.templ, pair, false);
          if (d.templ.cls != PredClass::Program)
            throw Error(Errc::ProgramPredInSetcond,
                        "set template '" + d.templ.pred + "' must be a program atom");
          for (auto& cd : d.conds) {
            if (cd.hasHole()) throw Error(Errc::EatomInBody, "placeholder inside a set condition");
            classifyAtom(cd, pair, true);
            if (cd.cls == PredClass::Program)
              throw Error(Errc::ProgramPredInSetcond,
                          "program relation '" + cd.pred + "' in a set condition");
          }
        }
      }
    }
  }

  // Horn rules and their heads.
  for (auto& r : pair.rules) {
    if (!r.hornSyntax) continue;
    r.flavor = Flavor::Horn;
    if (r.cons.size() != 1 || !std::holds_alternative<Atom>(r.cons[0]))
      throw Error(Errc::Parse, "Horn rule must have a single atom head");
    const Atom& h = std::get<Atom>(r.cons[0]);
    if (h.hasHole()) throw Error(Errc::Parse, "Horn head cannot be an e-atom");
    if (h.cls != PredClass::Program)
      throw Error(Errc::Parse, "Horn head '" + h.pred + "' must be a program relation");
    for (const auto& e : r.ante)
      if (!std::holds_alternative<Atom>(e))
        throw Error(Errc::Parse, "cardinality atom in a Horn rule body");
    pair.hornHeads.insert(h.pred);
  }

  // Flavor the remaining rules: a consequent occurrence of a Horn-head
  // relation makes a rule verifying; any other occurrence is an error.
  for (auto& r : pair.rules) {
    if (r.flavor == Flavor::Horn) continue;
    bool consMentions = false;
    for (const auto& e : r.cons)
      if (elemMentionsPred(e, pair.hornHeads)) consMentions = true;
    if (consMentions) {
      r.flavor = Flavor::Verifying;
    } else {
      for (const auto& e : r.ante)
        if (elemMentionsPred(e, pair.hornHeads))
          throw Error(Errc::HornHeadInG, "Horn-head relation used in a generating rule");
      r.flavor = Flavor::Generating;
    }
  }

  // Rename set-definition bound variables apart from every other variable
  // of their rule.
  for (auto& r : pair.rules) {
    std::vector<std::string> used = ruleVars(r);
    int counter = 0;
    auto freshName = [&](const std::string& base) {
      for (;;) {
        std::string cand = base + "_b" + std::to_string(++counter);
        if (std::find(used.begin(), used.end(), cand) == used.end()) {
          used.push_back(cand);
          return cand;
        }
      }
    };
    auto renameInDef = [](SetDef& d, const std::string& from, const std::string& to) {
      auto renameTerm = [&](auto&& self, Term& t) -> void {
        if (t.kind == TermKind::Var && t.name == from) t.name = to;
        if (t.kind == TermKind::Expr)
          for (auto& s : t.sub) self(self, s);
      };
      for (auto& t : d.templ.args) renameTerm(renameTerm, t);
      for (auto& c : d.conds)
        for (auto& t : c.args) renameTerm(renameTerm, t);
      for (auto& n : d.synthBound)
        if (n == from) n = to;
    };
    auto processElem = [&](Elem& e) {
      if (!std::holds_alternative<CAtom>(e)) return;
      CAtom& c = std::get<CAtom>(e);
      for (auto& d : c.defs) {
        auto [bound, free] = classifySetVariables(d);
        // A bound name that also occurs outside this definition gets renamed.
        for (const auto& b : bound) {
          auto appearsOutside = [&](const std::string& name) {
            for (auto& side : {std::cref(r.ante), std::cref(r.cons)}) {
              for (auto& oe : side.get()) {
                if (std::holds_alternative<Atom>(oe)) {
                  std::vector<std::string> vs;
                  collectVars(std::get<Atom>(oe), vs);
                  if (std::find(vs.begin(), vs.end(), name) != vs.end()) return true;
                } else {
                  const CAtom& oc = std::get<CAtom>(oe);
                  if (oc.lower) {
                    std::vector<std::string> vs;
                    collectVars(*oc.lower, vs);
                    if (std::find(vs.begin(), vs.end(), name) != vs.end()) return true;
                  }
                  if (oc.upper) {
                    std::vector<std::string> vs;
                    collectVars(*oc.upper, vs);
                    if (std::find(vs.begin(), vs.end(), name) != vs.end()) return true;
                  }
                  for (const auto& od : oc.defs) {
                    if (&od == &d) continue;
                    std::vector<std::string> vs;
                    collectVars(od.templ, vs);
                    for (const auto& ocd : od.conds) collectVars(ocd, vs);
                    if (std::find(vs.begin(), vs.end(), name) != vs.end()) return true;
                  }
                }
              }
            }
            return false;
          };
          if (appearsOutside(b)) renameInDef(d, b, freshName(b));
        }
        auto [b2, f2] = classifySetVariables(d);
        d.bound.assign(b2.begin(), b2.end());
        d.free.assign(f2.begin(), f2.end());
      }
    };
    for (auto& e : r.ante) processElem(e);
    for (auto& e : r.cons) processElem(e);
  }

  // The combined theory must contain at least one constant symbol.
  bool hasConst = !pair.data.empty() || !pair.constants.empty();
  if (!hasConst) {
    for (const auto& r : pair.rules) {
      auto checkElem = [&](const Elem& e) {
        if (std::holds_alternative<Atom>(e)) {
          for (const auto& t : std::get<Atom>(e).args)
            if (mentionsTermConst(t)) hasConst = true;
        } else {
          const CAtom& c = std::get<CAtom>(e);
          if (c.lower && mentionsTermConst(*c.lower)) hasConst = true;
          if (c.upper && mentionsTermConst(*c.upper)) hasConst = true;
          for (const auto& d : c.defs) {
            for (const auto& t : d.templ.args)
              if (mentionsTermConst(t)) hasConst = true;
            for (const auto& cd : d.conds)
              for (const auto& t : cd.args)
                if (mentionsTermConst(t)) hasConst = true;
          }
        }
      };
      for (const auto& e : r.ante) checkElem(e);
      for (const auto& e : r.cons) checkElem(e);
    }
  }
  if (!hasConst)
    throw Error(Errc::BadParams, "theory contains no occurrence of a constant symbol");

  pair.validated = true;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precOf(ArithOp op) {
  switch (op) {
    case ArithOp::Add:
    case ArithOp::Sub: return 1;
    default: return 2;
  }
}

std::string printTermPrec(const Term& t, int parent, bool rightChild) {
  switch (t.kind) {
    case TermKind::Sym: return t.name;
    case TermKind::Var: return t.name;
    case TermKind::Int: return std::to_string(t.value);
    case TermKind::Hole: return "_";
    case TermKind::Expr: {
      int p = precOf(t.op);
      std::string s = printTermPrec(t.sub[0], p, false) + " " + opName(t.op) + " " +
                      printTermPrec(t.sub[1], p, true);
      if (p < parent || (p == parent && rightChild)) return "(" + s + ")";
      return s;
    }
  }
  return "?";
}

} // namespace

std::string printTerm(const Term& t) { return printTermPrec(t, 0, false); }

std::string printAtom(const Atom& a) {
  if (isComparisonPred(a.pred) && a.args.size() == 2)
    return printTerm(a.args[0]) + " " + a.pred + " " + printTerm(a.args[1]);
  if (isArithPred(a.pred) && a.args.size() == 3)
    return printTerm(a.args[2]) + " = " + printTerm(a.args[0]) + " " + a.pred + " " +
           printTerm(a.args[1]);
  if (a.args.empty()) return a.pred;
  std::string s = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += printTerm(a.args[i]);
  }
  return s + ")";
}

std::string printElem(const Elem& e) {
  if (std::holds_alternative<Atom>(e)) return printAtom(std::get<Atom>(e));
  const CAtom& c = std::get<CAtom>(e);
  std::string s;
  if (c.lower) s += printTerm(*c.lower) + " ";
  s += "{ ";
  for (std::size_t i = 0; i < c.defs.size(); ++i) {
    if (i) s += "; ";
    const SetDef& d = c.defs[i];
    s += printAtom(d.templ);
    if (!d.conds.empty()) {
      s += " : ";
      for (std::size_t j = 0; j < d.conds.size(); ++j) {
        if (j) s += ", ";
        s += printAtom(d.conds[j]);
      }
    }
  }
  s += " }";
  if (c.upper) s += " " + printTerm(*c.upper);
  return s;
}

std::string printRule(const Rule& r) {
  std::string s;
  if (r.hornSyntax) {
    s = printElem(r.cons[0]) + " <- ";
    if (r.ante.empty()) return s + "true.";
    for (std::size_t i = 0; i < r.ante.size(); ++i) {
      if (i) s += ", ";
      s += printElem(r.ante[i]);
    }
    return s + ".";
  }
  std::string ante, cons;
  for (std::size_t i = 0; i < r.ante.size(); ++i) {
    if (i) ante += ", ";
    ante += printElem(r.ante[i]);
  }
  for (std::size_t i = 0; i < r.cons.size(); ++i) {
    if (i) cons += " | ";
    cons += printElem(r.cons[i]);
  }
  if (r.ante.empty() && !r.cons.empty()) return cons + ".";
  if (r.ante.empty()) ante = "true";
  if (r.cons.empty()) cons = "false";
  return ante + " -> " + cons + ".";
}

std::string printProgram(const std::vector<Rule>& rules) {
  std::string s;
  for (const auto& r : rules) s += printRule(r) + "\n";
  return s;
}

std::string printData(const std::vector<Atom>& data) {
  std::string s;
  for (const auto& a : data) s += printAtom(a) + ".\n";
  return s;
}

} // namespace psps
