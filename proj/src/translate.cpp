//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/translate.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "psps/ground.h"
#include "psps/solver.h"

namespace psps {

namespace {

// Minimal tokenizer for the clause syntax; shares nothing with the main
// parser on purpose (kept independent for oracle work).
struct DlgLex {
  const std::string& text;
  std::string file;
  std::size_t pos = 0;
  int line = 1;

  explicit DlgLex(const std::string& t, std::string f) : text(t), file(std::move(f)) {}

  void skip() {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        if (text[pos] == '\n') ++line;
        ++pos;
      }
      if (pos < text.size() && text[pos] == '%') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      return;
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    SourceSpan sp;
    sp.file = file;
    sp.line = line;
    throw Error(Errc::Parse, sp, msg);
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eatArrow() {
    skip();
    if (pos + 1 < text.size() && text[pos] == ':' && text[pos + 1] == '-') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string word() {
    skip();
    std::string w;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      w += text[pos++];
    return w;
  }

  bool done() {
    skip();
    return pos >= text.size();
  }
};

Term dlgTerm(DlgLex& lx) {
  lx.skip();
  if (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) {
    std::string n = lx.word();
    return Term::integer(std::stoll(n));
  }
  std::string w = lx.word();
  if (w.empty()) lx.fail("expected a term");
  if (w.size() >= 2 && w[0] == '_' && w[1] == '_')
    lx.fail("identifiers starting with '__' are reserved");
  if (std::isupper(static_cast<unsigned char>(w[0])) || w[0] == '_') return Term::var(w);
  return Term::sym(w);
}

Atom dlgAtom(DlgLex& lx) {
  std::string p = lx.word();
  if (p.empty()) lx.fail("expected an atom");
  if (p.size() >= 2 && p[0] == '_' && p[1] == '_')
    lx.fail("identifiers starting with '__' are reserved");
  if (std::isupper(static_cast<unsigned char>(p[0])))
    lx.fail("predicate names must start lowercase");
  Atom a;
  a.pred = p;
  if (lx.eat('(')) {
    do {
      a.args.push_back(dlgTerm(lx));
    } while (lx.eat(','));
    if (!lx.eat(')')) lx.fail("expected ')'");
  }
  return a;
}

} // namespace

PureProgram parseDatalog(const std::string& text, const std::string& filename) {
  DlgLex lx(text, filename);
  PureProgram out;
  while (!lx.done()) {
    DatalogClause cl;
    cl.head = dlgAtom(lx);
    if (lx.eatArrow()) {
      do {
        lx.skip();
        bool neg = false;
        std::size_t save = lx.pos;
        std::string w = lx.word();
        if (w == "not") {
          neg = true;
        } else {
          lx.pos = save;
        }
        Atom a = dlgAtom(lx);
        (neg ? cl.neg : cl.pos).push_back(std::move(a));
      } while (lx.eat(','));
    }
    if (!lx.eat('.')) lx.fail("expected '.'");
    out.clauses.push_back(std::move(cl));
  }
  return out;
}

void checkPure(PureProgram& p) {
  p.intentional.clear();
  p.extensional.clear();
  std::map<std::string, const Atom*> headOf;
  for (const auto& cl : p.clauses) {
    p.intentional.insert(cl.head.pred);
    // Head must be p(X) with X distinct variables, identical across Def(p).
    std::set<std::string> seen;
    for (const auto& t : cl.head.args) {
      if (t.kind != TermKind::Var)
        throw Error(Errc::NotPure, "head of '" + cl.head.pred + "' is not a tuple of variables");
      if (!seen.insert(t.name).second)
        throw Error(Errc::NotPure, "repeated head variable in '" + cl.head.pred + "'");
    }
    auto [it, inserted] = headOf.emplace(cl.head.pred, &cl.head);
    if (!inserted && !(*it->second == cl.head))
      throw Error(Errc::NotPure, "clauses defining '" + cl.head.pred + "' have different heads");
    for (const auto* side : {&cl.pos, &cl.neg})
      for (const auto& a : *side)
        for (const auto& t : a.args)
          if (t.kind != TermKind::Var)
            throw Error(Errc::NotPure, "constant in the body of '" + cl.head.pred + "'");
  }
  std::map<std::string, std::size_t> arity;
  for (const auto& cl : p.clauses) {
    arity.emplace(cl.head.pred, cl.head.args.size());
    for (const auto* side : {&cl.pos, &cl.neg})
      for (const auto& a : *side) {
        auto [it, inserted] = arity.emplace(a.pred, a.args.size());
        if (!inserted && it->second != a.args.size())
          throw Error(Errc::ArityMismatch, "relation '" + a.pred + "' used with two arities");
        if (!p.intentional.count(a.pred)) p.extensional.insert(a.pred);
      }
  }
  if (p.extensional.empty())
    throw Error(Errc::NotPure, "program has no extensional relations");
}

std::vector<Rule> toPs(const PureProgram& p) {
  std::vector<Rule> out;
  // Clause index within each defining set, and per-predicate clause lists
  // for the completion rules.
  std::map<std::string, std::vector<std::pair<std::string, std::vector<std::string>>>> defs;
  std::map<std::string, int> counter;

  auto elem = [](Atom a) { return Elem{std::move(a)}; };

  for (const auto& cl : p.clauses) {
    int idx = ++counter[cl.head.pred];
    std::string dname = "__d_" + cl.head.pred + "_" + std::to_string(idx);
    // X then Y_r in first-occurrence order.
    std::vector<std::string> xs;
    for (const auto& t : cl.head.args) xs.push_back(t.name);
    std::vector<std::string> ys;
    for (const auto* side : {&cl.pos, &cl.neg})
      for (const auto& a : *side)
        for (const auto& t : a.args)
          if (std::find(xs.begin(), xs.end(), t.name) == xs.end() &&
              std::find(ys.begin(), ys.end(), t.name) == ys.end())
            ys.push_back(t.name);
    Atom d;
    d.pred = dname;
    for (const auto& v : xs) d.args.push_back(Term::var(v));
    for (const auto& v : ys) d.args.push_back(Term::var(v));
    defs[cl.head.pred].emplace_back(dname, ys);

    for (const auto& q : cl.pos) {
      Rule r;
      r.ante.push_back(elem(d));
      r.cons.push_back(elem(q));
      out.push_back(std::move(r));
    }
    for (const auto& q : cl.neg) {
      Rule r;
      r.ante.push_back(elem(d));
      r.ante.push_back(elem(q));
      out.push_back(std::move(r)); // empty consequent
    }
    Rule psi0;
    for (const auto& q : cl.pos) psi0.ante.push_back(elem(q));
    psi0.cons.push_back(elem(d));
    for (const auto& q : cl.neg) psi0.cons.push_back(elem(q));
    out.push_back(std::move(psi0));
    Rule cc;
    cc.ante.push_back(elem(d));
    cc.cons.push_back(elem(cl.head));
    out.push_back(std::move(cc));
  }
  // p(X) -> d_r1(X,_...) | d_r2(X,_...) | ...
  for (const auto& [pred, rs] : defs) {
    const Atom* head = nullptr;
    for (const auto& cl : p.clauses)
      if (cl.head.pred == pred) {
        head = &cl.head;
        break;
      }
    Rule cc;
    cc.ante.push_back(elem(*head));
    for (const auto& [dname, ys] : rs) {
      Atom d;
      d.pred = dname;
      for (const auto& t : head->args) d.args.push_back(t);
      for (std::size_t i = 0; i < ys.size(); ++i) d.args.push_back(Term::hole());
      cc.cons.push_back(elem(d));
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<std::vector<Atom>> supportedModels(const std::vector<Atom>& data,
                                               const PureProgram& p,
                                               const std::set<std::string>& show) {
  if (data.empty()) throw Error(Errc::BadParams, "instance data must be nonempty");
  DataProgramPair pair;
  pair.data = data;
  pair.rules = toPs(p);
  // An extensional relation with no facts is empty, not free: constrain
  // every instance of it to false.
  std::set<std::string> present;
  for (const auto& a : data) present.insert(a.pred);
  std::map<std::string, std::size_t> earity;
  for (const auto& cl : p.clauses)
    for (const auto* side : {&cl.pos, &cl.neg})
      for (const auto& a : *side)
        if (p.extensional.count(a.pred)) earity[a.pred] = a.args.size();
  for (const auto& [pred, ar] : earity) {
    if (present.count(pred)) continue;
    Atom a;
    a.pred = pred;
    for (std::size_t i = 0; i < ar; ++i) a.args.push_back(Term::var("X" + std::to_string(i + 1)));
    Rule r;
    r.ante.push_back(Elem{std::move(a)});
    pair.rules.push_back(std::move(r));
  }
  validate(pair);
  GroundTheory gt = groundPair(pair);
  std::set<std::vector<Atom>> models;
  try {
    simplifyToCore(gt);
  } catch (const Error& e) {
    if (e.code() == Errc::Inconsistent) return {};
    throw;
  }
  Solver solver(gt);
  solver.solve([&](const std::vector<int>& trueIds) {
    std::vector<Atom> proj;
    for (const auto& a : data)
      if (show.count(a.pred)) proj.push_back(a);
    for (int id : trueIds) {
      const Atom& a = gt.atoms[static_cast<std::size_t>(id)];
      if (show.count(a.pred)) proj.push_back(a);
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    models.insert(std::move(proj));
    return true;
  });
  return {models.begin(), models.end()};
}

} // namespace psps
