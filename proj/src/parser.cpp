//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/parser.h"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace psps {

namespace {

enum class Tok {
  Ident,
  Var,
  Int,
  Hole,    // _
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Colon,
  Dot,
  DotDot,
  Pipe,
  Arrow,     // ->
  RevArrow,  // <-
  Eq, Neq, Lt, Le, Gt, Ge,
  Plus, Minus, Star, Slash, Mod,
  True, False,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(const std::string& text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  SourceSpan here(std::size_t begin) const {
    SourceSpan s;
    s.file = file_;
    s.line = line_;
    s.column = static_cast<int>(begin - lineStart_) + 1;
    s.begin = begin;
    s.end = pos_;
    return s;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t begin) {
    throw Error(Errc::Parse, here(begin), msg);
  }

  Token next() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        if (text_[pos_] == '\n') {
          ++line_;
          lineStart_ = pos_ + 1;
        }
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    std::size_t begin = pos_;
    auto mk = [&](Tok k, std::string tx = "") {
      Token t;
      t.kind = k;
      t.text = std::move(tx);
      t.span = here(begin);
      return t;
    };
    if (pos_ >= text_.size()) return mk(Tok::End);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += text_[pos_++];
      Token t = mk(Tok::Int, num);
      try {
        t.value = std::stoll(num);
      } catch (const std::out_of_range&) {
        throw Error(Errc::Overflow, here(begin), "integer literal out of range");
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        id += text_[pos_++];
      if (id == "_") return mk(Tok::Hole);
      if (id == "mod") return mk(Tok::Mod);
      if (id == "true") return mk(Tok::True);
      if (id == "false") return mk(Tok::False);
      if (id.size() >= 2 && id[0] == '_' && id[1] == '_')
        fail("identifiers starting with '__' are reserved", begin);
      if (std::isupper(static_cast<unsigned char>(id[0])) || id[0] == '_')
        return mk(Tok::Var, id);
      return mk(Tok::Ident, id);
    }
    ++pos_;
    switch (c) {
      case '(': return mk(Tok::LParen);
      case ')': return mk(Tok::RParen);
      case '{': return mk(Tok::LBrace);
      case '}': return mk(Tok::RBrace);
      case ',': return mk(Tok::Comma);
      case ';': return mk(Tok::Semi);
      case '|': return mk(Tok::Pipe);
      case '+': return mk(Tok::Plus);
      case '*': return mk(Tok::Star);
      case '/': return mk(Tok::Slash);
      case '=': return mk(Tok::Eq);
      case '.':
        if (pos_ < text_.size() && text_[pos_] == '.') {
          ++pos_;
          return mk(Tok::DotDot);
        }
        return mk(Tok::Dot);
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          ++pos_;
          return mk(Tok::Arrow);
        }
        return mk(Tok::Minus);
      case '<':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
          return mk(Tok::Le);
        }
        if (pos_ < text_.size() && text_[pos_] == '-') {
          ++pos_;
          return mk(Tok::RevArrow);
        }
        return mk(Tok::Lt);
      case '>':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
          return mk(Tok::Ge);
        }
        return mk(Tok::Gt);
      case ':': return mk(Tok::Colon);
      case '!':
        if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
          return mk(Tok::Neq);
        }
        fail("unexpected character '!'", begin);
      default: break;
    }
    fail(std::string("unexpected character '") + c + "'", begin);
  }

  const std::string& text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t lineStart_ = 0;
};

const char* cmpName(Tok t) {
  switch (t) {
    case Tok::Eq: return "=";
    case Tok::Neq: return "!=";
    case Tok::Lt: return "<";
    case Tok::Le: return "<=";
    case Tok::Gt: return ">";
    case Tok::Ge: return ">=";
    default: return nullptr;
  }
}

class Parser {
 public:
  Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Rule> program() {
    std::vector<Rule> rules;
    while (peek().kind != Tok::End) rules.push_back(statement());
    return rules;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, peek().span, msg);
  }

  bool startsTerm(Tok k) const {
    return k == Tok::Int || k == Tok::Var || k == Tok::Ident || k == Tok::LParen;
  }

  Term primary(bool allowHole) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        Token tk = take();
        return Term::integer(tk.value);
      }
      case Tok::Minus: {
        take();
        if (peek().kind != Tok::Int) fail("expected an integer after '-'");
        Token tk = take();
        return Term::integer(-tk.value);
      }
      case Tok::Var: {
        Token tk = take();
        return Term::var(tk.text);
      }
      case Tok::Ident: {
        Token tk = take();
        return Term::sym(tk.text);
      }
      case Tok::Hole:
        if (!allowHole) fail("placeholder '_' not allowed here");
        take();
        return Term::hole();
      case Tok::LParen: {
        take();
        Term e = expr(false);
        expect(Tok::RParen, "')'");
        return e;
      }
      default: fail("expected a term");
    }
  }

  Term mulExpr(bool allowHole) {
    Term l = primary(allowHole);
    for (;;) {
      ArithOp op;
      if (peek().kind == Tok::Star) op = ArithOp::Mul;
      else if (peek().kind == Tok::Slash) op = ArithOp::Div;
      else if (peek().kind == Tok::Mod) op = ArithOp::Mod;
      else break;
      take();
      Term r = primary(false);
      l = Term::expr(op, std::move(l), std::move(r));
    }
    return l;
  }

  Term expr(bool allowHole) {
    Term l = mulExpr(allowHole);
    if (l.kind == TermKind::Hole) return l; // a hole is a whole argument
    for (;;) {
      ArithOp op;
      if (peek().kind == Tok::Plus) op = ArithOp::Add;
      else if (peek().kind == Tok::Minus) op = ArithOp::Sub;
      else break;
      take();
      Term r = mulExpr(false);
      l = Term::expr(op, std::move(l), std::move(r));
    }
    return l;
  }

  Atom atomWithArgs(Token name) {
    Atom a;
    a.pred = name.text;
    if (accept(Tok::LParen)) {
      do {
        a.args.push_back(expr(true));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    return a;
  }

  // An atom or an infix comparison; used in rule bodies, heads and set
  // definitions alike.
  Atom simpleAtom() {
    if (peek().kind == Tok::Ident &&
        (peek(1).kind == Tok::LParen || !startsCmpOrArith(peek(1).kind))) {
      return atomWithArgs(take());
    }
    Term l = expr(false);
    const char* cmp = cmpName(peek().kind);
    if (!cmp) fail("expected a comparison operator");
    take();
    Term r = expr(false);
    Atom a;
    a.pred = cmp;
    a.cls = PredClass::Predefined;
    a.args = {std::move(l), std::move(r)};
    return a;
  }

  bool startsCmpOrArith(Tok k) const {
    return cmpName(k) != nullptr || k == Tok::Plus || k == Tok::Minus || k == Tok::Star ||
           k == Tok::Slash || k == Tok::Mod;
  }

  CAtom catomAfterLower(std::optional<Term> lower) {
    CAtom c;
    c.lower = std::move(lower);
    expect(Tok::LBrace, "'{'");
    do {
      SetDef d;
      if (peek().kind != Tok::Ident) fail("expected a set template atom");
      d.templ = atomWithArgs(take());
      if (accept(Tok::Colon)) {
        do {
          d.conds.push_back(simpleAtom());
        } while (accept(Tok::Comma));
      }
      c.defs.push_back(std::move(d));
    } while (accept(Tok::Semi));
    expect(Tok::RBrace, "'}'");
    if (startsTerm(peek().kind)) c.upper = expr(false);
    return c;
  }

  Elem element() {
    if (peek().kind == Tok::LBrace) return catomAfterLower(std::nullopt);
    // An atom never continues with '{'; anything else term-like may be a
    // c-atom lower bound or the left side of a comparison.
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::LParen) {
      Atom a = atomWithArgs(take());
      return a;
    }
    if (peek().kind == Tok::Ident && !startsCmpOrArith(peek(1).kind) &&
        peek(1).kind != Tok::LBrace) {
      return atomWithArgs(take()); // 0-ary atom
    }
    Term l = expr(false);
    if (peek().kind == Tok::LBrace) return catomAfterLower(std::move(l));
    const char* cmp = cmpName(peek().kind);
    if (!cmp) fail("expected a comparison, '{' or rule punctuation");
    take();
    Term r = expr(false);
    Atom a;
    a.pred = cmp;
    a.cls = PredClass::Predefined;
    a.args = {std::move(l), std::move(r)};
    return a;
  }

  std::vector<Elem> consequent() {
    std::vector<Elem> cons;
    if (accept(Tok::False)) return cons;
    do {
      cons.push_back(element());
    } while (accept(Tok::Pipe));
    return cons;
  }

  Rule statement() {
    Rule r;
    if (accept(Tok::True)) {
      expect(Tok::Arrow, "'->'");
      r.cons = consequent();
      expect(Tok::Dot, "'.'");
      return r;
    }
    if (accept(Tok::False)) fail("'false' cannot start a rule");
    Elem first = element();
    if (accept(Tok::RevArrow)) {
      r.hornSyntax = true;
      r.cons.push_back(std::move(first));
      if (!accept(Tok::True)) {
        do {
          r.ante.push_back(element());
        } while (accept(Tok::Comma));
      }
      expect(Tok::Dot, "'.'");
      return r;
    }
    if (accept(Tok::Dot)) { // single fact
      r.cons.push_back(std::move(first));
      return r;
    }
    if (peek().kind == Tok::Pipe) { // disjunctive fact
      r.cons.push_back(std::move(first));
      while (accept(Tok::Pipe)) r.cons.push_back(element());
      expect(Tok::Dot, "'.'");
      return r;
    }
    r.ante.push_back(std::move(first));
    while (accept(Tok::Comma)) r.ante.push_back(element());
    expect(Tok::Arrow, "'->'");
    r.cons = consequent();
    expect(Tok::Dot, "'.'");
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<Rule> parseProgram(const std::string& text, const std::string& filename) {
  Lexer lex(text, filename);
  Parser p(lex.run());
  return p.program();
}

std::vector<Atom> parseData(const std::string& text, const std::string& filename) {
  Lexer lex(text, filename);
  std::vector<Token> toks = lex.run();
  std::vector<Atom> out;
  std::set<Atom> seen;
  std::size_t i = 0;
  auto peek = [&]() -> const Token& { return toks[i < toks.size() ? i : toks.size() - 1]; };
  auto fail = [&](const std::string& msg) -> void {
    throw Error(Errc::Parse, peek().span, msg);
  };
  while (peek().kind != Tok::End) {
    if (peek().kind != Tok::Ident) {
      if (peek().kind == Tok::Var) throw Error(Errc::NongroundData, peek().span, "variable in data");
      fail("expected a fact");
    }
    Atom base;
    base.pred = peek().text;
    base.cls = PredClass::Data;
    ++i;
    // Each argument is a constant or an integer range lo..hi.
    struct Arg {
      std::int64_t lo = 0, hi = 0;
      Term sym;
      bool isRange = false;
    };
    std::vector<Arg> args;
    if (peek().kind == Tok::LParen) {
      ++i;
      for (;;) {
        Arg a;
        bool neg = false;
        if (peek().kind == Tok::Minus) {
          neg = true;
          ++i;
          if (peek().kind != Tok::Int) fail("expected an integer after '-'");
        }
        if (peek().kind == Tok::Int) {
          std::int64_t lo = neg ? -peek().value : peek().value;
          ++i;
          if (peek().kind == Tok::DotDot) {
            ++i;
            bool negHi = false;
            if (peek().kind == Tok::Minus) {
              negHi = true;
              ++i;
            }
            if (peek().kind != Tok::Int) fail("expected an integer after '..'");
            a.isRange = true;
            a.lo = lo;
            a.hi = negHi ? -peek().value : peek().value;
            if (a.hi < a.lo) fail("empty range");
            ++i;
          } else {
            a.sym = Term::integer(lo);
          }
        } else if (peek().kind == Tok::Ident) {
          a.sym = Term::sym(peek().text);
          ++i;
        } else if (peek().kind == Tok::Var || peek().kind == Tok::Hole) {
          throw Error(Errc::NongroundData, peek().span, "variable in data");
        } else {
          fail("expected a constant");
        }
        args.push_back(std::move(a));
        if (peek().kind == Tok::Comma) {
          ++i;
          continue;
        }
        break;
      }
      if (peek().kind != Tok::RParen) fail("expected ')'");
      ++i;
    }
    if (peek().kind != Tok::Dot) fail("expected '.'");
    ++i;
    // Expand ranges left to right.
    std::vector<std::vector<Term>> expansions{{}};
    for (const auto& a : args) {
      std::vector<std::vector<Term>> next;
      for (const auto& pre : expansions) {
        if (a.isRange) {
          for (std::int64_t v = a.lo; v <= a.hi; ++v) {
            auto row = pre;
            row.push_back(Term::integer(v));
            next.push_back(std::move(row));
          }
        } else {
          auto row = pre;
          row.push_back(a.sym);
          next.push_back(std::move(row));
        }
      }
      expansions = std::move(next);
    }
    for (auto& row : expansions) {
      Atom a = base;
      a.args = std::move(row);
      if (seen.insert(a).second) out.push_back(std::move(a));
    }
  }
  return out;
}

std::map<std::string, Term> parseConstants(const std::vector<std::string>& args) {
  std::map<std::string, Term> out;
  for (const auto& s : args) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
      throw Error(Errc::BadBinding, "binding '" + s + "' is not of the form name=value");
    std::string name = s.substr(0, eq);
    std::string val = s.substr(eq + 1);
    auto isIdent = [](const std::string& x, bool lower) {
      if (x.empty()) return false;
      unsigned char c0 = static_cast<unsigned char>(x[0]);
      if (lower ? !std::islower(c0) : !std::isalpha(c0)) return false;
      for (char c : x)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
      return true;
    };
    if (!isIdent(name, true))
      throw Error(Errc::BadBinding, "bad constant name '" + name + "'");
    Term v;
    bool numeric = !val.empty() &&
                   val.find_first_not_of("0123456789", val[0] == '-' ? 1 : 0) == std::string::npos &&
                   (val[0] != '-' || val.size() > 1);
    if (numeric) {
      try {
        v = Term::integer(std::stoll(val));
      } catch (const std::out_of_range&) {
        throw Error(Errc::Overflow, "binding value '" + val + "' out of range");
      }
    } else if (isIdent(val, true)) {
      v = Term::sym(val);
    } else {
      throw Error(Errc::BadBinding, "bad binding value '" + val + "'");
    }
    auto [it, inserted] = out.emplace(name, v);
    if (!inserted) throw Error(Errc::DuplicateConst, "constant '" + name + "' bound twice");
  }
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::Io, "error reading '" + path + "'");
  return ss.str();
}

} // namespace psps
