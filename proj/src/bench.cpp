//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#include "psps/bench.h"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "psps/parser.h"

namespace psps {
namespace bench {

namespace {

// Kept byte-identical to the files under encodings/.
const char* kColor = R"(% Graph k-coloring, plain encoding.
% Data: vtx/1, edge/2, color/1.
clrd(X,C) -> vtx(X).
clrd(X,C) -> color(C).
vtx(X) -> clrd(X,_).
clrd(X,C), clrd(X,D) -> C = D.
edge(X,Y), clrd(X,C), clrd(Y,C) -> false.
)";

const char* kColorC = R"(% Graph k-coloring with a cardinality atom.
% Data: vtx/1, edge/2, color/1.
clrd(X,C) -> vtx(X).
clrd(X,C) -> color(C).
vtx(X) -> 1 { clrd(X,C) : color(C) } 1.
edge(X,Y), clrd(X,C), clrd(Y,C) -> false.
)";

const char* kVc = R"(% Vertex cover of size at most k, plain encoding.
% Data: vtx/1, edge/2, index/1 (1..k).
vc(I,X) -> vtx(X).
vc(I,X) -> index(I).
index(I) -> vc(I,_).
vc(I,X), vc(I,Y) -> X = Y.
edge(X,Y) -> vc(_,X) | vc(_,Y).
)";

const char* kVcC = R"(% Vertex cover of size at most k with a cardinality atom.
% Data: vtx/1, edge/2, size/1.
invc(X) -> vtx(X).
size(K) -> { invc(X) : vtx(X) } K.
edge(X,Y) -> invc(X) | invc(Y).
)";

const char* kHc = R"(% Hamiltonian cycle in a directed graph, permutation encoding.
% Data: vtx/1, edge/2, index/1 (1..n); bind the constant n to |V|.
% The successor of position n wraps to position 1; the wrap-around is a
% separate rule because position arithmetic stays inside 1..n.
hc_perm(I,X) -> index(I).
hc_perm(I,X) -> vtx(X).
index(I) -> hc_perm(I,_).
hc_perm(I,X), hc_perm(I,Y) -> X = Y.
hc_perm(I,X), hc_perm(J,X) -> I = J.
hc_perm(I,X), hc_perm(I+1,Y) -> edge(X,Y).
hc_perm(n,X), hc_perm(1,Y) -> edge(X,Y).
)";

const char* kHcC = R"(% Hamiltonian cycle in a directed graph, edge-selection encoding with
% cardinality atoms and closure rules.
% Data: vtx/1, edge/2, start/1.
hc_edge(X,Y) -> edge(X,Y).
vtx(X) -> 1 { hc_edge(Y,X) : vtx(Y) } 1.
vtx(X) -> 1 { hc_edge(X,Y) : vtx(Y) } 1.
visit(Y) <- visit(X), hc_edge(X,Y).
visit(Y) <- start(Y).
vtx(X) -> visit(X).
)";

const char* kNqueens = R"(% n-queens, plain encoding.
% Data: index/1 (1..n).
q(R,C) -> index(R).
q(R,C) -> index(C).
index(R) -> q(R,_).
q(R,C1), q(R,C2) -> C1 = C2.
q(R1,C), q(R2,C) -> R1 = R2.
q(R,C), q(R+I,C+I) -> false.
q(R,C), q(R+I,C-I) -> false.
)";

const char* kNqueensC = R"(% n-queens with cardinality atoms, one per row, column and diagonal.
% Data: index/1 (1..n); bind the constant n to the board size.
q(R,C) -> index(R).
q(R,C) -> index(C).
index(R) -> 1 { q(R,C) : index(C) } 1.
index(C) -> 1 { q(R,C) : index(R) } 1.
index(R) -> { q(R+I-1,I) : index(I) } 1.
index(C) -> { q(I,C+I-1) : index(I) } 1.
index(R) -> { q(R-I+1,I) : index(I) } 1.
index(C) -> { q(n-I+1,C+I-1) : index(I) } 1.
)";

const char* kTc = R"(% Transitive closure of a directed graph via bounded paths.
% Data: vtx/1, edge/2, index/1 (1..|V|).
path(X,Y,Z,I) -> vtx(X).
path(X,Y,Z,I) -> vtx(Y).
path(X,Y,Z,I) -> vtx(Z).
path(X,Y,Z,I) -> index(I).
tc(X,Y) -> vtx(X).
tc(X,Y) -> vtx(Y).
path(X,Y,X,1) -> edge(X,Y).
edge(X,Y) -> path(X,Y,X,1).
path(X,Y,Z,1) -> X = Z.
path(X,Y,Z,I+1) -> path(X,Z,_,I).
path(X,Y,Z,I+1) -> edge(Z,Y).
path(X,Z,W,I), edge(Z,Y) -> path(X,Y,Z,I+1).
tc(X,Y) -> path(X,Y,_,_).
path(X,Y,Z,I) -> tc(X,Y).
)";

const std::pair<const char*, const char*> kEncodings[] = {
    {"color", kColor},     {"color_c", kColorC},     {"vc", kVc},
    {"vc_c", kVcC},        {"hc", kHc},              {"hc_c", kHcC},
    {"nqueens", kNqueens}, {"nqueens_c", kNqueensC}, {"tc", kTc},
};

Atom fact1(const std::string& pred, std::int64_t a) {
  Atom at;
  at.pred = pred;
  at.args = {Term::integer(a)};
  at.cls = PredClass::Data;
  return at;
}

Atom fact2(const std::string& pred, std::int64_t a, std::int64_t b) {
  Atom at;
  at.pred = pred;
  at.args = {Term::integer(a), Term::integer(b)};
  at.cls = PredClass::Data;
  return at;
}

std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n + 1, std::vector<bool>(g.n + 1, false));
  for (auto [x, y] : g.edges) {
    adj[x][y] = true;
    if (!g.directed) adj[y][x] = true;
  }
  return adj;
}

void capVertices(const Graph& g) {
  if (g.n > 12) throw Error(Errc::TooLarge, "oracle capped at 12 vertices");
}

} // namespace

const char* encoding(const std::string& name) {
  for (const auto& [key, text] : kEncodings)
    if (name == key) return text;
  throw Error(Errc::BadParams, "unknown encoding: " + name);
}

std::vector<std::string> encodingNames() {
  std::vector<std::string> out;
  for (const auto& [key, text] : kEncodings) out.push_back(key);
  return out;
}

Graph randomGraph(int n, int m, bool directed, std::uint64_t seed) {
  if (n < 1 || m < 0) throw Error(Errc::BadParams, "bad graph dimensions");
  std::int64_t avail = std::int64_t(n) * (n - 1);
  if (!directed) avail /= 2;
  if (m > avail) throw Error(Errc::BadParams, "too many edges requested");

  // Rejection sampling over distinct ordered pairs; the modulo reduction
  // keeps the draw deterministic across standard libraries.
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> picked;
  while (static_cast<int>(picked.size()) < m) {
    int x = static_cast<int>(rng() % std::uint64_t(n)) + 1;
    int y = static_cast<int>(rng() % std::uint64_t(n)) + 1;
    if (x == y) continue;
    if (!directed && x > y) std::swap(x, y);
    picked.emplace(x, y);
  }
  Graph g;
  g.n = n;
  g.directed = directed;
  g.edges.assign(picked.begin(), picked.end());
  return g;
}

std::vector<Atom> coloringData(const Graph& g, int k) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  for (int c = 1; c <= k; ++c) d.push_back(fact1("color", c));
  return d;
}

std::vector<Atom> vcData(const Graph& g, int k) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  for (int i = 1; i <= k; ++i) d.push_back(fact1("index", i));
  return d;
}

std::vector<Atom> vcDataC(const Graph& g, int k) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  d.push_back(fact1("size", k));
  return d;
}

std::vector<Atom> hcData(const Graph& g) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  for (int i = 1; i <= g.n; ++i) d.push_back(fact1("index", i));
  return d;
}

std::vector<Atom> hcDataC(const Graph& g) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  d.push_back(fact1("start", 1));
  return d;
}

std::vector<Atom> nqueensData(int n) {
  std::vector<Atom> d;
  for (int i = 1; i <= n; ++i) d.push_back(fact1("index", i));
  return d;
}

std::vector<Atom> tcData(const Graph& g) {
  std::vector<Atom> d;
  for (int v = 1; v <= g.n; ++v) d.push_back(fact1("vtx", v));
  for (auto [x, y] : g.edges) d.push_back(fact2("edge", x, y));
  for (int i = 1; i <= g.n; ++i) d.push_back(fact1("index", i));
  return d;
}

std::int64_t oracleColorings(const Graph& g, int k) {
  capVertices(g);
  if (k < 1 || k > 8) throw Error(Errc::TooLarge, "oracle capped at 8 colors");
  std::vector<int> col(g.n + 1, 1);
  std::int64_t count = 0;
  // Odometer over all k^n assignments.
  for (;;) {
    bool proper = true;
    for (auto [x, y] : g.edges)
      if (col[x] == col[y]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int i = 1;
    while (i <= g.n && col[i] == k) col[i++] = 1;
    if (i > g.n) break;
    ++col[i];
  }
  return count;
}

int oracleMinVertexCover(const Graph& g) {
  capVertices(g);
  int best = g.n;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (auto [x, y] : g.edges)
      if (!((mask >> (x - 1)) & 1) && !((mask >> (y - 1)) & 1)) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

std::int64_t oracleHamiltonianCycles(const Graph& g) {
  capVertices(g);
  if (!g.directed) throw Error(Errc::BadParams, "directed graph expected");
  if (g.n < 2) return 0;
  auto adj = adjacency(g);
  // Cycles counted once each: DFS over vertex sequences anchored at 1.
  std::vector<bool> used(g.n + 1, false);
  used[1] = true;
  std::int64_t count = 0;
  auto dfs = [&](auto&& self, int at, int depth) -> void {
    if (depth == g.n) {
      if (adj[at][1]) ++count;
      return;
    }
    for (int v = 2; v <= g.n; ++v)
      if (!used[v] && adj[at][v]) {
        used[v] = true;
        self(self, v, depth + 1);
        used[v] = false;
      }
  };
  dfs(dfs, 1, 1);
  return count;
}

std::int64_t oracleQueens(int n) {
  if (n < 1 || n > 8) throw Error(Errc::TooLarge, "oracle capped at 8 queens");
  std::vector<int> col(n + 1, 0);
  std::int64_t count = 0;
  auto dfs = [&](auto&& self, int row) -> void {
    if (row > n) {
      ++count;
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (int r = 1; r < row; ++r)
        if (col[r] == c || std::abs(col[r] - c) == row - r) {
          ok = false;
          break;
        }
      if (ok) {
        col[row] = c;
        self(self, row + 1);
      }
    }
  };
  dfs(dfs, 1);
  return count;
}

std::set<std::pair<int, int>> oracleTransitiveClosure(const Graph& g) {
  capVertices(g);
  auto reach = adjacency(g);
  for (int k = 1; k <= g.n; ++k)
    for (int i = 1; i <= g.n; ++i)
      for (int j = 1; j <= g.n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      if (reach[i][j]) out.emplace(i, j);
  return out;
}

PipelineRun runPipeline(const std::vector<Atom>& data, const std::string& programText,
                        const std::map<std::string, Term>& constants, std::int64_t maxModels,
                        bool keepModels) {
  PipelineRun run;
  DataProgramPair pair;
  pair.data = data;
  pair.rules = parseProgram(programText);
  pair.constants = constants;
  validate(pair);
  GroundTheory gt = groundPair(pair);
  try {
    simplifyToCore(gt);
  } catch (const Error& e) {
    if (e.code() != Errc::Inconsistent) throw;
    run.inconsistent = true;
    run.atoms = gt.atoms.size();
    return run;
  }
  run.atoms = gt.atoms.size();
  run.rules = gt.rules.size() + gt.vrules.size() + gt.horn.size();

  Solver solver(gt);
  run.models = solver.solve([&](const std::vector<int>& model) {
    if (keepModels) {
      std::vector<std::string> texts;
      for (int id : model) texts.push_back(gt.atomText[id]);
      std::sort(texts.begin(), texts.end());
      run.modelTexts.push_back(std::move(texts));
    }
    return maxModels < 0 || solver.stats().models < maxModels;
  });
  run.stats = solver.stats();
  return run;
}

PipelineRun runGroundOnly(const std::vector<Atom>& data, const std::string& programText,
                          const std::map<std::string, Term>& constants) {
  PipelineRun run;
  DataProgramPair pair;
  pair.data = data;
  pair.rules = parseProgram(programText);
  pair.constants = constants;
  validate(pair);
  GroundTheory gt = groundPair(pair);
  try {
    simplifyToCore(gt);
  } catch (const Error& e) {
    if (e.code() != Errc::Inconsistent) throw;
    run.inconsistent = true;
    run.atoms = gt.atoms.size();
    return run;
  }
  run.atoms = gt.atoms.size();
  run.rules = gt.rules.size() + gt.vrules.size() + gt.horn.size();
  return run;
}

int probeMinVertexCover(const Graph& g) {
  for (int k = g.n; k >= 0; --k) {
    PipelineRun run = runPipeline(vcDataC(g, k), encoding("vc_c"), {}, 1);
    if (run.inconsistent || run.models == 0) return k + 1;
  }
  return 0;
}

std::string runCsvSuite(std::uint64_t seed) {
  std::ostringstream csv;
  csv << "spec,variant,atoms,rules,core_size,models,decisions,time\n";
  auto row = [&](const std::string& spec, const std::string& variant, const PipelineRun& r) {
    csv << spec << ',' << variant << ',' << r.atoms << ',' << r.rules << ','
        << (r.atoms + r.rules) << ',' << r.models << ',' << r.stats.decisions << ','
        << r.stats.seconds << '\n';
  };

  Graph gcl = randomGraph(8, 16, false, seed);
  row("coloring n=8 m=16 k=3", "plain", runPipeline(coloringData(gcl, 3), encoding("color"), {}, -1));
  row("coloring n=8 m=16 k=3", "catom", runPipeline(coloringData(gcl, 3), encoding("color_c"), {}, -1));

  Graph gvc = randomGraph(10, 20, false, seed + 1);
  int k = probeMinVertexCover(gvc);
  std::string vcSpec = "vertex-cover n=10 m=20 k=" + std::to_string(k);
  row(vcSpec, "plain", runPipeline(vcData(gvc, k), encoding("vc"), {}, -1));
  row(vcSpec, "catom", runPipeline(vcDataC(gvc, k), encoding("vc_c"), {}, -1));

  Graph ghc = randomGraph(6, 12, true, seed + 2);
  std::map<std::string, Term> nbind{{"n", Term::integer(ghc.n)}};
  row("hamiltonian n=6 m=12", "plain", runPipeline(hcData(ghc), encoding("hc"), nbind, -1));
  row("hamiltonian n=6 m=12", "horn", runPipeline(hcDataC(ghc), encoding("hc_c"), {}, -1));

  std::map<std::string, Term> qbind{{"n", Term::integer(6)}};
  row("nqueens n=6", "plain", runPipeline(nqueensData(6), encoding("nqueens"), {}, -1));
  row("nqueens n=6", "catom", runPipeline(nqueensData(6), encoding("nqueens_c"), qbind, -1));

  Graph gtc = randomGraph(8, 16, true, seed + 3);
  row("transitive-closure n=8 m=16", "plain", runPipeline(tcData(gtc), encoding("tc"), {}, -1));
  return csv.str();
}

} // namespace bench
} // namespace psps
