//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_BENCH_H
#define PSPS_BENCH_H

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "psps/ast.h"
#include "psps/ground.h"
#include "psps/solver.h"

namespace psps {
namespace bench {

// Shipped encodings, keyed "color", "color_c", "vc", "vc_c", "hc",
// "hc_c", "nqueens", "nqueens_c", "tc". The files under encodings/
// carry the same text (kept in sync by a test).
const char* encoding(const std::string& name);
std::vector<std::string> encodingNames();

struct Graph {
  int n = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> edges; // vertices 1..n
};

// Uniform simple graph without loops or duplicate edges; deterministic
// in (n, m, directed, seed). Throws Errc::BadParams when m exceeds the
// number of available edges.
Graph randomGraph(int n, int m, bool directed, std::uint64_t seed);

// Data builders for the shipped encodings. Vertices are the integers
// 1..n, as are color, index and position values.
std::vector<Atom> coloringData(const Graph& g, int k);
std::vector<Atom> vcData(const Graph& g, int k);  // index(1..k)
std::vector<Atom> vcDataC(const Graph& g, int k); // size(k)
std::vector<Atom> hcData(const Graph& g);         // index(1..n); bind n=|V|
std::vector<Atom> hcDataC(const Graph& g);        // start(1)
std::vector<Atom> nqueensData(int n);
std::vector<Atom> tcData(const Graph& g);         // index(1..n)

// Exhaustive oracles, independent of the solving pipeline. Caps
// (12 vertices, 8 queens) are enforced with Errc::TooLarge.
std::int64_t oracleColorings(const Graph& g, int k);
int oracleMinVertexCover(const Graph& g);
std::int64_t oracleHamiltonianCycles(const Graph& g); // directed, counted once per cycle
std::int64_t oracleQueens(int n);
std::set<std::pair<int, int>> oracleTransitiveClosure(const Graph& g);

struct PipelineRun {
  std::int64_t models = 0;
  std::size_t atoms = 0;
  std::size_t rules = 0; // generating + verifying + Horn after simplification
  bool inconsistent = false;
  SolverStats stats;
  std::vector<std::vector<std::string>> modelTexts; // filled when kept
};

// Parses, validates, grounds, simplifies and solves. maxModels < 0
// counts all models; keepModels retains the printed true program atoms
// of every model.
PipelineRun runPipeline(const std::vector<Atom>& data, const std::string& programText,
                        const std::map<std::string, Term>& constants, std::int64_t maxModels,
                        bool keepModels = false);

// Ground-only variant (atom/rule counts, no search).
PipelineRun runGroundOnly(const std::vector<Atom>& data, const std::string& programText,
                          const std::map<std::string, Term>& constants);

// Minimum cover size found by probing k = n, n-1, ... with the c-atom
// encoding until UNSAT; returns the last satisfiable k.
int probeMinVertexCover(const Graph& g);

// CSV rows for the default benchmark matrix (header included).
std::string runCsvSuite(std::uint64_t seed);

} // namespace bench
} // namespace psps

#endif
