//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "psps/bench.h"
#include "psps/parser.h"

using namespace psps;
using namespace psps::bench;

TEST_CASE("shipped encodings match the program files") {
  for (const auto& name : encodingNames()) {
    std::string path = std::string(PSPS_SOURCE_DIR) + "/encodings/" + name + ".ps";
    CHECK(readFile(path) == encoding(name));
  }
}

TEST_CASE("every encoding parses") {
  for (const auto& name : encodingNames()) CHECK_FALSE(parseProgram(encoding(name)).empty());
}

TEST_CASE("random graphs are reproducible and simple") {
  Graph a = randomGraph(10, 20, false, 7);
  Graph b = randomGraph(10, 20, false, 7);
  CHECK(a.edges == b.edges);
  Graph c = randomGraph(10, 20, false, 8);
  CHECK(a.edges != c.edges);
  CHECK(a.edges.size() == 20);
  for (auto [x, y] : a.edges) {
    CHECK(x != y);
    CHECK(x < y); // undirected edges are normalized
    CHECK(1 <= x);
    CHECK(y <= 10);
  }
  Graph d = randomGraph(5, 15, true, 1);
  bool sawBack = false;
  for (auto [x, y] : d.edges)
    if (x > y) sawBack = true;
  CHECK(sawBack);
}

TEST_CASE("impossible edge counts are rejected") {
  CHECK_THROWS_AS(randomGraph(4, 7, false, 1), Error);  // max 6
  CHECK_THROWS_AS(randomGraph(4, 13, true, 1), Error);  // max 12
  CHECK_THROWS_AS(randomGraph(0, 0, false, 1), Error);
}

TEST_CASE("coloring oracle on known graphs") {
  Graph k3;
  k3.n = 3;
  k3.edges = {{1, 2}, {1, 3}, {2, 3}};
  CHECK(oracleColorings(k3, 3) == 6);
  CHECK(oracleColorings(k3, 2) == 0);
  Graph empty2;
  empty2.n = 2;
  CHECK(oracleColorings(empty2, 3) == 9);
}

TEST_CASE("vertex cover oracle on known graphs") {
  Graph path3; // 1-2-3: cover {2}
  path3.n = 3;
  path3.edges = {{1, 2}, {2, 3}};
  CHECK(oracleMinVertexCover(path3) == 1);
  Graph k3;
  k3.n = 3;
  k3.edges = {{1, 2}, {1, 3}, {2, 3}};
  CHECK(oracleMinVertexCover(k3) == 2);
  Graph none;
  none.n = 4;
  CHECK(oracleMinVertexCover(none) == 0);
}

TEST_CASE("hamiltonian oracle on known digraphs") {
  Graph cyc3;
  cyc3.n = 3;
  cyc3.directed = true;
  cyc3.edges = {{1, 2}, {2, 3}, {3, 1}};
  CHECK(oracleHamiltonianCycles(cyc3) == 1);
  Graph both3 = cyc3;
  both3.edges = {{1, 2}, {2, 3}, {3, 1}, {2, 1}, {3, 2}, {1, 3}};
  CHECK(oracleHamiltonianCycles(both3) == 2);
  Graph split;
  split.n = 4;
  split.directed = true;
  split.edges = {{1, 2}, {2, 1}, {3, 4}, {4, 3}};
  CHECK(oracleHamiltonianCycles(split) == 0);
}

TEST_CASE("queens oracle matches the known sequence") {
  CHECK(oracleQueens(4) == 2);
  CHECK(oracleQueens(5) == 10);
  CHECK(oracleQueens(6) == 4);
  CHECK(oracleQueens(7) == 40);
  CHECK(oracleQueens(8) == 92);
  CHECK_THROWS_AS(oracleQueens(9), Error);
}

TEST_CASE("transitive closure oracle on a chain") {
  Graph chain;
  chain.n = 3;
  chain.directed = true;
  chain.edges = {{1, 2}, {2, 3}};
  std::set<std::pair<int, int>> expect{{1, 2}, {2, 3}, {1, 3}};
  CHECK(oracleTransitiveClosure(chain) == expect);
  Graph loop = chain;
  loop.edges.push_back({3, 1});
  CHECK(oracleTransitiveClosure(loop).size() == 9);
}

TEST_CASE("pipeline counts triangle colorings") {
  Graph k3;
  k3.n = 3;
  k3.edges = {{1, 2}, {1, 3}, {2, 3}};
  PipelineRun plain = runPipeline(coloringData(k3, 3), encoding("color"), {}, -1);
  PipelineRun catom = runPipeline(coloringData(k3, 3), encoding("color_c"), {}, -1);
  CHECK(plain.models == 6);
  CHECK(catom.models == 6);
}

TEST_CASE("probing finds the minimum cover") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = randomGraph(6, 9, false, seed);
    CHECK(probeMinVertexCover(g) == oracleMinVertexCover(g));
  }
}

TEST_CASE("kept models expose their atoms") {
  PipelineRun run = runPipeline(nqueensData(4), encoding("nqueens"), {}, -1, true);
  CHECK(run.models == 2);
  REQUIRE(run.modelTexts.size() == 2);
  for (const auto& m : run.modelTexts) CHECK(m.size() == 4);
}

TEST_CASE("csv suite has the documented shape") {
  std::string csv = runCsvSuite(3);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "spec,variant,atoms,rules,core_size,models,decisions,time");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);
}
