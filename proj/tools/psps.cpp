//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
// Command line front end. Exit codes: 0 success (and count-only mode),
// 2 input or usage errors, 3 clausal export refused, 10 satisfiable,
// 20 unsatisfiable.
//
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psps/bench.h"
#include "psps/dimacs.h"
#include "psps/ground.h"
#include "psps/parser.h"
#include "psps/solver.h"
#include "psps/translate.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitRefused = 3;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

struct Options {
  std::vector<std::string> dataFiles;
  std::vector<std::string> programFiles;
  std::vector<std::string> bindings;
  std::string outFile;
  std::string coreFile;
  std::string dimacsFile;
  std::string mapFile;
  std::int64_t maxModels = 1;
  std::string show;
  bool stats = false;
  std::uint64_t seed = 1;
};

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw psps::Error(psps::Errc::Io, "cannot write " + path);
  out << text;
}

psps::DataProgramPair loadPair(const Options& opt) {
  psps::DataProgramPair pair;
  for (const auto& f : opt.dataFiles) {
    auto facts = psps::parseData(psps::readFile(f), f);
    pair.data.insert(pair.data.end(), facts.begin(), facts.end());
  }
  for (const auto& f : opt.programFiles) {
    auto rules = psps::parseProgram(psps::readFile(f), f);
    pair.rules.insert(pair.rules.end(), rules.begin(), rules.end());
  }
  pair.constants = psps::parseConstants(opt.bindings);
  psps::validate(pair);
  return pair;
}

psps::GroundTheory loadCore(const Options& opt, bool& inconsistent) {
  inconsistent = false;
  if (!opt.coreFile.empty())
    return psps::readGnd(psps::readFile(opt.coreFile), opt.coreFile);
  psps::DataProgramPair pair = loadPair(opt);
  psps::GroundTheory gt = psps::groundPair(pair);
  try {
    psps::simplifyToCore(gt);
  } catch (const psps::Error& e) {
    if (e.code() != psps::Errc::Inconsistent) throw;
    inconsistent = true;
  }
  return gt;
}

std::vector<std::string> splitShow(const std::string& show) {
  std::vector<std::string> preds;
  std::stringstream ss(show);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) preds.push_back(item);
  return preds;
}

void printStats(const psps::SolverStats& s) {
  std::cout << "c decisions " << s.decisions << "\n"
            << "c propagations " << s.propagations << "\n"
            << "c conflicts " << s.conflicts << "\n"
            << "c backtracks " << s.backtracks << "\n"
            << "c verifications " << s.verifications << "\n"
            << "c models " << s.models << "\n"
            << "c seconds " << s.seconds << "\n";
}

int cmdGround(const Options& opt) {
  psps::DataProgramPair pair = loadPair(opt);
  psps::GroundTheory gt = psps::groundPair(pair);
  try {
    psps::simplifyToCore(gt);
  } catch (const psps::Error& e) {
    if (e.code() != psps::Errc::Inconsistent) throw;
    std::cout << "c inconsistent during grounding\n";
    return kExitUnsat;
  }
  writeOut(opt.outFile, psps::writeGnd(gt));
  std::cerr << "c atoms " << gt.atoms.size() << " rules "
            << (gt.rules.size() + gt.vrules.size() + gt.horn.size()) << "\n";
  return kExitOk;
}

int cmdSolve(const Options& opt) {
  bool inconsistent = false;
  psps::GroundTheory gt = loadCore(opt, inconsistent);
  if (inconsistent) {
    if (opt.maxModels == 0) {
      std::cout << "c models 0\n";
      return kExitOk;
    }
    if (opt.stats) printStats(psps::SolverStats{});
    return kExitUnsat;
  }

  auto preds = splitShow(opt.show);
  auto visible = [&](int id) {
    if (preds.empty()) return true;
    const std::string& p = gt.atoms[id].pred;
    return std::find(preds.begin(), preds.end(), p) != preds.end();
  };

  psps::Solver solver(gt);
  bool countOnly = opt.maxModels == 0;
  std::int64_t found = solver.solve([&](const std::vector<int>& model) {
    if (!countOnly) {
      std::vector<std::string> texts;
      for (int id : model)
        if (visible(id)) texts.push_back(gt.atomText[id]);
      std::sort(texts.begin(), texts.end());
      std::ostringstream line;
      for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i) line << ' ';
        line << texts[i];
      }
      std::cout << line.str() << "\n";
    }
    return countOnly || solver.stats().models < opt.maxModels;
  });
  if (opt.stats) printStats(solver.stats());
  if (countOnly) {
    std::cout << "c models " << found << "\n";
    return kExitOk;
  }
  return found > 0 ? kExitSat : kExitUnsat;
}

int cmdCnf(const Options& opt) {
  bool inconsistent = false;
  psps::GroundTheory gt = loadCore(opt, inconsistent);
  if (inconsistent) {
    // An inconsistent core has no clausal form; emit the trivial
    // contradiction so downstream SAT solvers agree.
    writeOut(opt.dimacsFile.empty() ? opt.outFile : opt.dimacsFile, "p cnf 1 2\n1 0\n-1 0\n");
    if (!opt.mapFile.empty()) writeOut(opt.mapFile, "");
    return kExitOk;
  }
  psps::CnfExport ex;
  try {
    ex = psps::exportCnf(gt);
  } catch (const psps::Error& e) {
    if (e.code() != psps::Errc::CatomPresent && e.code() != psps::Errc::HornPresent) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  }
  writeOut(opt.dimacsFile.empty() ? opt.outFile : opt.dimacsFile, ex.cnf);
  if (!opt.mapFile.empty()) writeOut(opt.mapFile, ex.map.write(gt));
  return kExitOk;
}

int cmdTranslate(const Options& opt) {
  psps::PureProgram prog;
  for (const auto& f : opt.programFiles) {
    auto part = psps::parseDatalog(psps::readFile(f), f);
    prog.clauses.insert(prog.clauses.end(), part.clauses.begin(), part.clauses.end());
  }
  psps::checkPure(prog);
  std::vector<psps::Rule> rules = psps::toPs(prog);
  if (opt.dataFiles.empty()) {
    writeOut(opt.outFile, psps::printProgram(rules));
    return kExitOk;
  }
  std::vector<psps::Atom> data;
  for (const auto& f : opt.dataFiles) {
    auto facts = psps::parseData(psps::readFile(f), f);
    data.insert(data.end(), facts.begin(), facts.end());
  }
  std::set<std::string> show;
  for (const auto& p : splitShow(opt.show)) show.insert(p);
  if (show.empty())
    for (const auto& p : prog.intentional) show.insert(p);
  auto models = psps::supportedModels(data, prog, show);
  std::ostringstream out;
  for (const auto& m : models) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out << ' ';
      out << psps::printAtom(m[i]);
    }
    out << "\n";
  }
  writeOut(opt.outFile, out.str());
  return models.empty() ? kExitUnsat : kExitSat;
}

int cmdBench(const Options& opt) {
  writeOut(opt.outFile, psps::bench::runCsvSuite(opt.seed));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"grounder and solver for the logic of propositional schemata"};
  app.require_subcommand(1);
  Options opt;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("-d", opt.dataFiles, "data file (repeatable)");
    sub->add_option("-p", opt.programFiles, "program file (repeatable)");
    sub->add_option("-c", opt.bindings, "constant binding name=value (repeatable)");
    sub->add_option("-o", opt.outFile, "output file (default stdout)");
  };

  CLI::App* ground = app.add_subcommand("ground", "compute the ground core");
  addCommon(ground);

  CLI::App* solve = app.add_subcommand("solve", "enumerate models");
  addCommon(solve);
  solve->add_option("--core", opt.coreFile, "solve a ground core file");
  solve->add_option("--models", opt.maxModels, "model limit, 0 counts only (default 1)");
  solve->add_option("--show", opt.show, "comma separated predicates to print");
  solve->add_flag("--stats", opt.stats, "print search statistics");

  CLI::App* cnf = app.add_subcommand("cnf", "export the core in DIMACS format");
  addCommon(cnf);
  cnf->add_option("--core", opt.coreFile, "export a ground core file");
  cnf->add_option("--dimacs", opt.dimacsFile, "CNF output file");
  cnf->add_option("--map", opt.mapFile, "variable map output file");

  CLI::App* translate = app.add_subcommand("translate", "translate a pure logic program");
  addCommon(translate);
  translate->add_option("--show", opt.show, "comma separated predicates to keep");

  CLI::App* benchCmd = app.add_subcommand("bench", "run the benchmark suite, CSV output");
  benchCmd->add_option("-o", opt.outFile, "output file (default stdout)");
  benchCmd->add_option("--seed", opt.seed, "instance generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ground->parsed()) return cmdGround(opt);
    if (solve->parsed()) return cmdSolve(opt);
    if (cnf->parsed()) return cmdCnf(opt);
    if (translate->parsed()) return cmdTranslate(opt);
    if (benchCmd->parsed()) return cmdBench(opt);
  } catch (const psps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
