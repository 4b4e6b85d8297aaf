//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_PARSER_H
#define PSPS_PARSER_H

#include <string>
#include <vector>

#include "psps/ast.h"

namespace psps {

// Ground facts, one per statement; range sugar p(1..3) expands per
// argument; duplicates removed. Throws Error(Errc::Parse) and
// Error(Errc::NongroundData).
std::vector<Atom> parseData(const std::string& text, const std::string& filename = "<data>");

// Rules in source order. Facts may omit "true ->", constraints end in
// "false", Horn rules are written head <- body. Throws Error(Errc::Parse).
std::vector<Rule> parseProgram(const std::string& text, const std::string& filename = "<program>");

// "name=value" bindings; value is an integer or a symbolic constant.
// Throws Error with Errc::BadBinding or Errc::DuplicateConst.
std::map<std::string, Term> parseConstants(const std::vector<std::string>& args);

std::string readFile(const std::string& path); // Errc::Io on failure

} // namespace psps

#endif
