//
// Copyright (c) 2026 The psps authors
//
// This file is part of psps, a grounder and solver for the logic of
// propositional schemata. Distributed under the MIT License.
//
#ifndef PSPS_ERROR_H
#define PSPS_ERROR_H

#include <optional>
#include <stdexcept>
#include <string>

namespace psps {

enum class Errc {
  Parse,
  EatomInBody,
  HornHeadInG,
  ProgramPredInSetcond,
  ArityMismatch,
  NongroundData,
  DataEatom,
  DuplicateConst,
  BadBinding,
  Overflow,
  Inconsistent,
  CatomPresent,
  HornPresent,
  UnknownVar,
  ModelMismatch,
  NotPure,
  BadParams,
  TooLarge,
  Io,
};

const char* errcName(Errc c);

// Location of a token inside a source file; line/column are 1-based.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errcName(code)) + ": " + message), code_(code) {}
  Error(Errc code, SourceSpan span, std::string message)
      : std::runtime_error(span.file + ":" + std::to_string(span.line) + ":" +
                           std::to_string(span.column) + ": " + errcName(code) + ": " + message),
        code_(code),
        span_(std::move(span)) {}

  Errc code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  Errc code_;
  std::optional<SourceSpan> span_;
};

} // namespace psps

#endif
