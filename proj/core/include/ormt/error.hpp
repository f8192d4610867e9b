// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_ERROR_HPP_
#define ORMT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ormt {

enum class ErrorKind {
  Syntax,
  DuplicateName,
  Undeclared,
  UnknownType,
  UnknownRole,
  UnknownSymbol,
  ArityNotation,
  ArityMismatch,
  Partiality,
  SchemaMismatch,
  TypeError,
  Cycle,
  Evaluation,
  Conformity,
  MissingRules,
  Applicability,
  IllFormedResult,
  UnsupportedPattern,
  DomainMismatch,
  VocabularyMismatch,
  SpaceExceeded,
  UnboundedDomain,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the 1-based source position of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ormt

#endif  // ORMT_ERROR_HPP_
