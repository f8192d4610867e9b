// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/error.hpp"

namespace ormt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::DuplicateName: return "duplicate name";
    case ErrorKind::Undeclared: return "reference to undeclared name";
    case ErrorKind::UnknownType: return "unknown type";
    case ErrorKind::UnknownRole: return "unknown role";
    case ErrorKind::UnknownSymbol: return "unknown symbol";
    case ErrorKind::ArityNotation: return "arity notation error";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::Partiality: return "partial instantiation";
    case ErrorKind::SchemaMismatch: return "schema mismatch";
    case ErrorKind::TypeError: return "type error";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::Evaluation: return "evaluation error";
    case ErrorKind::Conformity: return "conformity error";
    case ErrorKind::MissingRules: return "missing rules";
    case ErrorKind::Applicability: return "applicability violation";
    case ErrorKind::IllFormedResult: return "resulting schema ill-formed";
    case ErrorKind::UnsupportedPattern: return "unsupported pattern";
    case ErrorKind::DomainMismatch: return "domain mismatch";
    case ErrorKind::VocabularyMismatch: return "vocabulary mismatch";
    case ErrorKind::SpaceExceeded: return "state space exceeded";
    case ErrorKind::UnboundedDomain: return "unbounded domain";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(ErrorKind::Syntax, std::to_string(line) + ":" +
                                   std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace ormt
