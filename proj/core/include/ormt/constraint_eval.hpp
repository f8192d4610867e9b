// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_CONSTRAINT_EVAL_HPP_
#define ORMT_CONSTRAINT_EVAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ormt/population.hpp"
#include "ormt/schema.hpp"

namespace ormt {

// A base population assigns the non-derived populatable types only; a full
// population assigns every type of the schema.
enum class PopKind { Base, Full };

struct Violation {
  std::string what;  // constraint id or invariant name
  std::string witness;
};

struct PopVerdict {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Returns a witness when `c` is violated by the full population `p`.
std::optional<std::string> check_constraint(const Constraint& c, const Schema& s,
                                            const Population& p);
bool eval_constraint(const Constraint& c, const Schema& s, const Population& p);

// Base types of a schema: entity types and relationship types without a
// derivation or context rule.
std::set<TypeId> base_types(const Schema& s);

// Evaluates derivation and context rules in dependency order, then induces
// value-type populations from the roles they play.
Population extend_with_derivations(const Schema& s, const Population& base);

PopVerdict is_pop(const Schema& s, const Population& p, PopKind kind);

// Instance invariants and constraints of a full population whose derived
// parts are already consistent. With `first_only` the check stops at the
// first violation.
PopVerdict check_full_population(const Schema& s, const Population& p, bool first_only = false);

}  // namespace ormt

#endif  // ORMT_CONSTRAINT_EVAL_HPP_
