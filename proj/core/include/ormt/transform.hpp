// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_TRANSFORM_HPP_
#define ORMT_TRANSFORM_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ormt/bounds.hpp"
#include "ormt/schema.hpp"
#include "ormt/scheme.hpp"

namespace ormt {

struct CleanupOptions {
  // Protect subtypes (x SubOf y) instead of types that have subtypes.
  bool pi_literal = false;
  // Constraints a transformation replaces; dropped once a type they
  // mention is removed.
  std::set<std::string> replaced;
};

// The sets computed by one cleanup step, named as in the cleanup formulas:
// D and U are the types with non-recursive derivation and update rules, P the
// protected types, R the removable derived types and UC the isolated ones.
struct CleanupStep {
  std::set<TypeId> D, U, P, R, UC;
  std::vector<Rule> RD, RU;
  std::set<TypeId> blocked;    // removable, but kept for a constraint that cannot be reduced
  std::set<TypeId> collapsed;  // rules that became the identity after substitution
  std::vector<std::string> dropped_constraints;
  std::vector<std::string> rewritten_constraints;
  std::set<TypeId> types_before;
  std::set<TypeId> types_after;

  std::set<TypeId> removed() const;
  bool changed() const;
};

struct CleanupTrace {
  std::vector<CleanupStep> steps;  // the last step is the fixpoint check
};

std::pair<Schema, CleanupStep> cleanup_step(const Schema& s, const CleanupOptions& opts = {});
Schema cleanup(const Schema& s, const CleanupOptions& opts = {}, CleanupTrace* trace = nullptr);

struct ReduceResult {
  std::vector<Constraint> constraints;
  std::vector<std::string> dropped;
  std::vector<std::string> rewritten;
  std::set<TypeId> blocking;  // removed types some kept constraint still needs
};

// Rewrites the constraints of `s` for the removal of `removed` (of which
// `isolated` are the isolated object types) whose rules are `rules`.
// Constraints on removed types are re-targeted through pure renamings,
// dropped when they hold on constant populations, only mention isolated
// types or are listed in `replaced`, and otherwise reported in `blocking`.
ReduceResult reduce(const Schema& s, const std::vector<Constraint>& cs,
                    const std::set<TypeId>& removed, const std::set<TypeId>& isolated,
                    const std::vector<Rule>& rules, const std::set<std::string>& replaced = {});

// Drops constraints whose removal leaves the state space unchanged at the
// given bounds. Sound at those bounds only.
std::vector<std::string> drop_derivable_constraints(Schema& s, const DomainBounds& b);

enum class Mode { Alternative, Enrich, Optimise };
std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

struct ApplicabilityReport {
  bool rule1_preserves_correctness = true;
  bool rule2_changed_types_present_nonderived = true;
  bool rule3_new_types_fresh = true;
  std::vector<std::string> witnesses;

  bool upfront_ok() const {
    return rule2_changed_types_present_nonderived && rule3_new_types_fresh;
  }
};

// Rules 2 and 3, checked before anything is built.
ApplicabilityReport check_applicability(const InstantiatedTransformation& inst, const Schema& s);

// The schema before cleanup: `s` united with the To side of `inst`, with the
// internal types chosen by `mode`.
Schema combine(const InstantiatedTransformation& inst, const Schema& s, Mode mode);

struct ApplyResult {
  Schema schema;
  ApplicabilityReport report;
  CleanupTrace trace;
};

// Throws Applicability when rule 2 or 3 fails and IllFormedResult when a
// well-formed input yields an ill-formed result.
ApplyResult apply_transformation(const InstantiatedTransformation& inst, const Schema& s, Mode mode,
                                 const CleanupOptions& opts = {});

Schema apply_alternative(const InstantiatedTransformation& inst, const Schema& s);
Schema apply_enrich(const InstantiatedTransformation& inst, const Schema& s);
Schema apply_optimise(const InstantiatedTransformation& inst, const Schema& s);

}  // namespace ormt

#endif  // ORMT_TRANSFORM_HPP_
