// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_NORMAL_FORM_HPP_
#define ORMT_NORMAL_FORM_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ormt/instance.hpp"
#include "ormt/rule.hpp"
#include "ormt/universe.hpp"

// Rule bodies as unions of conjunctive queries. The rule language has no
// negation, so equivalence of two bodies reduces to mutual containment of
// their conjunctive parts, decided by homomorphism search.
namespace ormt::nf {

struct NTerm {
  enum class Kind : std::uint8_t { Var, Const, ValOf };

  Kind kind = Kind::Var;
  std::uint32_t var = 0;  // Var, and the argument of ValOf
  Instance constant;      // Const
  TypeId type;            // ValOf

  static NTerm variable(std::uint32_t v);
  static NTerm of(Instance c);
  static NTerm val_of(TypeId t, std::uint32_t v);

  friend auto operator<=>(const NTerm&, const NTerm&) = default;
  friend bool operator==(const NTerm&, const NTerm&) = default;
};

struct Atom {
  TypeId rel;
  std::vector<NTerm> args;  // in the relation's role order

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct CQ {
  std::vector<Atom> atoms;
  std::map<RoleId, NTerm> out;
  std::uint32_t vars = 0;

  friend bool operator==(const CQ&, const CQ&) = default;
};

using UCQ = std::vector<CQ>;

// Unsatisfiable disjuncts (clashing constants) are dropped.
UCQ normalize(const RuleExpr& e, const Universe& u);

// Every answer of `a` is an answer of `b`.
bool contained_in(const CQ& a, const CQ& b);
bool contained_in(const UCQ& a, const UCQ& b);
bool equivalent(const UCQ& a, const UCQ& b);
bool equivalent(const RuleExpr& a, const RuleExpr& b, const Universe& u);

// A single atom whose columns are output one-to-one under new names.
// Returns output role -> role of the underlying relation.
struct Renaming {
  TypeId base;
  std::map<RoleId, RoleId> roles;
};
std::optional<Renaming> as_renaming(const UCQ& q, const Universe& u);

// Bodies without atoms denote a fixed set of tuples.
std::optional<std::vector<std::map<RoleId, Instance>>> as_constant(const UCQ& q);

std::string to_string(const CQ& q);

}  // namespace ormt::nf

#endif  // ORMT_NORMAL_FORM_HPP_
