// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_CONSTRAINT_HPP_
#define ORMT_CONSTRAINT_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ormt/instance.hpp"
#include "ormt/lexer.hpp"
#include "ormt/universe.hpp"

namespace ormt {

enum class ConstraintKind {
  Unique,
  Mandatory,
  EachIsIn,
  Frequency,
  Exclusion,
  Subset,
  Equality,
  ExternalUnique,
  CardEq,
};

struct Constraint {
  std::string id;
  ConstraintKind kind = ConstraintKind::Unique;
  std::vector<RoleId> roles;  // Frequency uses roles[0]; Exclusion's left set
  std::vector<RoleId> other;  // Exclusion's right set
  std::vector<std::pair<RoleId, RoleId>> pairs;  // Subset (lhs -> rhs), Equality
  TypeId type;                                   // EachIsIn, CardEq
  std::vector<Literal> values;                   // EachIsIn
  std::int64_t lo = 0;  // Frequency minimum; CardEq count
  std::int64_t hi = 0;  // Frequency maximum

  static Constraint unique(std::string id, std::vector<RoleId> roles);
  static Constraint mandatory(std::string id, std::vector<RoleId> roles);
  static Constraint each_is_in(std::string id, TypeId type, std::vector<Literal> values);
  static Constraint frequency(std::string id, RoleId role, std::int64_t lo, std::int64_t hi);
  static Constraint exclusion(std::string id, std::vector<RoleId> a, std::vector<RoleId> b);
  static Constraint subset(std::string id, std::vector<std::pair<RoleId, RoleId>> pairs);
  static Constraint equality(std::string id, std::vector<std::pair<RoleId, RoleId>> pairs);
  static Constraint external_unique(std::string id, std::vector<RoleId> roles);
  static Constraint card(std::string id, TypeId type, std::int64_t n);

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

std::set<RoleId> referenced_roles(const Constraint& c);
// Types named directly plus the relationship types of referenced roles.
std::set<TypeId> referenced_types(const Constraint& c, const Universe& u);
Constraint rename_roles(const Constraint& c, const std::map<RoleId, RoleId>& to);

// Body text without the id, e.g. "UNIQUE {won-gold-in-1}".
std::string constraint_text(const Constraint& c);
Constraint parse_constraint(text::TokenStream& ts, std::string id);
Constraint parse_constraint(std::string_view body, std::string id);

}  // namespace ormt

#endif  // ORMT_CONSTRAINT_HPP_
