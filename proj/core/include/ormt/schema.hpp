// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_SCHEMA_HPP_
#define ORMT_SCHEMA_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ormt/constraint.hpp"
#include "ormt/rule.hpp"
#include "ormt/universe.hpp"

namespace ormt {

struct SchemaVersion {
  std::set<TypeId> types;
  std::set<TypeId> internal;
  std::vector<Constraint> constraints;  // ordered by id
  std::vector<Rule> derivation_rules;   // ordered by defined type
  std::vector<Rule> update_rules;
  std::map<TypeId, DomainDecl> dom;  // value type -> domain

  const Rule* derivation_for(const TypeId& t) const;
  const Rule* update_for(const TypeId& t) const;
  bool is_derived(const TypeId& t) const { return derivation_for(t) != nullptr; }

  friend bool operator==(const SchemaVersion&, const SchemaVersion&) = default;
};

struct Schema {
  std::string name;
  Universe universe;
  SchemaVersion version;

  // Sorts rules and constraints so that equal schemas compare equal.
  void canonicalize();

  friend bool operator==(const Schema&, const Schema&) = default;
};

// Relationship types and non-value object types carry populations of their
// own; value types are populated through the roles they play.
bool populatable(const Universe& u, const TypeId& t);

// Types whose population follows from others: those with a derivation
// rule, plus those fixed by a constant update rule and no derivation rule.
std::set<TypeId> derived_types(const Schema& s);
// Constant rules from either rule set, keyed by defined type.
std::vector<Rule> context_rules(const Schema& s);

WellFormedReport is_sch(const Schema& s);
// Universe axioms followed by the schema axioms.
WellFormedReport validate_schema(const Schema& s);

// Strict parsing rejects duplicate and undeclared names. Deferred parsing
// keeps them so that validate_schema can report the axiom they violate.
enum class NameCheck { Strict, Deferred };

Schema parse_schema(std::string_view source, NameCheck names = NameCheck::Strict);
std::string serialize_schema(const Schema& s);

Schema load_schema(const std::string& path, NameCheck names = NameCheck::Strict);
std::string read_file(const std::string& path);

}  // namespace ormt

#endif  // ORMT_SCHEMA_HPP_
