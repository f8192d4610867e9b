// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_UNIVERSE_HPP_
#define ORMT_UNIVERSE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ormt/instance.hpp"

namespace ormt {

struct DomainDecl {
  std::string name;
  std::optional<std::vector<Literal>> values;  // nullopt: unbounded

  bool bounded() const { return values.has_value(); }

  friend bool operator==(const DomainDecl&, const DomainDecl&) = default;
};

using SubOfRelation = std::set<std::pair<TypeId, TypeId>>;

// The information structure universe. Value types are also object types.
// sub_of holds the transitive relation; (x, y) means x is a subtype of y.
struct Universe {
  std::set<TypeId> object_types;
  std::set<TypeId> value_types;
  std::set<TypeId> relationship_types;
  std::set<RoleId> roles;
  std::map<TypeId, std::vector<RoleId>> roles_of;
  std::map<RoleId, TypeId> player;
  SubOfRelation sub_of;
  std::map<TypeId, std::string> domain_of;  // value type -> domain name

  bool is_object(const TypeId& t) const { return object_types.count(t) > 0; }
  bool is_value(const TypeId& t) const { return value_types.count(t) > 0; }
  bool is_entity(const TypeId& t) const { return is_object(t) && !is_value(t); }
  bool is_relationship(const TypeId& t) const {
    return relationship_types.count(t) > 0;
  }
  bool declares(const TypeId& t) const {
    return is_object(t) || is_relationship(t);
  }
  bool has_role(const RoleId& r) const { return roles.count(r) > 0; }

  // Relationship type owning the role, or nullopt for unknown roles.
  std::optional<TypeId> rel_of(const RoleId& r) const;
  const std::vector<RoleId>& role_list(const TypeId& rel) const;
  std::size_t role_index(const TypeId& rel, const RoleId& r) const;
  std::vector<RoleId> roles_played_by(const TypeId& t) const;

  bool sub(const TypeId& x, const TypeId& y) const {
    return sub_of.count({x, y}) > 0;
  }
  std::set<TypeId> supertypes(const TypeId& x) const;
  std::set<TypeId> subtypes(const TypeId& x) const;
  std::set<TypeId> types() const;

  // Declares a relationship type with (player, role) pairs in role order.
  void add_relationship(const TypeId& rel,
                        const std::vector<std::pair<TypeId, RoleId>>& roles);

  friend bool operator==(const Universe&, const Universe&) = default;
};

SubOfRelation transitive_closure(const SubOfRelation& pairs);
SubOfRelation transitive_reduction(const SubOfRelation& closed);

// x is a direct subtype of y: x below y with nothing in between.
bool sub_of_1(const Universe& u, const TypeId& x, const TypeId& y);

// Restricts a universe to the given types; roles of dropped relationship
// types disappear with them.
Universe restrict_universe(const Universe& u, const std::set<TypeId>& keep);

// Adds every declaration of `extra` not yet present. Conflicting
// declarations (same role, different player or relationship) are errors.
void merge_universe(Universe& into, const Universe& extra);

struct AxiomResult {
  std::string group;  // ISU, ISV or CSV
  std::string name;
  bool passed = true;
  std::string witness;

  std::string label() const { return group + " " + name; }
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* find(std::string_view name) const;
  std::vector<AxiomResult> failures() const;
  void append(const AxiomReport& other);
};

using WellFormedReport = AxiomReport;

namespace axiom {
inline constexpr std::string_view kTypeExclusion = "type exclusion";
inline constexpr std::string_view kTransitive = "transitive";
inline constexpr std::string_view kIrreflexive = "irreflexive";
inline constexpr std::string_view kSeparation = "separation";
inline constexpr std::string_view kIdentification = "identification induction";
inline constexpr std::string_view kRolesPartition = "roles partition";
inline constexpr std::string_view kPlayerTyping = "player typing";
inline constexpr std::string_view kRolePlayers = "role player presence";
inline constexpr std::string_view kSupertypes = "supertype presence";
inline constexpr std::string_view kConnectivity = "connectivity";
inline constexpr std::string_view kDomainAssignment = "complete domain assignment";
inline constexpr std::string_view kUniqueRules = "unique rules";
inline constexpr std::string_view kUpdateCompleteness = "update rule completeness";
inline constexpr std::string_view kInternalTypes = "internal types";
inline constexpr std::string_view kRuleReferences = "rule references";
inline constexpr std::string_view kAcyclicDerivation = "derivation acyclicity";
inline constexpr std::string_view kConstraintReferences = "constraint references";
}  // namespace axiom

AxiomReport validate_universe(const Universe& u);
WellFormedReport is_is(const Universe& u, const std::set<TypeId>& typeset);

}  // namespace ormt

#endif  // ORMT_UNIVERSE_HPP_
