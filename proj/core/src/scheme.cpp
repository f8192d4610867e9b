// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>

#include "ormt/error.hpp"
#include "ormt/scheme.hpp"

namespace ormt {
namespace {

std::set<TypeId> listed_types(const InstantiatedTransformation& inst,
                              const std::vector<std::string>& names) {
  std::set<TypeId> out;
  for (const auto& n : names) {
    if (inst.universe.declares(n)) out.insert(n);
  }
  return out;
}

Schema fragment(const InstantiatedTransformation& inst, const std::set<TypeId>& types) {
  std::set<TypeId> keep = types;
  for (const auto& t : types) {
    if (!inst.universe.is_relationship(t)) continue;
    for (const auto& r : inst.universe.role_list(t)) keep.insert(inst.universe.player.at(r));
  }
  Schema s;
  s.name = inst.scheme_name;
  s.universe = restrict_universe(inst.universe, keep);
  s.version.types = types;
  for (const auto& [t, d] : inst.dom) {
    if (keep.count(t)) s.version.dom.emplace(t, d);
  }
  return s;
}

std::string joined(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace

std::set<TypeId> InstantiatedTransformation::types() const { return universe.types(); }

std::set<TypeId> InstantiatedTransformation::from_types() const { return listed_types(*this, from); }

std::set<TypeId> InstantiatedTransformation::to_types() const { return listed_types(*this, to); }

std::vector<Constraint> InstantiatedTransformation::constraints_named(
    const std::vector<std::string>& names) const {
  std::vector<Constraint> out;
  for (const auto& c : constraints) {
    if (std::find(names.begin(), names.end(), c.id) != names.end()) out.push_back(c);
  }
  return out;
}

std::optional<std::string> InstantiatedTransformation::binding(const std::string& key) const {
  for (const auto& [k, v] : bindings) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Schema from_of(const InstantiatedTransformation& inst) {
  Schema s = fragment(inst, inst.from_types());
  s.version.constraints = inst.constraints_named(inst.from);
  s.canonicalize();
  return s;
}

Schema to_of(const InstantiatedTransformation& inst) {
  Schema s = fragment(inst, inst.to_types());
  s.version.constraints = inst.constraints_named(inst.to);
  s.version.derivation_rules = inst.derivation_rules;
  s.version.update_rules = inst.update_rules;
  s.canonicalize();
  return s;
}

Schema sch_of(const InstantiatedTransformation& inst) {
  Schema s;
  s.name = inst.scheme_name;
  s.universe = inst.universe;
  s.version.types = inst.types();
  s.version.constraints = inst.constraints;
  s.version.derivation_rules = inst.derivation_rules;
  s.version.dom = inst.dom;
  s.canonicalize();
  return s;
}

InstantiatedTransformation invert(const InstantiatedTransformation& inst) {
  if (inst.derivation_rules.empty() || inst.update_rules.empty()) {
    throw Error(ErrorKind::MissingRules,
                inst.scheme_name + " needs both derivation and update rules to be inverted");
  }
  InstantiatedTransformation out = inst;
  std::swap(out.from, out.to);
  out.derivation_rules = inst.update_rules;
  out.update_rules = inst.derivation_rules;
  for (auto& r : out.derivation_rules) r.kind = RuleKind::Derivation;
  for (auto& r : out.update_rules) r.kind = RuleKind::Update;
  out.inverted = !inst.inverted;
  return out;
}

std::string serialize_instantiated(const InstantiatedTransformation& inst) {
  std::string out = "Transformation schema " + inst.scheme_name + ";\n";
  if (inst.property) out += "  Property: " + *inst.property + ";\n";
  if (!inst.object_types.empty()) out += "  Object types:\n    " + joined(inst.object_types, ", ") + ";\n";
  if (!inst.value_types.empty()) {
    std::vector<std::string> vs;
    for (const auto& [t, d] : inst.value_types) vs.push_back(t + ": " + d);
    out += "  Value types:\n    " + joined(vs, ", ") + ";\n";
  }
  if (!inst.relationship_types.empty()) {
    out += "  Relationship types:\n";
    for (std::size_t i = 0; i < inst.relationship_types.size(); ++i) {
      const auto& rel = inst.relationship_types[i];
      std::vector<std::string> rs;
      for (const auto& r : inst.universe.role_list(rel)) rs.push_back(inst.universe.player.at(r) + ":" + r);
      out += "    " + rel + " = [" + joined(rs, ", ") + "];\n";
    }
  }
  if (!inst.constraints.empty()) {
    out += "  Constraints:\n";
    for (const auto& c : inst.constraints) out += "    " + c.id + ": " + constraint_text(c) + ";\n";
  }
  if (!inst.from.empty()) out += "  From: " + joined(inst.from, ", ") + ";\n";
  if (!inst.to.empty()) out += "  To: " + joined(inst.to, ", ") + ";\n";
  auto rules = [&](const std::string& header, const std::vector<Rule>& rs) {
    if (rs.empty()) return;
    out += "  " + header + ":\n";
    for (const auto& r : rs) out += "    " + r.defines + " = " + to_string(r.body) + ";\n";
  };
  rules("Derivation rules", inst.derivation_rules);
  rules("Update rules", inst.update_rules);
  out += "End Transformation schema.\n";
  return out;
}

}  // namespace ormt
