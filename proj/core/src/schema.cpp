// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/schema.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "ormt/error.hpp"

namespace ormt {
namespace {

const Rule* find_rule(const std::vector<Rule>& rules, const TypeId& t) {
  for (const auto& r : rules) {
    if (r.defines == t) return &r;
  }
  return nullptr;
}

AxiomResult entry(std::string_view name) {
  AxiomResult r;
  r.group = "CSV";
  r.name = std::string(name);
  return r;
}

void fail(AxiomResult& r, const std::string& witness) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = witness;
}

}  // namespace

const Rule* SchemaVersion::derivation_for(const TypeId& t) const {
  return find_rule(derivation_rules, t);
}

const Rule* SchemaVersion::update_for(const TypeId& t) const {
  return find_rule(update_rules, t);
}

void Schema::canonicalize() {
  auto by_id = [](const Constraint& a, const Constraint& b) { return a.id < b.id; };
  std::stable_sort(version.constraints.begin(), version.constraints.end(), by_id);
  auto by_type = [](const Rule& a, const Rule& b) { return a.defines < b.defines; };
  std::stable_sort(version.derivation_rules.begin(), version.derivation_rules.end(), by_type);
  std::stable_sort(version.update_rules.begin(), version.update_rules.end(), by_type);
}

bool populatable(const Universe& u, const TypeId& t) {
  return u.is_relationship(t) || u.is_entity(t);
}

std::set<TypeId> derived_types(const Schema& s) {
  std::set<TypeId> out;
  for (const auto& r : s.version.derivation_rules) out.insert(r.defines);
  for (const auto& r : s.version.update_rules) {
    if (!out.count(r.defines) && is_constant(r.body)) out.insert(r.defines);
  }
  return out;
}

std::vector<Rule> context_rules(const Schema& s) {
  std::vector<Rule> out;
  std::set<TypeId> seen;
  for (const auto* rules : {&s.version.derivation_rules, &s.version.update_rules}) {
    for (const auto& r : *rules) {
      if (is_constant(r.body) && seen.insert(r.defines).second) out.push_back(r);
    }
  }
  return out;
}

WellFormedReport is_sch(const Schema& s) {
  const Universe& u = s.universe;
  const SchemaVersion& v = s.version;
  WellFormedReport report;

  auto declared = entry("declared types");
  for (const auto& t : v.types) {
    if (!u.declares(t)) fail(declared, t + " is not declared in the universe");
  }
  report.results.push_back(declared);

  auto domains = entry(axiom::kDomainAssignment);
  for (const auto& t : v.types) {
    if (u.is_value(t) && !v.dom.count(t)) {
      auto d = u.domain_of.find(t);
      fail(domains, t + (d == u.domain_of.end() ? " has no domain"
                                                : " has undeclared domain " + d->second));
    }
  }
  report.results.push_back(domains);

  auto unique = entry(axiom::kUniqueRules);
  for (const auto* rules : {&v.derivation_rules, &v.update_rules}) {
    std::map<TypeId, int> count;
    for (const auto& r : *rules) {
      if (++count[r.defines] == 2) {
        fail(unique, std::string(rules == &v.derivation_rules ? "derivation" : "update") +
                         " rules define " + r.defines + " more than once");
      }
    }
  }
  report.results.push_back(unique);

  auto internal = entry(axiom::kInternalTypes);
  for (const auto& t : v.internal) {
    if (!v.types.count(t)) fail(internal, t + " is internal but not in the schema");
  }
  report.results.push_back(internal);

  // Every populatable internal type is maintained by an update rule. A
  // non-value object type has no rule of its own; its population follows
  // from the relationship types it plays in, so playing a role in an
  // update-maintained type suffices.
  auto completeness = entry(axiom::kUpdateCompleteness);
  for (const auto& t : v.internal) {
    if (!v.types.count(t) || !populatable(u, t) || v.update_for(t)) continue;
    bool covered = false;
    if (u.is_entity(t)) {
      for (const auto& role : u.roles_played_by(t)) {
        auto rel = u.rel_of(role);
        if (rel && v.types.count(*rel) && v.update_for(*rel)) covered = true;
      }
    }
    if (!covered) fail(completeness, "internal type " + t + " has no update rule");
  }
  report.results.push_back(completeness);

  auto refs = entry(axiom::kRuleReferences);
  for (const auto* rules : {&v.derivation_rules, &v.update_rules}) {
    for (const auto& r : *rules) {
      if (!v.types.count(r.defines)) fail(refs, "rule defines absent type " + r.defines);
      if (!populatable(u, r.defines)) fail(refs, "rule defines value type " + r.defines);
      for (const auto& d : depends(r)) {
        if (!v.types.count(d)) fail(refs, "rule for " + r.defines + " refers to absent " + d);
      }
    }
  }
  report.results.push_back(refs);

  auto acyclic = entry(axiom::kAcyclicDerivation);
  {
    std::map<TypeId, std::set<TypeId>> deps;
    for (const auto& r : v.derivation_rules) {
      auto d = relation_refs(r.body);
      deps[r.defines].insert(d.begin(), d.end());
    }
    std::map<TypeId, int> state;
    std::vector<TypeId> path;
    std::function<bool(const TypeId&)> visit = [&](const TypeId& t) -> bool {
      state[t] = 1;
      path.push_back(t);
      for (const auto& d : deps[t]) {
        if (state[d] == 1) {
          path.push_back(d);
          return true;
        }
        if (state[d] == 0 && deps.count(d) && visit(d)) return true;
      }
      path.pop_back();
      state[t] = 2;
      return false;
    };
    for (const auto& [t, ds] : deps) {
      if (state[t] == 0 && visit(t)) {
        std::string cycle;
        for (const auto& p : path) cycle += (cycle.empty() ? "" : " -> ") + p;
        fail(acyclic, "derivation cycle " + cycle);
        break;
      }
    }
  }
  report.results.push_back(acyclic);

  auto crefs = entry(axiom::kConstraintReferences);
  for (const auto& c : v.constraints) {
    for (const auto& r : referenced_roles(c)) {
      auto rel = u.rel_of(r);
      if (!rel) {
        fail(crefs, c.id + " refers to unknown role " + r);
      } else if (!v.types.count(*rel)) {
        fail(crefs, c.id + " refers to role " + r + " of absent " + *rel);
      }
    }
    if (!c.type.empty() && !v.types.count(c.type)) {
      fail(crefs, c.id + " refers to absent type " + c.type);
    }
  }
  report.results.push_back(crefs);

  std::set<TypeId> known;
  for (const auto& t : v.types) {
    if (u.declares(t)) known.insert(t);
  }
  report.append(is_is(u, known));
  return report;
}

WellFormedReport validate_schema(const Schema& s) {
  WellFormedReport report = validate_universe(s.universe);
  report.append(is_sch(s));
  return report;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Schema load_schema(const std::string& path, NameCheck names) {
  return parse_schema(read_file(path), names);
}

}  // namespace ormt
