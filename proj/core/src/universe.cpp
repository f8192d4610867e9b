// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/universe.hpp"

#include <algorithm>
#include <functional>

#include "ormt/error.hpp"

namespace ormt {
namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

AxiomResult result(std::string group, std::string_view name) {
  AxiomResult r;
  r.group = std::move(group);
  r.name = std::string(name);
  return r;
}

void fail(AxiomResult& r, const std::string& witness) {
  if (!r.passed) return;  // keep the first witness
  r.passed = false;
  r.witness = witness;
}

}  // namespace

std::optional<TypeId> Universe::rel_of(const RoleId& r) const {
  for (const auto& [rel, rs] : roles_of) {
    if (std::find(rs.begin(), rs.end(), r) != rs.end()) return rel;
  }
  return std::nullopt;
}

const std::vector<RoleId>& Universe::role_list(const TypeId& rel) const {
  auto it = roles_of.find(rel);
  if (it == roles_of.end()) {
    throw Error(ErrorKind::UnknownType, "'" + rel + "' is not a relationship type");
  }
  return it->second;
}

std::size_t Universe::role_index(const TypeId& rel, const RoleId& r) const {
  const auto& rs = role_list(rel);
  auto it = std::find(rs.begin(), rs.end(), r);
  if (it == rs.end()) {
    throw Error(ErrorKind::UnknownRole, "'" + r + "' is not a role of " + rel);
  }
  return static_cast<std::size_t>(it - rs.begin());
}

std::vector<RoleId> Universe::roles_played_by(const TypeId& t) const {
  std::vector<RoleId> out;
  for (const auto& [role, p] : player) {
    if (p == t) out.push_back(role);
  }
  return out;
}

std::set<TypeId> Universe::supertypes(const TypeId& x) const {
  std::set<TypeId> out;
  for (const auto& [a, b] : sub_of) {
    if (a == x) out.insert(b);
  }
  return out;
}

std::set<TypeId> Universe::subtypes(const TypeId& x) const {
  std::set<TypeId> out;
  for (const auto& [a, b] : sub_of) {
    if (b == x) out.insert(a);
  }
  return out;
}

std::set<TypeId> Universe::types() const {
  std::set<TypeId> out = object_types;
  out.insert(relationship_types.begin(), relationship_types.end());
  return out;
}

void Universe::add_relationship(
    const TypeId& rel, const std::vector<std::pair<TypeId, RoleId>>& rs) {
  relationship_types.insert(rel);
  auto& list = roles_of[rel];
  list.clear();
  for (const auto& [p, r] : rs) {
    list.push_back(r);
    roles.insert(r);
    player[r] = p;
  }
}

SubOfRelation transitive_closure(const SubOfRelation& pairs) {
  SubOfRelation closed = pairs;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<TypeId, TypeId>> add;
    for (const auto& [a, b] : closed) {
      for (auto it = closed.lower_bound({b, std::string()});
           it != closed.end() && it->first == b; ++it) {
        if (!closed.count({a, it->second})) add.emplace_back(a, it->second);
      }
    }
    for (auto& p : add) grew |= closed.insert(std::move(p)).second;
  }
  return closed;
}

SubOfRelation transitive_reduction(const SubOfRelation& closed) {
  SubOfRelation out;
  for (const auto& [x, y] : closed) {
    bool direct = true;
    for (const auto& [a, z] : closed) {
      if (a == x && z != y && closed.count({z, y})) {
        direct = false;
        break;
      }
    }
    if (direct) out.emplace(x, y);
  }
  return out;
}

bool sub_of_1(const Universe& u, const TypeId& x, const TypeId& y) {
  for (const TypeId* t : {&x, &y}) {
    if (!u.declares(*t)) throw Error(ErrorKind::UnknownType, *t);
  }
  if (!u.sub(x, y)) return false;
  for (const auto& z : u.supertypes(x)) {
    if (z != y && u.sub(z, y)) return false;
  }
  return true;
}

Universe restrict_universe(const Universe& u, const std::set<TypeId>& keep) {
  Universe out;
  for (const auto& t : u.object_types) {
    if (keep.count(t)) out.object_types.insert(t);
  }
  for (const auto& t : u.value_types) {
    if (keep.count(t)) out.value_types.insert(t);
  }
  for (const auto& [t, d] : u.domain_of) {
    if (keep.count(t)) out.domain_of.emplace(t, d);
  }
  for (const auto& rel : u.relationship_types) {
    if (!keep.count(rel)) continue;
    out.relationship_types.insert(rel);
    auto it = u.roles_of.find(rel);
    if (it == u.roles_of.end()) continue;
    out.roles_of[rel] = it->second;
    for (const auto& r : it->second) {
      out.roles.insert(r);
      auto p = u.player.find(r);
      if (p != u.player.end()) out.player.emplace(r, p->second);
    }
  }
  for (const auto& [a, b] : u.sub_of) {
    if (keep.count(a) && keep.count(b)) out.sub_of.emplace(a, b);
  }
  return out;
}

void merge_universe(Universe& into, const Universe& extra) {
  for (const auto& t : extra.object_types) {
    if (into.is_object(t) && into.is_value(t) != extra.is_value(t)) {
      throw Error(ErrorKind::DuplicateName,
                  "'" + t + "' is declared both as value and entity type");
    }
  }
  for (const auto& t : extra.object_types) {
    if (into.is_relationship(t)) {
      throw Error(ErrorKind::DuplicateName,
                  "'" + t + "' is declared both as object and relationship type");
    }
    into.object_types.insert(t);
  }
  for (const auto& t : extra.value_types) into.value_types.insert(t);
  for (const auto& [t, d] : extra.domain_of) {
    auto [it, fresh] = into.domain_of.emplace(t, d);
    if (!fresh && it->second != d) {
      throw Error(ErrorKind::DuplicateName,
                  "value type '" + t + "' has domains " + it->second +
                      " and " + d);
    }
  }
  for (const auto& rel : extra.relationship_types) {
    if (into.is_object(rel)) {
      throw Error(ErrorKind::DuplicateName,
                  "'" + rel + "' is declared both as object and relationship type");
    }
    auto it = extra.roles_of.find(rel);
    const std::vector<RoleId> rs =
        it == extra.roles_of.end() ? std::vector<RoleId>{} : it->second;
    if (into.is_relationship(rel)) {
      if (into.roles_of[rel] != rs) {
        throw Error(ErrorKind::DuplicateName,
                    "relationship type '" + rel + "' redeclared with other roles");
      }
    }
    into.relationship_types.insert(rel);
    into.roles_of[rel] = rs;
    for (const auto& r : rs) {
      auto owner = into.rel_of(r);
      if (owner && *owner != rel) {
        throw Error(ErrorKind::DuplicateName,
                    "role '" + r + "' belongs to " + *owner + " and " + rel);
      }
      const TypeId& p = extra.player.at(r);
      auto [pit, fresh] = into.player.emplace(r, p);
      if (!fresh && pit->second != p) {
        throw Error(ErrorKind::DuplicateName,
                    "role '" + r + "' played by both " + pit->second + " and " + p);
      }
      into.roles.insert(r);
    }
  }
  into.sub_of.insert(extra.sub_of.begin(), extra.sub_of.end());
  into.sub_of = transitive_closure(into.sub_of);
}

bool AxiomReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name || r.label() == name) return &r;
  }
  return nullptr;
}

std::vector<AxiomResult> AxiomReport::failures() const {
  std::vector<AxiomResult> out;
  for (const auto& r : results) {
    if (!r.passed) out.push_back(r);
  }
  return out;
}

void AxiomReport::append(const AxiomReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

AxiomReport validate_universe(const Universe& u) {
  AxiomReport report;

  auto exclusion = result("ISU", axiom::kTypeExclusion);
  for (const auto& t : u.relationship_types) {
    if (u.object_types.count(t)) fail(exclusion, t);
  }
  for (const auto& v : u.value_types) {
    if (!u.object_types.count(v)) fail(exclusion, v + " is a value type but not an object type");
  }
  for (const auto& r : u.roles) {
    if (u.declares(r)) fail(exclusion, r + " names both a role and a type");
  }
  report.results.push_back(exclusion);

  auto transitive = result("ISU", axiom::kTransitive);
  for (const auto& [a, b] : u.sub_of) {
    for (const auto& c : u.supertypes(b)) {
      if (!u.sub(a, c)) fail(transitive, "missing " + a + " SUBOF " + c);
    }
  }
  report.results.push_back(transitive);

  // Irreflexivity is judged on the closure so that a cycle stored without
  // its reflexive consequence is still caught, with the cycle as witness.
  auto irreflexive = result("ISU", axiom::kIrreflexive);
  SubOfRelation closed = transitive_closure(u.sub_of);
  std::map<TypeId, std::vector<TypeId>> up;
  for (const auto& [a, b] : u.sub_of) up[a].push_back(b);
  for (const auto& [a, b] : closed) {
    if (a != b) continue;
    std::vector<TypeId> path{a};
    std::set<TypeId> seen;
    std::function<bool(const TypeId&)> walk = [&](const TypeId& x) -> bool {
      for (const auto& y : up[x]) {
        if (y == a) {
          path.push_back(a);
          return true;
        }
        if (!seen.insert(y).second) continue;
        path.push_back(y);
        if (walk(y)) return true;
        path.pop_back();
      }
      return false;
    };
    walk(a);
    fail(irreflexive, "cycle " + join(path, " -> "));
    break;
  }
  report.results.push_back(irreflexive);

  auto separation = result("ISU", axiom::kSeparation);
  for (const auto& [a, b] : u.sub_of) {
    if (u.is_value(a) != u.is_value(b)) {
      fail(separation, a + " SUBOF " + b + " mixes value and non-value types");
    }
  }
  report.results.push_back(separation);

  // Well-foundedness of the subtype hierarchy over object types only.
  auto identification = result("ISU", axiom::kIdentification);
  for (const auto& [a, b] : u.sub_of) {
    for (const TypeId* t : {&a, &b}) {
      if (!u.is_object(*t)) fail(identification, *t + " in SUBOF is not an object type");
    }
  }
  {
    std::map<TypeId, int> state;
    std::function<bool(const TypeId&)> cyclic = [&](const TypeId& x) -> bool {
      state[x] = 1;
      for (const auto& y : up[x]) {
        if (state[y] == 1) return true;
        if (state[y] == 0 && cyclic(y)) return true;
      }
      state[x] = 2;
      return false;
    };
    for (const auto& [a, b] : up) {
      if (state[a] == 0 && cyclic(a)) {
        fail(identification, "infinite descending chain through " + a);
        break;
      }
    }
  }
  report.results.push_back(identification);

  auto partition = result("ISU", axiom::kRolesPartition);
  std::map<RoleId, int> owners;
  for (const auto& [rel, rs] : u.roles_of) {
    if (!u.relationship_types.count(rel)) fail(partition, rel + " has roles but is not a relationship type");
    if (rs.empty()) fail(partition, rel + " has no roles");
    for (const auto& r : rs) {
      ++owners[r];
      if (!u.roles.count(r)) fail(partition, r + " in " + rel + " is not a declared role");
    }
  }
  for (const auto& rel : u.relationship_types) {
    if (!u.roles_of.count(rel)) fail(partition, rel + " has no roles");
  }
  for (const auto& r : u.roles) {
    if (owners[r] != 1) {
      fail(partition, r + " belongs to " + std::to_string(owners[r]) + " relationship types");
    }
  }
  report.results.push_back(partition);

  auto typing = result("ISU", axiom::kPlayerTyping);
  for (const auto& r : u.roles) {
    auto it = u.player.find(r);
    if (it == u.player.end()) {
      fail(typing, r + " has no player");
    } else if (!u.declares(it->second)) {
      fail(typing, r + " is played by undeclared " + it->second);
    }
  }
  report.results.push_back(typing);
  return report;
}

WellFormedReport is_is(const Universe& u, const std::set<TypeId>& typeset) {
  for (const auto& t : typeset) {
    if (!u.declares(t)) throw Error(ErrorKind::UnknownType, t);
  }
  WellFormedReport report;

  auto players = result("ISV", axiom::kRolePlayers);
  for (const auto& t : typeset) {
    if (!u.is_relationship(t)) continue;
    auto it = u.roles_of.find(t);
    if (it == u.roles_of.end()) continue;
    for (const auto& r : it->second) {
      auto p = u.player.find(r);
      if (p != u.player.end() && !typeset.count(p->second)) {
        fail(players, r + " of " + t + " is played by absent " + p->second);
      }
    }
  }
  report.results.push_back(players);

  auto supers = result("ISV", axiom::kSupertypes);
  for (const auto& t : typeset) {
    auto sups = u.supertypes(t);
    if (sups.empty()) continue;
    bool present = std::any_of(sups.begin(), sups.end(),
                               [&](const TypeId& s) { return typeset.count(s) > 0; });
    if (!present) fail(supers, t + " has supertypes but none is present");
  }
  report.results.push_back(supers);

  auto connected = result("ISV", axiom::kConnectivity);
  if (typeset.empty()) {
    fail(connected, "empty type set");
  } else {
    std::map<TypeId, std::set<TypeId>> adj;
    for (const auto& t : typeset) adj[t];
    for (const auto& [r, p] : u.player) {
      auto rel = u.rel_of(r);
      if (rel && typeset.count(*rel) && typeset.count(p)) {
        adj[*rel].insert(p);
        adj[p].insert(*rel);
      }
    }
    for (const auto& [a, b] : u.sub_of) {
      if (typeset.count(a) && typeset.count(b)) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
    std::map<TypeId, int> component;
    int count = 0;
    for (const auto& t : typeset) {
      if (component.count(t)) continue;
      std::vector<TypeId> stack{t};
      component[t] = count;
      while (!stack.empty()) {
        TypeId x = stack.back();
        stack.pop_back();
        for (const auto& y : adj[x]) {
          if (component.emplace(y, count).second) stack.push_back(y);
        }
      }
      ++count;
    }
    if (count > 1) {
      std::vector<std::string> parts(static_cast<std::size_t>(count));
      for (const auto& [t, c] : component) {
        auto& part = parts[static_cast<std::size_t>(c)];
        part += part.empty() ? t : ", " + t;
      }
      for (auto& p : parts) p = "{" + p + "}";
      fail(connected, std::to_string(count) + " components: " + join(parts, " "));
    }
  }
  report.results.push_back(connected);
  return report;
}

}  // namespace ormt
