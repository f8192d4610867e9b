// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>

#include "ormt/constraint_eval.hpp"
#include "ormt/equivalence.hpp"
#include "ormt/error.hpp"
#include "ormt/eval.hpp"
#include "ormt/normal_form.hpp"
#include "ormt/transform.hpp"

namespace ormt {
namespace {

bool subset_of(const std::set<TypeId>& a, const std::set<TypeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Bodies of the removed types, with references among them expanded.
std::map<TypeId, RuleExpr> expanded_bodies(const std::vector<Rule>& rules) {
  std::vector<Rule> chosen;
  for (const auto& r : rules) {
    auto same = [&](const Rule& q) { return q.defines == r.defines; };
    auto it = std::find_if(chosen.begin(), chosen.end(), same);
    if (it == chosen.end()) {
      chosen.push_back(r);
    } else if (r.kind == RuleKind::Derivation) {
      *it = r;
    }
  }
  std::map<TypeId, RuleExpr> out;
  try {
    for (const auto& r : substitute(chosen, chosen)) out.emplace(r.defines, r.body);
  } catch (const Error&) {
    // Cyclic bodies have no expansion; the constraints on them stay blocked.
  }
  return out;
}

// An internal object type all of whose roles belong to removed relationship
// types; the next cleanup step removes it as isolated.
bool left_isolated(const Schema& s, const TypeId& t, const std::set<TypeId>& removed) {
  const Universe& u = s.universe;
  if (!s.version.internal.count(t) || u.is_relationship(t)) return false;
  for (const auto& [a, b] : u.sub_of) {
    if ((a == t || b == t) && a != b) return false;
  }
  for (const auto& [r, player] : u.player) {
    if (player != t) continue;
    auto rel = u.rel_of(r);
    if (rel && s.version.types.count(*rel) && !removed.count(*rel)) return false;
  }
  return true;
}

// Evaluates `c` on the constant populations of the removed relationship
// types it mentions. Players take exactly the instances those rows use.
std::optional<bool> holds_on_constants(const Constraint& c, const Schema& s,
                                       const std::map<TypeId, RuleExpr>& bodies,
                                       const std::set<TypeId>& removed) {
  const Universe& u = s.universe;
  Population p;
  for (const auto& t : referenced_types(c, u)) {
    if (!u.is_relationship(t)) return std::nullopt;
    auto body = bodies.find(t);
    if (body == bodies.end() || !is_constant(body->second)) return std::nullopt;
    Relation rel = eval_rule(body->second, Population{}, u);
    for (const auto& row : rel.rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        p.objects[u.player.at(rel.columns()[i])].insert(row[i]);
      }
    }
    p.relations.emplace(t, std::move(rel));
  }
  if (c.kind == ConstraintKind::Mandatory) {
    for (const auto& r : c.roles) {
      const TypeId& player = u.player.at(r);
      if (!u.is_value(player) && !removed.count(player) && !left_isolated(s, player, removed)) {
        return std::nullopt;
      }
    }
  }
  Schema mini;
  mini.universe = u;
  for (const auto& [t, _] : p.objects) mini.version.types.insert(t);
  for (const auto& [t, _] : p.relations) mini.version.types.insert(t);
  return !check_constraint(c, mini, p).has_value();
}

// A uniqueness constraint over every role of one relationship type holds in
// every population, since relations are sets.
bool spans_relationship(const Constraint& c, const Universe& u) {
  if (c.kind != ConstraintKind::Unique && c.kind != ConstraintKind::ExternalUnique) return false;
  if (c.roles.empty()) return false;
  auto rel = u.rel_of(c.roles.front());
  if (!rel) return false;
  std::set<RoleId> mine(c.roles.begin(), c.roles.end());
  const auto& all = u.role_list(*rel);
  return mine == std::set<RoleId>(all.begin(), all.end());
}

std::optional<Constraint> retarget(const Constraint& c, const Universe& u,
                                   const std::map<TypeId, RuleExpr>& bodies,
                                   const std::set<TypeId>& gone, const std::set<TypeId>& removed) {
  Constraint out = c;
  for (const auto& t : gone) {
    auto body = bodies.find(t);
    if (body == bodies.end()) return std::nullopt;
    auto ren = nf::as_renaming(nf::normalize(body->second, u), u);
    if (!ren || removed.count(ren->base)) return std::nullopt;
    out = rename_roles(out, ren->roles);
    if (out.type == t) {
      if (c.kind != ConstraintKind::CardEq) return std::nullopt;
      out.type = ren->base;
    }
  }
  return out;
}

}  // namespace

ReduceResult reduce(const Schema& s, const std::vector<Constraint>& cs,
                    const std::set<TypeId>& removed, const std::set<TypeId>& isolated,
                    const std::vector<Rule>& rules, const std::set<std::string>& replaced) {
  const Universe& u = s.universe;
  const auto bodies = expanded_bodies(rules);
  ReduceResult out;
  for (const auto& c : cs) {
    const std::set<TypeId> refs = referenced_types(c, u);
    std::set<TypeId> gone;
    for (const auto& t : refs) {
      if (removed.count(t)) gone.insert(t);
    }
    if (gone.empty()) {
      out.constraints.push_back(c);
      continue;
    }
    if (subset_of(refs, isolated) || spans_relationship(c, u) || replaced.count(c.id)) {
      out.dropped.push_back(c.id);
      continue;
    }
    if (auto holds = holds_on_constants(c, s, bodies, removed)) {
      if (*holds) {
        out.dropped.push_back(c.id);
      } else {
        out.constraints.push_back(c);
        out.blocking.insert(gone.begin(), gone.end());
      }
      continue;
    }
    if (auto moved = retarget(c, u, bodies, gone, removed)) {
      out.rewritten.push_back(c.id + ": " + constraint_text(*moved));
      out.constraints.push_back(std::move(*moved));
      continue;
    }
    out.constraints.push_back(c);
    out.blocking.insert(gone.begin(), gone.end());
  }
  return out;
}

std::vector<std::string> drop_derivable_constraints(Schema& s, const DomainBounds& b) {
  std::vector<std::string> dropped;
  std::size_t i = 0;
  while (i < s.version.constraints.size()) {
    Schema without = s;
    without.version.constraints.erase(without.version.constraints.begin() +
                                      static_cast<std::ptrdiff_t>(i));
    if (check_direct_equivalence(s, without, b).comparison == Comparison::Equivalent) {
      dropped.push_back(s.version.constraints[i].id);
      s = std::move(without);
    } else {
      ++i;
    }
  }
  return dropped;
}

}  // namespace ormt
