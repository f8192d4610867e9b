// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/constraint_eval.hpp"

#include <functional>
#include <map>

#include "ormt/error.hpp"
#include "ormt/eval.hpp"

namespace ormt {
namespace {

std::string row_text(const Row& row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + to_string(row[i]);
  return s + ")";
}

const Relation& relation_of(const Schema& s, const Population& p, const RoleId& role) {
  auto rel = s.universe.rel_of(role);
  if (!rel) throw Error(ErrorKind::UnknownRole, role);
  auto it = p.relations.find(*rel);
  if (it == p.relations.end()) {
    throw Error(ErrorKind::Evaluation, "population lacks " + *rel);
  }
  return it->second;
}

// Tuples of the relation owning `roles`, projected onto them in order. All
// roles must belong to one relationship type.
std::vector<Row> project(const Schema& s, const Population& p, const std::vector<RoleId>& roles) {
  if (roles.empty()) return {};
  const Relation& r = relation_of(s, p, roles.front());
  std::vector<std::size_t> idx;
  for (const auto& role : roles) {
    auto i = r.column_index(role);
    if (!i) {
      throw Error(ErrorKind::UnsupportedPattern,
                  "roles " + roles.front() + " and " + role + " lie in different relationships");
    }
    idx.push_back(*i);
  }
  std::vector<Row> out;
  for (const auto& row : r.rows()) {
    Row proj;
    for (auto i : idx) proj.push_back(row[i]);
    out.push_back(std::move(proj));
  }
  return out;
}

std::set<Row> project_set(const Schema& s, const Population& p, const std::vector<RoleId>& roles) {
  auto rows = project(s, p, roles);
  return {rows.begin(), rows.end()};
}

std::set<Instance> column(const Schema& s, const Population& p, const RoleId& role) {
  std::set<Instance> out;
  for (auto& row : project(s, p, {role})) out.insert(row[0]);
  return out;
}

const std::set<Instance>& objects_of(const Population& p, const TypeId& t) {
  static const std::set<Instance> kEmpty;
  auto it = p.objects.find(t);
  return it == p.objects.end() ? kEmpty : it->second;
}

std::optional<std::string> check_unique(const Schema& s, const Population& p,
                                        const std::vector<RoleId>& roles) {
  std::set<Row> seen;
  for (auto& row : project(s, p, roles)) {
    if (!seen.insert(row).second) return "two tuples share " + row_text(row);
  }
  return std::nullopt;
}

// Roles spread over two relationship types that share a player: the
// combination of role values must identify one instance of that player.
std::optional<std::string> check_external_unique(const Schema& s, const Population& p,
                                                 const std::vector<RoleId>& roles) {
  const Universe& u = s.universe;
  std::map<TypeId, std::vector<RoleId>> by_rel;
  for (const auto& r : roles) {
    auto rel = u.rel_of(r);
    if (!rel) throw Error(ErrorKind::UnknownRole, r);
    by_rel[*rel].push_back(r);
  }
  if (by_rel.size() == 1) return check_unique(s, p, roles);
  auto unsupported = [&]() -> Error {
    return Error(ErrorKind::UnsupportedPattern,
                 "external uniqueness needs two relationship types joined by one shared player");
  };
  if (by_rel.size() != 2) throw unsupported();
  auto first = by_rel.begin();
  auto second = std::next(first);
  auto free_roles = [&](const TypeId& rel, const std::vector<RoleId>& used) {
    std::vector<RoleId> out;
    for (const auto& r : u.role_list(rel)) {
      if (std::find(used.begin(), used.end(), r) == used.end()) out.push_back(r);
    }
    return out;
  };
  auto fa = free_roles(first->first, first->second);
  auto fb = free_roles(second->first, second->second);
  if (fa.size() != 1 || fb.size() != 1 || u.player.at(fa[0]) != u.player.at(fb[0])) {
    throw unsupported();
  }
  std::vector<RoleId> cols_a = first->second;
  cols_a.push_back(fa[0]);
  std::vector<RoleId> cols_b = second->second;
  cols_b.push_back(fb[0]);
  auto rows_a = project(s, p, cols_a);
  auto rows_b = project(s, p, cols_b);
  std::map<Row, std::set<Instance>> key_to_join;
  for (const auto& ra : rows_a) {
    for (const auto& rb : rows_b) {
      if (ra.back() != rb.back()) continue;
      std::map<RoleId, Instance> bound;
      for (std::size_t i = 0; i + 1 < ra.size(); ++i) bound.emplace(cols_a[i], ra[i]);
      for (std::size_t i = 0; i + 1 < rb.size(); ++i) bound.emplace(cols_b[i], rb[i]);
      Row key;
      for (const auto& r : roles) key.push_back(bound.at(r));
      auto& joined = key_to_join[key];
      joined.insert(ra.back());
      if (joined.size() > 1) return "combination " + row_text(key) + " is not unique";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_constraint(const Constraint& c, const Schema& s,
                                            const Population& p) {
  const Universe& u = s.universe;
  switch (c.kind) {
    case ConstraintKind::Unique:
      return check_unique(s, p, c.roles);
    case ConstraintKind::ExternalUnique:
      return check_external_unique(s, p, c.roles);
    case ConstraintKind::Mandatory: {
      std::set<Instance> covered;
      std::set<TypeId> players;
      for (const auto& r : c.roles) {
        auto col = column(s, p, r);
        covered.insert(col.begin(), col.end());
        players.insert(u.player.at(r));
      }
      for (const auto& t : players) {
        for (const auto& x : objects_of(p, t)) {
          if (!covered.count(x)) return to_string(x) + " plays none of the roles";
        }
      }
      return std::nullopt;
    }
    case ConstraintKind::EachIsIn: {
      std::set<Instance> allowed;
      for (const auto& l : c.values) {
        allowed.insert(u.is_value(c.type) ? Instance::value(l) : Instance::abstract(c.type, l));
      }
      for (const auto& x : objects_of(p, c.type)) {
        if (!allowed.count(x)) return to_string(x) + " is not listed";
      }
      return std::nullopt;
    }
    case ConstraintKind::Frequency: {
      std::map<Instance, std::int64_t> count;
      for (auto& row : project(s, p, {c.roles.at(0)})) ++count[row[0]];
      for (const auto& [x, n] : count) {
        if (n < c.lo || n > c.hi) {
          return to_string(x) + " occurs " + std::to_string(n) + " times";
        }
      }
      return std::nullopt;
    }
    case ConstraintKind::Exclusion: {
      auto a = project_set(s, p, c.roles);
      for (const auto& row : project_set(s, p, c.other)) {
        if (a.count(row)) return row_text(row) + " occurs on both sides";
      }
      return std::nullopt;
    }
    case ConstraintKind::Subset:
    case ConstraintKind::Equality: {
      std::vector<RoleId> lhs, rhs;
      for (const auto& [a, b] : c.pairs) {
        lhs.push_back(a);
        rhs.push_back(b);
      }
      auto left = project_set(s, p, lhs);
      auto right = project_set(s, p, rhs);
      for (const auto& row : left) {
        if (!right.count(row)) return row_text(row) + " missing on the right";
      }
      if (c.kind == ConstraintKind::Equality) {
        for (const auto& row : right) {
          if (!left.count(row)) return row_text(row) + " missing on the left";
        }
      }
      return std::nullopt;
    }
    case ConstraintKind::CardEq: {
      std::size_t n = u.is_relationship(c.type) ? (p.relations.count(c.type)
                                                       ? p.relations.at(c.type).size()
                                                       : 0)
                                                : objects_of(p, c.type).size();
      if (static_cast<std::int64_t>(n) != c.lo) {
        return c.type + " has " + std::to_string(n) + " members";
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool eval_constraint(const Constraint& c, const Schema& s, const Population& p) {
  return !check_constraint(c, s, p).has_value();
}

std::set<TypeId> base_types(const Schema& s) {
  auto derived = derived_types(s);
  std::set<TypeId> out;
  for (const auto& t : s.version.types) {
    if (populatable(s.universe, t) && !derived.count(t)) out.insert(t);
  }
  return out;
}

namespace {

// Rule fixing the population of each derived type, in evaluation order.
std::vector<const Rule*> derivation_order(const Schema& s) {
  std::map<TypeId, const Rule*> rule_of;
  for (const auto& t : derived_types(s)) {
    const Rule* r = s.version.derivation_for(t);
    if (!r) r = s.version.update_for(t);
    rule_of.emplace(t, r);
  }
  std::vector<const Rule*> order;
  std::map<TypeId, int> state;
  std::function<void(const TypeId&)> visit = [&](const TypeId& t) {
    int& st = state[t];
    if (st == 2) return;
    if (st == 1) throw Error(ErrorKind::Cycle, "derivation rules depend cyclically on " + t);
    st = 1;
    for (const auto& d : relation_refs(rule_of.at(t)->body)) {
      if (rule_of.count(d)) visit(d);
    }
    state[t] = 2;
    order.push_back(rule_of.at(t));
  };
  for (const auto& [t, _] : rule_of) visit(t);
  return order;
}

std::map<TypeId, std::set<Instance>> induced_values(const Schema& s, const Population& p) {
  const Universe& u = s.universe;
  std::map<TypeId, std::set<Instance>> out;
  for (const auto& t : s.version.types) {
    if (u.is_value(t)) out[t];
  }
  for (const auto& [rel, r] : p.relations) {
    for (std::size_t i = 0; i < r.columns().size(); ++i) {
      auto pl = u.player.find(r.columns()[i]);
      if (pl == u.player.end() || !out.count(pl->second)) continue;
      auto& dst = out[pl->second];
      for (const auto& row : r.rows()) dst.insert(row[i]);
    }
  }
  for (auto& [t, xs] : out) {
    for (const auto& sub : u.subtypes(t)) {
      auto it = out.find(sub);
      if (it != out.end()) xs.insert(it->second.begin(), it->second.end());
    }
  }
  return out;
}

}  // namespace

Population extend_with_derivations(const Schema& s, const Population& base) {
  Population p = base;
  for (const Rule* r : derivation_order(s)) {
    p.relations.insert_or_assign(r->defines, eval_rule(*r, p, s.universe));
  }
  for (auto& [t, xs] : induced_values(s, p)) p.objects.insert_or_assign(t, std::move(xs));
  return p;
}

PopVerdict check_full_population(const Schema& s, const Population& p, bool first_only) {
  const Universe& u = s.universe;
  PopVerdict verdict;
  bool done = false;
  auto report = [&](std::string what, std::string witness) {
    verdict.violations.push_back({std::move(what), std::move(witness)});
    done = first_only;
  };
  for (const auto& [t, xs] : p.objects) {
    auto dom = s.version.dom.find(t);
    for (const auto& x : xs) {
      if (u.is_value(t) != x.is_value()) {
        report("instance kind", to_string(x) + " in " + t);
      } else if (u.is_value(t) && dom != s.version.dom.end() && dom->second.values) {
        const auto& vals = *dom->second.values;
        if (std::find(vals.begin(), vals.end(), x.tag) == vals.end()) {
          report("domain", to_string(x) + " outside the domain of " + t);
        }
      }
    }
    for (const auto& sup : u.supertypes(t)) {
      auto it = p.objects.find(sup);
      if (it == p.objects.end()) continue;
      for (const auto& x : xs) {
        if (!it->second.count(x)) report("subtype inclusion", to_string(x) + " in " + t +
                                                                  " but not in " + sup);
      }
    }
  }
  if (done) return verdict;
  for (const auto& [rel, r] : p.relations) {
    for (std::size_t i = 0; i < r.columns().size(); ++i) {
      const auto& pl = u.player.at(r.columns()[i]);
      auto it = p.objects.find(pl);
      if (it == p.objects.end()) continue;
      for (const auto& row : r.rows()) {
        if (!it->second.count(row[i])) {
          report("conformity", to_string(row[i]) + " in " + rel + " is not a " + pl);
          break;
        }
      }
    }
  }
  for (const auto& c : s.version.constraints) {
    if (done) break;
    if (auto w = check_constraint(c, s, p)) report(c.id, *w);
  }
  return verdict;
}

PopVerdict is_pop(const Schema& s, const Population& given, PopKind kind) {
  const Universe& u = s.universe;
  PopVerdict verdict;
  auto report = [&](std::string what, std::string witness) {
    verdict.violations.push_back({std::move(what), std::move(witness)});
  };

  const std::set<TypeId> base = base_types(s);
  const std::set<TypeId>& expected = kind == PopKind::Base ? base : s.version.types;
  for (const auto& t : expected) {
    if (!given.covers(t)) report("coverage", t + " is not populated");
  }
  for (const auto& t : given.types()) {
    if (!expected.count(t)) report("coverage", t + " is not expected here");
  }
  if (!verdict.valid()) return verdict;

  Population p = kind == PopKind::Base ? extend_with_derivations(s, given) : given;
  if (kind == PopKind::Full) {
    Population rebuilt = extend_with_derivations(s, restrict_population(given, base));
    for (const auto& t : s.version.types) {
      bool same = u.is_object(t) ? rebuilt.objects[t] == p.objects[t]
                                 : rebuilt.relations[t] == p.relations[t];
      if (!same && (u.is_value(t) || !base.count(t))) {
        report(u.is_value(t) ? "value population" : "derivation",
               t + " differs from its derived population");
      }
    }
  }

  for (auto& v : check_full_population(s, p).violations) {
    verdict.violations.push_back(std::move(v));
  }
  return verdict;
}

}  // namespace ormt
