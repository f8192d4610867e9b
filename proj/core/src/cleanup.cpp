// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>

#include "ormt/normal_form.hpp"
#include "ormt/transform.hpp"

namespace ormt {
namespace {

std::set<TypeId> non_recursive(const std::vector<Rule>& rules) {
  std::set<TypeId> out;
  for (const auto& r : rules) {
    if (!depends(r).count(r.defines)) out.insert(r.defines);
  }
  return out;
}

std::set<TypeId> protected_types(const Schema& s, bool literal) {
  std::set<TypeId> out;
  for (const auto& [x, y] : s.universe.sub_of) {
    if (!s.version.types.count(x) || !s.version.types.count(y)) continue;
    out.insert(literal ? x : y);
  }
  return out;
}

// Internal object types that play no role, take part in no subtype link and
// are not mentioned by a rule that survives the step.
std::set<TypeId> isolated_types(const Schema& s, const std::set<TypeId>& removable,
                                const std::set<TypeId>& blocked) {
  const Universe& u = s.universe;
  const SchemaVersion& v = s.version;
  std::set<TypeId> connected;
  for (const auto& t : v.types) {
    if (!u.is_relationship(t)) continue;
    for (const auto& r : u.role_list(t)) connected.insert(u.player.at(r));
  }
  for (const auto& [x, y] : u.sub_of) {
    if (v.types.count(x) && v.types.count(y)) {
      connected.insert(x);
      connected.insert(y);
    }
  }
  for (const auto* rules : {&v.derivation_rules, &v.update_rules}) {
    for (const auto& r : *rules) {
      if (removable.count(r.defines)) continue;
      auto d = depends(r);
      connected.insert(d.begin(), d.end());
    }
  }
  for (const auto& c : v.constraints) {
    if (!c.type.empty() && !u.is_object(c.type)) connected.insert(c.type);
  }
  std::set<TypeId> out;
  for (const auto& t : v.internal) {
    if (v.types.count(t) && u.is_object(t) && !connected.count(t) && !blocked.count(t)) {
      out.insert(t);
    }
  }
  return out;
}

std::vector<Rule> rules_defining(const std::vector<Rule>& rules, const std::set<TypeId>& types,
                                 bool inside) {
  std::vector<Rule> out;
  for (const auto& r : rules) {
    if (types.count(r.defines) == static_cast<std::size_t>(inside)) out.push_back(r);
  }
  return out;
}

// Drops rules that substitution turned into the identity on their own type.
std::vector<Rule> collapse(const std::vector<Rule>& before, const std::vector<Rule>& after,
                           const Universe& u, std::set<TypeId>& collapsed) {
  std::vector<Rule> out;
  for (std::size_t i = 0; i < after.size(); ++i) {
    const Rule& r = after[i];
    bool changed = !(before[i].body == r.body);
    if (changed && relation_refs(r.body).count(r.defines) &&
        nf::equivalent(r.body, RuleExpr::ref(r.defines), u)) {
      collapsed.insert(r.defines);
      continue;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::set<TypeId> CleanupStep::removed() const {
  std::set<TypeId> out = R;
  out.insert(UC.begin(), UC.end());
  return out;
}

bool CleanupStep::changed() const { return types_before != types_after || !collapsed.empty(); }

std::pair<Schema, CleanupStep> cleanup_step(const Schema& s, const CleanupOptions& opts) {
  const SchemaVersion& v = s.version;
  CleanupStep step;
  step.types_before = v.types;
  step.D = non_recursive(v.derivation_rules);
  step.U = non_recursive(v.update_rules);
  step.P = protected_types(s, opts.pi_literal);

  ReduceResult reduced;
  while (true) {
    step.R.clear();
    for (const auto& t : step.D) {
      if (step.U.count(t) && v.internal.count(t) && !step.P.count(t) && !step.blocked.count(t)) {
        step.R.insert(t);
      }
    }
    step.UC = isolated_types(s, step.R, step.blocked);
    const std::set<TypeId> gone = step.removed();
    step.RD = rules_defining(v.derivation_rules, gone, true);
    step.RU = rules_defining(v.update_rules, gone, true);
    std::vector<Rule> removed_rules = step.RD;
    removed_rules.insert(removed_rules.end(), step.RU.begin(), step.RU.end());
    reduced = reduce(s, v.constraints, gone, step.UC, removed_rules, opts.replaced);
    std::size_t before = step.blocked.size();
    step.blocked.insert(reduced.blocking.begin(), reduced.blocking.end());
    if (reduced.blocking.empty() || step.blocked.size() == before) break;
  }
  const std::set<TypeId> gone = step.removed();

  Schema out;
  out.name = s.name;
  SchemaVersion& w = out.version;
  for (const auto& t : v.types) {
    if (!gone.count(t)) w.types.insert(t);
  }
  for (const auto& t : v.internal) {
    if (w.types.count(t)) w.internal.insert(t);
  }
  auto kept_der = rules_defining(v.derivation_rules, gone, false);
  auto kept_upd = rules_defining(v.update_rules, gone, false);
  std::vector<Rule> upd_removed = step.RU;
  upd_removed.insert(upd_removed.end(), step.RD.begin(), step.RD.end());
  w.derivation_rules = collapse(kept_der, substitute(kept_der, step.RD), s.universe, step.collapsed);
  w.update_rules = collapse(kept_upd, substitute(kept_upd, upd_removed), s.universe, step.collapsed);
  w.constraints = std::move(reduced.constraints);
  step.dropped_constraints = std::move(reduced.dropped);
  step.rewritten_constraints = std::move(reduced.rewritten);
  for (const auto& [t, d] : v.dom) {
    if (w.types.count(t)) w.dom.emplace(t, d);
  }
  out.universe = gone.empty() ? s.universe : restrict_universe(s.universe, w.types);
  out.canonicalize();
  step.types_after = w.types;
  return {std::move(out), std::move(step)};
}

Schema cleanup(const Schema& s, const CleanupOptions& opts, CleanupTrace* trace) {
  Schema current = s;
  while (true) {
    auto [next, step] = cleanup_step(current, opts);
    bool changed = step.changed();
    if (trace) trace->steps.push_back(std::move(step));
    if (!changed) return current;
    current = std::move(next);
  }
}

}  // namespace ormt
