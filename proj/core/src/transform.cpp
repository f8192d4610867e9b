// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/transform.hpp"

#include <algorithm>

#include "ormt/error.hpp"

namespace ormt {
namespace {

std::set<TypeId> derivation_defined(const Schema& s) {
  std::set<TypeId> out;
  for (const auto& r : s.version.derivation_rules) out.insert(r.defines);
  return out;
}

void add_rule(std::vector<Rule>& into, const Rule& r) {
  if (std::find(into.begin(), into.end(), r) == into.end()) into.push_back(r);
}

std::string joined(const std::set<TypeId>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Alternative:
      return "alternative";
    case Mode::Enrich:
      return "enrich";
    case Mode::Optimise:
      return "optimise";
  }
  return "";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "alternative") return Mode::Alternative;
  if (text == "enrich") return Mode::Enrich;
  if (text == "optimise" || text == "optimize") return Mode::Optimise;
  return std::nullopt;
}

ApplicabilityReport check_applicability(const InstantiatedTransformation& inst, const Schema& s) {
  ApplicabilityReport rep;
  const auto derived = derivation_defined(s);
  std::set<TypeId> missing, derivable, present;
  for (const auto& t : inst.from_types()) {
    if (!s.version.types.count(t)) missing.insert(t);
    if (derived.count(t)) derivable.insert(t);
  }
  if (!missing.empty() || !derivable.empty()) {
    rep.rule2_changed_types_present_nonderived = false;
    if (!missing.empty()) rep.witnesses.push_back("rule 2: not in the schema: " + joined(missing));
    if (!derivable.empty()) rep.witnesses.push_back("rule 2: derivable: " + joined(derivable));
  }
  // A To type may already be there as a derived type; applying the inverse
  // of an earlier transformation brings back exactly such types.
  for (const auto& t : inst.to_types()) {
    if (s.version.types.count(t) && !derived.count(t)) present.insert(t);
  }
  if (!present.empty()) {
    rep.rule3_new_types_fresh = false;
    rep.witnesses.push_back("rule 3: already present: " + joined(present));
  }
  return rep;
}

Schema combine(const InstantiatedTransformation& inst, const Schema& s, Mode mode) {
  const std::set<TypeId> to = inst.to_types();
  std::set<TypeId> keep = to;
  for (const auto& t : to) {
    if (!inst.universe.is_relationship(t)) continue;
    for (const auto& r : inst.universe.role_list(t)) keep.insert(inst.universe.player.at(r));
  }
  Schema out = s;
  merge_universe(out.universe, restrict_universe(inst.universe, keep));
  SchemaVersion& v = out.version;
  const std::set<TypeId> before = v.types;
  v.types.insert(to.begin(), to.end());
  switch (mode) {
    case Mode::Alternative:
      for (const auto& t : inst.from_types()) v.internal.insert(t);
      break;
    case Mode::Enrich:
      break;
    case Mode::Optimise:
      for (const auto& t : to) {
        if (!before.count(t)) v.internal.insert(t);
      }
      break;
  }
  for (const auto& r : inst.derivation_rules) add_rule(v.derivation_rules, r);
  for (const auto& r : inst.update_rules) add_rule(v.update_rules, r);
  for (const auto& c : inst.constraints_named(inst.to)) {
    auto same_id = std::find_if(v.constraints.begin(), v.constraints.end(),
                                [&](const Constraint& k) { return k.id == c.id; });
    if (same_id == v.constraints.end()) {
      v.constraints.push_back(c);
    } else if (!(*same_id == c)) {
      throw Error(ErrorKind::DuplicateName,
                  "constraint " + c.id + " of the transformation clashes with the schema's");
    }
  }
  for (const auto& t : to) {
    auto d = inst.dom.find(t);
    if (d != inst.dom.end()) v.dom.emplace(t, d->second);
  }
  out.canonicalize();
  return out;
}

ApplyResult apply_transformation(const InstantiatedTransformation& inst, const Schema& s, Mode mode,
                                 const CleanupOptions& opts) {
  ApplyResult res;
  res.report = check_applicability(inst, s);
  if (!res.report.upfront_ok()) {
    std::string msg = "transformation " + inst.scheme_name + " is not applicable to " + s.name;
    for (const auto& w : res.report.witnesses) msg += "; " + w;
    throw Error(ErrorKind::Applicability, msg);
  }
  Schema joined_schema = combine(inst, s, mode);
  CleanupOptions with_replaced = opts;
  for (const auto& c : inst.constraints_named(inst.from)) with_replaced.replaced.insert(c.id);
  res.schema = cleanup(joined_schema, with_replaced, &res.trace);
  if (is_sch(s).passed()) {
    auto after = is_sch(res.schema);
    if (!after.passed()) {
      res.report.rule1_preserves_correctness = false;
      std::string msg = "rule 1: the result is not a correct schema";
      for (const auto& f : after.failures()) msg += "; " + f.label() + ": " + f.witness;
      res.report.witnesses.push_back(msg);
      throw Error(ErrorKind::IllFormedResult, msg);
    }
  }
  return res;
}

Schema apply_alternative(const InstantiatedTransformation& inst, const Schema& s) {
  return apply_transformation(inst, s, Mode::Alternative).schema;
}

Schema apply_enrich(const InstantiatedTransformation& inst, const Schema& s) {
  return apply_transformation(inst, s, Mode::Enrich).schema;
}

Schema apply_optimise(const InstantiatedTransformation& inst, const Schema& s) {
  return apply_transformation(inst, s, Mode::Optimise).schema;
}

}  // namespace ormt
