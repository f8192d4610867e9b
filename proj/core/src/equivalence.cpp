// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/equivalence.hpp"

#include <algorithm>

#include "ormt/constraint_eval.hpp"
#include "ormt/error.hpp"

namespace ormt {
namespace {

std::string type_list(const std::set<TypeId>& ts) {
  std::string out;
  for (const auto& t : ts) out += (out.empty() ? "" : ", ") + t;
  return out;
}

void add_rules(std::vector<Rule>& into, const std::vector<Rule>& rules, bool constant_only) {
  for (Rule r : rules) {
    if (constant_only && !is_constant(r.body)) continue;
    bool taken = std::any_of(into.begin(), into.end(),
                             [&](const Rule& q) { return q.defines == r.defines; });
    if (taken) continue;
    r.kind = RuleKind::Derivation;
    into.push_back(std::move(r));
  }
}

EnumerateOptions shared_images(const Schema& a, const Schema& b) {
  EnumerateOptions opts;
  opts.extra_instances = val_images(a);
  auto more = val_images(b);
  opts.extra_instances.insert(more.begin(), more.end());
  return opts;
}

}  // namespace

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Equivalent:
      return "equivalent";
    case Comparison::FirstStronger:
      return "first stronger";
    case Comparison::SecondStronger:
      return "second stronger";
    case Comparison::Incomparable:
      return "incomparable";
  }
  return "";
}

std::string_view to_string(SchemeProperty p) {
  switch (p) {
    case SchemeProperty::EquivalencePreserving:
      return "equivalence preserving";
    case SchemeProperty::Strengthening:
      return "strengthening";
    case SchemeProperty::Neither:
      return "neither";
  }
  return "";
}

EquivalenceVerdict check_direct_equivalence(const Schema& s1, const Schema& s2,
                                            const DomainBounds& b) {
  if (s1.version.types != s2.version.types) {
    std::set<TypeId> only1, only2;
    std::set_difference(s1.version.types.begin(), s1.version.types.end(), s2.version.types.begin(),
                        s2.version.types.end(), std::inserter(only1, only1.end()));
    std::set_difference(s2.version.types.begin(), s2.version.types.end(), s1.version.types.begin(),
                        s1.version.types.end(), std::inserter(only2, only2.end()));
    throw Error(ErrorKind::VocabularyMismatch,
                "the schemas differ in types; only in " + s1.name + ": {" + type_list(only1) +
                    "}, only in " + s2.name + ": {" + type_list(only2) + "}");
  }
  for (const auto& t : s1.version.types) {
    bool same = s1.universe.is_value(t) == s2.universe.is_value(t) &&
                s1.universe.is_relationship(t) == s2.universe.is_relationship(t) &&
                (!s1.universe.is_relationship(t) ||
                 s1.universe.role_list(t) == s2.universe.role_list(t));
    if (!same) throw Error(ErrorKind::VocabularyMismatch, t + " is declared differently");
  }
  auto opts = shared_images(s1, s2);
  StateSpace a = enumerate_state_space(s1, b, opts);
  StateSpace c = enumerate_state_space(s2, b, opts);

  EquivalenceVerdict v;
  v.bounds = b;
  v.first_size = a.size();
  v.second_size = c.size();
  std::vector<Population> only1, only2;
  std::set_difference(a.pops.begin(), a.pops.end(), c.pops.begin(), c.pops.end(),
                      std::back_inserter(only1));
  std::set_difference(c.pops.begin(), c.pops.end(), a.pops.begin(), a.pops.end(),
                      std::back_inserter(only2));
  if (!only1.empty()) v.only_in_first = only1.front();
  if (!only2.empty()) v.only_in_second = only2.front();
  if (only1.empty() && only2.empty()) {
    v.comparison = Comparison::Equivalent;
  } else if (only1.empty()) {
    v.comparison = Comparison::FirstStronger;
  } else if (only2.empty()) {
    v.comparison = Comparison::SecondStronger;
  } else {
    v.comparison = Comparison::Incomparable;
  }
  return v;
}

Schema to_view(const InstantiatedTransformation& inst) {
  Schema s = sch_of(inst);
  s.name = inst.scheme_name + "-to";
  s.version.derivation_rules.clear();
  add_rules(s.version.derivation_rules, inst.derivation_rules, false);
  add_rules(s.version.derivation_rules, inst.update_rules, true);
  s.canonicalize();
  return s;
}

Schema from_view(const InstantiatedTransformation& inst) {
  Schema s = sch_of(inst);
  s.name = inst.scheme_name + "-from";
  s.version.derivation_rules.clear();
  add_rules(s.version.derivation_rules, inst.update_rules, false);
  add_rules(s.version.derivation_rules, inst.derivation_rules, true);
  s.canonicalize();
  return s;
}

Schema conservative_extension(const Schema& s, const InstantiatedTransformation& inst, Side side) {
  const std::set<TypeId> added = side == Side::To ? inst.to_types() : inst.from_types();
  std::set<TypeId> keep = added;
  for (const auto& t : added) {
    if (!inst.universe.is_relationship(t)) continue;
    for (const auto& r : inst.universe.role_list(t)) keep.insert(inst.universe.player.at(r));
  }
  Schema out = s;
  merge_universe(out.universe, restrict_universe(inst.universe, keep));
  out.version.types.insert(keep.begin(), keep.end());
  for (const auto& t : keep) {
    auto d = inst.dom.find(t);
    if (d != inst.dom.end()) out.version.dom.emplace(t, d->second);
  }
  for (const auto& c : inst.constraints_named(side == Side::To ? inst.to : inst.from)) {
    bool clash = std::any_of(out.version.constraints.begin(), out.version.constraints.end(),
                             [&](const Constraint& k) { return k.id == c.id; });
    if (clash) {
      throw Error(ErrorKind::DuplicateName,
                  "constraint " + c.id + " already exists in " + s.name);
    }
    out.version.constraints.push_back(c);
  }
  const auto& main = side == Side::To ? inst.update_rules : inst.derivation_rules;
  const auto& other = side == Side::To ? inst.derivation_rules : inst.update_rules;
  add_rules(out.version.derivation_rules, main, false);
  add_rules(out.version.derivation_rules, other, true);
  out.canonicalize();
  return out;
}

namespace {

// The first valid population of `s` that has no extension in `ext` whose
// part over the other schema's types is valid there.
std::optional<Population> first_untranslatable(const StateSpace& own, const Schema& s,
                                               const StateSpace& ext,
                                               const StateSpace& other,
                                               const Schema& other_schema) {
  std::set<Population> translated;
  for (const auto& p : ext.pops) {
    if (other.contains(restrict_population(p, other_schema.version.types))) {
      translated.insert(restrict_population(p, s.version.types));
    }
  }
  for (const auto& p : own.pops) {
    if (!translated.count(p)) return p;
  }
  return std::nullopt;
}

}  // namespace

TranslationVerdict check_translation(const Schema& s1, const Schema& s2,
                                     const InstantiatedTransformation& inst,
                                     const DomainBounds& b) {
  Schema e1 = conservative_extension(s1, inst, Side::To);
  Schema e2 = conservative_extension(s2, inst, Side::From);
  auto opts = shared_images(e1, e2);
  StateSpace a = enumerate_state_space(s1, b, opts);
  StateSpace c = enumerate_state_space(s2, b, opts);
  StateSpace ea = enumerate_state_space(e1, b, opts);
  StateSpace ec = enumerate_state_space(e2, b, opts);

  TranslationVerdict v;
  v.bounds = b;
  v.first_size = a.size();
  v.second_size = c.size();
  v.untranslatable_first = first_untranslatable(a, s1, ea, c, s2);
  v.untranslatable_second = first_untranslatable(c, s2, ec, a, s1);
  const bool all1 = !v.untranslatable_first;
  const bool all2 = !v.untranslatable_second;
  if (all1 && all2) {
    v.comparison = Comparison::Equivalent;
  } else if (all1) {
    v.comparison = Comparison::FirstStronger;
  } else if (all2) {
    v.comparison = Comparison::SecondStronger;
  } else {
    v.comparison = Comparison::Incomparable;
  }
  return v;
}

SchemeVerdict check_scheme_property(const InstantiatedTransformation& inst, const DomainBounds& b) {
  SchemeVerdict v;
  v.detail = check_direct_equivalence(from_view(inst), to_view(inst), b);
  switch (v.detail.comparison) {
    case Comparison::Equivalent:
      v.property = SchemeProperty::EquivalencePreserving;
      break;
    case Comparison::FirstStronger:
      v.property = SchemeProperty::Strengthening;
      break;
    default:
      v.property = SchemeProperty::Neither;
  }
  return v;
}

BijectionReport verify_bijection(const InstantiatedTransformation& inst, const DomainBounds& b) {
  Schema from = from_view(inst);
  Schema to = to_view(inst);
  auto opts = shared_images(from, to);
  StateSpace sf = enumerate_state_space(from, b, opts);
  StateSpace st = enumerate_state_space(to, b, opts);
  const std::set<TypeId> to_base = base_types(to);

  BijectionReport r;
  r.from_size = sf.size();
  r.to_size = st.size();
  r.round_trip = true;
  std::set<Population> images;
  for (const auto& p : sf.pops) {
    Population image = restrict_population(p, to_base);
    Population back = extend_with_derivations(to, image);
    if (back != p && r.round_trip) {
      r.round_trip = false;
      r.failure = "deriving back from the image of\n" + population_text(p, from.name) +
                  "gives\n" + population_text(back, to.name);
    }
    if (!st.contains(back) && !r.failure) {
      r.failure = "the image of\n" + population_text(p, from.name) + "is not valid in " + to.name;
    }
    images.insert(std::move(image));
  }
  r.images = images.size();
  bool injective = r.images == r.from_size;
  if (!injective && !r.failure) r.failure = "two from-side populations share an image";
  if (r.images != r.to_size && !r.failure) {
    r.failure = std::to_string(r.to_size - std::min(r.to_size, r.images)) +
                " to-side populations have no preimage";
  }
  r.bijective = r.round_trip && injective && r.images == r.to_size && !r.failure;
  return r;
}

}  // namespace ormt
