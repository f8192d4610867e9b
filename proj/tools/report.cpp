// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "report.hpp"

namespace ormt::cli {
namespace {

ordered_json names(const std::set<TypeId>& ts) { return ordered_json(ts); }

ordered_json optional_population(const std::optional<Population>& p) {
  return p ? to_json(*p) : ordered_json(nullptr);
}

}  // namespace

ordered_json envelope(std::string_view command) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  return j;
}

ordered_json to_json(const Population& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [t, xs] : p.objects) {
    ordered_json items = ordered_json::array();
    for (const auto& x : xs) items.push_back(to_string(x));
    j[t] = std::move(items);
  }
  for (const auto& [t, r] : p.relations) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows()) {
      ordered_json tuple = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) tuple[r.columns()[i]] = to_string(row[i]);
      rows.push_back(std::move(tuple));
    }
    j[t] = std::move(rows);
  }
  return j;
}

ordered_json to_json(const WellFormedReport& r) {
  ordered_json axioms = ordered_json::array();
  for (const auto& a : r.results) {
    ordered_json item;
    item["group"] = a.group;
    item["axiom"] = a.name;
    item["passed"] = a.passed;
    if (!a.passed) item["witness"] = a.witness;
    axioms.push_back(std::move(item));
  }
  ordered_json j;
  j["passed"] = r.passed();
  j["axioms"] = std::move(axioms);
  return j;
}

ordered_json to_json(const DomainBounds& b) {
  ordered_json j;
  ordered_json doms = ordered_json::object();
  for (const auto& [name, values] : b.domains) {
    ordered_json vs = ordered_json::array();
    for (const auto& v : values) vs.push_back(literal_text(v));
    doms[name] = std::move(vs);
  }
  j["domains"] = std::move(doms);
  j["pools"] = b.pools;
  j["cap"] = b.cap;
  return j;
}

ordered_json to_json(const CleanupTrace& t) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) {
    ordered_json j;
    j["D"] = names(s.D);
    j["U"] = names(s.U);
    j["P"] = names(s.P);
    j["R"] = names(s.R);
    j["UC"] = names(s.UC);
    j["blocked"] = names(s.blocked);
    j["collapsed"] = names(s.collapsed);
    j["dropped_constraints"] = s.dropped_constraints;
    j["rewritten_constraints"] = s.rewritten_constraints;
    j["types_before"] = s.types_before;
    j["types_after"] = s.types_after;
    steps.push_back(std::move(j));
  }
  return steps;
}

ordered_json to_json(const EquivalenceVerdict& v) {
  ordered_json j;
  j["comparison"] = to_string(v.comparison);
  j["first_size"] = v.first_size;
  j["second_size"] = v.second_size;
  j["only_in_first"] = optional_population(v.only_in_first);
  j["only_in_second"] = optional_population(v.only_in_second);
  j["bounds"] = to_json(v.bounds);
  return j;
}

ordered_json to_json(const TranslationVerdict& v) {
  ordered_json j;
  j["comparison"] = to_string(v.comparison);
  j["first_size"] = v.first_size;
  j["second_size"] = v.second_size;
  j["untranslatable_first"] = optional_population(v.untranslatable_first);
  j["untranslatable_second"] = optional_population(v.untranslatable_second);
  j["bounds"] = to_json(v.bounds);
  return j;
}

ordered_json to_json(const BijectionReport& r) {
  ordered_json j;
  j["bijective"] = r.bijective;
  j["round_trip"] = r.round_trip;
  j["from_size"] = r.from_size;
  j["to_size"] = r.to_size;
  j["images"] = r.images;
  j["failure"] = r.failure ? ordered_json(*r.failure) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const DistributivityReport& r) {
  ordered_json j;
  j["holds"] = r.holds;
  j["populations"] = r.populations;
  j["guarded_pairs"] = r.guarded_pairs;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    ordered_json ce;
    ce["op"] = c.op == SetOp::Union ? "union" : "minus";
    ce["p"] = to_json(c.p);
    ce["x"] = to_json(c.x);
    ce["expected"] = to_json(c.expected);
    ce["actual"] = to_json(c.actual);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  j["bounds"] = to_json(r.bounds);
  return j;
}

}  // namespace ormt::cli
