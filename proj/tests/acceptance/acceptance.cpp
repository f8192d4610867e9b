// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

// Runs the nine end-to-end acceptance checks and prints one line per check.
// Exits non-zero when any check fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "ormt/error.hpp"
#include "test_support.hpp"

namespace {

using namespace ormt;
using namespace ormt::testing;

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome table_round_trip() {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"x1", "Country"},
      {"x2", "Quantity"},
      {"r1,1", "won-gold-in-1"},
      {"r2,1", "won-gold-in-2"},
      {"r1,2", "won-silver-in-1"},
      {"r2,2", "won-silver-in-2"},
      {"r1,3", "won-bronze-in-1"},
      {"r2,3", "won-bronze-in-2"},
      {"s1", "won-medals-of-in-1"},
      {"s2", "won-medals-of-in-3"},
      {"t", "won-medals-of-in-2"},
      {"y", "MedalKind"},
      {"u", "MedalKind.code-1"},
      {"v", "MedalKind.code-2"},
      {"w", "won-medals-of-in"},
      {"l", "code"},
      {"d", "char"},
      {"i1", "'G'"},
      {"i2", "'S'"},
      {"i3", "'B'"},
  };
  auto t = shipped_scheme("ot-emission");
  auto x = parse_parlist(read_file(fixture_path("olympics.parlist")));
  if (leaf_count(x) != expected.size()) {
    return fail("parameter list has " + std::to_string(leaf_count(x)) + " elements");
  }
  auto inst = instantiate(t, x);
  for (const auto& [key, value] : expected) {
    auto got = inst.binding(key);
    if (!got) return fail("no binding for " + key);
    if (*got != value) return fail(key + " = " + *got + ", expected " + value);
  }
  if (inst.bindings.size() != expected.size()) {
    return fail(std::to_string(inst.bindings.size()) + " bindings");
  }
  const std::string golden = read_file(golden_path("ot-emission-olympics.txt"));
  if (serialize_instantiated(inst) != golden) return fail("instantiated text differs from golden");
  return {true, "20 bindings, instantiated text matches golden"};
}

Outcome olympics_equivalence() {
  auto inst = olympics();
  auto b = fixture_bounds("olympics.bounds");
  auto v = check_scheme_property(inst, b);
  if (v.property != SchemeProperty::EquivalencePreserving) {
    return fail(std::string("verdict ") + std::string(to_string(v.property)));
  }
  auto bij = verify_bijection(inst, b);
  if (!bij.bijective || !bij.round_trip) {
    return fail("mapping check failed: " + bij.failure.value_or("?"));
  }
  return {true, std::to_string(v.detail.first_size) + " = " +
                    std::to_string(v.detail.second_size) + " populations, bijection with inverse"};
}

Outcome hospital_equivalence() {
  auto inst = instance("pred-generalise-unary", "hospital.parlist", "hospital-a.schema");
  auto b = fixture_bounds("hospital.bounds");
  Schema a = conservative_extension(fixture_schema("hospital-a.schema"), inst, Side::To);
  Schema c = conservative_extension(fixture_schema("hospital-b.schema"), inst, Side::From);
  auto v = check_direct_equivalence(a, c, b);
  if (v.comparison != Comparison::Equivalent) {
    return fail(std::string("verdict ") + std::string(to_string(v.comparison)));
  }
  return {true, std::to_string(v.first_size) + " = " + std::to_string(v.second_size) +
                    " populations"};
}

Outcome strengthening() {
  auto inst = instance("strengthen-split", "strengthen.parlist", "strengthen-right.schema");
  auto b = fixture_bounds("strengthen.bounds");
  Schema right = fixture_schema("strengthen-right.schema");
  Schema left = fixture_schema("strengthen-left.schema");
  auto v = check_translation(right, left, inst, b);
  if (v.comparison != Comparison::SecondStronger) {
    return fail(std::string("verdict ") + std::string(to_string(v.comparison)));
  }
  if (!v.untranslatable_first) return fail("no witness on the weak side");
  auto scheme = check_scheme_property(inst, b);
  if (scheme.property != SchemeProperty::Strengthening) {
    return fail(std::string("scheme verdict ") + std::string(to_string(scheme.property)));
  }
  std::size_t drives = 0;
  auto it = v.untranslatable_first->relations.find("drives");
  if (it != v.untranslatable_first->relations.end()) drives = it->second.size();
  return {true, "left-hand schema stronger; witness with " + std::to_string(drives) +
                    " drives facts"};
}

Outcome distributivity() {
  auto inst = olympics();
  auto b = fixture_bounds("olympics.bounds");
  auto plain = check_update_distributivity(inst, b);
  if (!plain.holds) return fail("default scope has a counterexample");
  DistributivityOptions strict;
  strict.strict_mu = true;
  auto r = check_update_distributivity(inst, b, strict);
  if (r.holds || !r.counterexample) return fail("strict scope found no counterexample");
  return {true, std::to_string(plain.guarded_pairs) + " guarded pairs hold; strict scope fails on " +
                    (r.counterexample->op == SetOp::Union ? "union" : "minus")};
}

Outcome cleanup_properties() {
  std::mt19937 rng(20260516);
  int steps = 0;
  int removed = 0;
  for (int i = 0; i < 250; ++i) {
    Schema s = random_schema(rng, i);
    for (bool literal : {false, true}) {
      CleanupOptions opts;
      opts.pi_literal = literal;
      CleanupTrace trace;
      Schema once = cleanup(s, opts, &trace);
      if (cleanup(once, opts) != once) return fail("not idempotent on " + s.name);
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& st = trace.steps[k];
        const bool last = k + 1 == trace.steps.size();
        if (last != (st.types_after.size() == st.types_before.size())) {
          return fail("type count did not strictly decrease in step " + std::to_string(k) +
                      " of " + s.name);
        }
        for (const auto& t : st.removed()) {
          if (!s.version.internal.count(t)) return fail(t + " is conceptual but was removed");
          if (st.P.count(t)) return fail(t + " has dependents but was removed");
        }
        removed += static_cast<int>(st.removed().size());
      }
      steps += static_cast<int>(trace.steps.size());
    }
  }
  return {true, "250 schemas, both protection variants, " + std::to_string(steps) + " steps, " +
                    std::to_string(removed) + " removals"};
}

Outcome substitution() {
  std::mt19937 rng(7);
  auto b = pair_bounds();
  for (int i = 0; i < 20; ++i) {
    auto pair = equivalent_pair(rng, i);
    auto before = check_direct_equivalence(pair.first, pair.second, b);
    if (before.comparison != Comparison::Equivalent) {
      return fail("generated pair " + std::to_string(i) + " (" + pair.rewrites +
                  ") is not equivalent");
    }
    auto after = check_direct_equivalence(with_fresh_fact(pair.first),
                                          with_fresh_fact(pair.second), b);
    if (after.comparison != Comparison::Equivalent) {
      return fail("pair " + std::to_string(i) + " lost equivalence after extension");
    }
  }
  return {true, "20 pairs stay equivalent after adding a fresh fact type"};
}

Outcome inversion() {
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> uses{
      {"ot-absorb-context", {"rally.parlist", "rally-a.schema"}},
      {"ot-emission", {"olympics.parlist", "olympics-b.schema"}},
      {"pred-generalise-unary", {"hospital.parlist", "hospital-a.schema"}},
      {"strengthen-split", {"strengthen.parlist", "strengthen-right.schema"}},
  };
  auto names = shipped_scheme_names();
  if (names.size() != uses.size()) return fail("unexpected number of shipped schemes");
  for (std::size_t i = 0; i < uses.size(); ++i) {
    if (names[i] != uses[i].first) return fail("no instantiation for " + names[i]);
    auto inst = instance(uses[i].first, uses[i].second.first, uses[i].second.second);
    if (invert(invert(inst)) != inst) return fail("invert is not an involution on " + names[i]);
  }
  auto inst = olympics();
  Schema s = fixture_schema("olympics-b.schema");
  auto there = apply_transformation(inst, s, Mode::Optimise);
  auto back = apply_transformation(invert(inst), there.schema, Mode::Optimise);
  auto v = check_direct_equivalence(s, back.schema, fixture_bounds("olympics.bounds"));
  if (v.comparison != Comparison::Equivalent) return fail("round trip changed the state space");
  return {true, "involution on " + std::to_string(names.size()) +
                    " schemes; optimise round trip keeps " + std::to_string(v.first_size) +
                    " populations"};
}

Outcome axiom_suite() {
  auto base = validate_schema(axiom_base());
  if (!base.passed()) return fail("base fixture fails " + base.failures().front().label());
  std::set<std::string> covered;
  for (const auto& c : failing_axiom_cases()) {
    auto report = c.fixture.empty() ? validate_universe(c.schema.universe)
                                    : validate_schema(c.schema);
    auto* r = report.find(c.axiom);
    const std::string where = c.fixture.empty() ? "built case" : c.fixture;
    if (!r) return fail(where + ": axiom " + c.axiom + " not reported");
    if (r->passed) return fail(where + ": axiom " + c.axiom + " passed");
    covered.insert(c.axiom);
  }
  std::size_t named = 0;
  for (const auto& r : base.results) {
    if (r.name == "declared types") continue;
    ++named;
    if (!covered.count(r.name)) return fail("no failing fixture for " + r.label());
  }
  return {true, std::to_string(named) + " axioms, each passing on base and failing on its fixture"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"instantiation table round trip", table_round_trip},
      {"OTEmission equivalence at bounds", olympics_equivalence},
      {"hospital equivalence", hospital_equivalence},
      {"strengthening", strengthening},
      {"update distributivity", distributivity},
      {"cleanup properties", cleanup_properties},
      {"substitution property", substitution},
      {"inversion", inversion},
      {"axiom suite", axiom_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << i + 1 << " " << (o.passed ? "PASS" : "FAIL") << " " << checks[i].first
         << ": " << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
