// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

using testing::axiom_base;
using testing::fixture_schema;

const std::set<TypeId> kChainKept{"Person", "likes"};

std::string chain_with(const std::string& extra_constraints, bool internal = true) {
  std::string text = read_file(testing::fixture_path("chain.schema"));
  if (!internal) {
    auto at = text.find("INTERNAL: Tag, tagged ;\n");
    text.erase(at, std::string("INTERNAL: Tag, tagged ;\n").size());
  }
  if (!extra_constraints.empty()) {
    auto at = text.find("DERIVATION RULES:");
    text.insert(at, "CONSTRAINTS:\n" + extra_constraints);
  }
  return text;
}

TEST(Cleanup, ChainNeedsTwoRemovalSteps) {
  CleanupTrace trace;
  Schema out = cleanup(fixture_schema("chain.schema"), {}, &trace);
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[0].R, std::set<TypeId>{"tagged"});
  EXPECT_TRUE(trace.steps[0].UC.empty());
  EXPECT_TRUE(trace.steps[1].R.empty());
  EXPECT_EQ(trace.steps[1].UC, std::set<TypeId>{"Tag"});
  EXPECT_FALSE(trace.steps[2].changed());
  EXPECT_EQ(out.version.types, kChainKept);
  EXPECT_TRUE(out.version.derivation_rules.empty());
  EXPECT_TRUE(out.version.update_rules.empty());
  EXPECT_TRUE(out.version.internal.empty());
}

TEST(Cleanup, ResultIsStillCorrect) {
  Schema out = cleanup(fixture_schema("chain.schema"));
  auto report = validate_schema(out);
  EXPECT_TRUE(report.passed()) << report.failures().front().label();
}

TEST(Cleanup, ConceptualTypesAreKept) {
  Schema s = parse_schema(chain_with("", false));
  CleanupTrace trace;
  Schema out = cleanup(s, {}, &trace);
  EXPECT_EQ(out, s);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_TRUE(trace.steps[0].removed().empty());
  EXPECT_TRUE(trace.steps[0].D.count("tagged"));
}

TEST(Cleanup, StepComputesDerivedAndUpdatedSets) {
  auto [next, step] = cleanup_step(axiom_base());
  EXPECT_EQ(step.D, std::set<TypeId>{"busy"});
  EXPECT_EQ(step.U, std::set<TypeId>{"works"});
  EXPECT_TRUE(step.R.empty());
  EXPECT_FALSE(step.changed());
  EXPECT_EQ(next, axiom_base());
}

TEST(Cleanup, ProtectionFollowsTheChosenReading) {
  auto [a, general] = cleanup_step(axiom_base());
  EXPECT_EQ(general.P, std::set<TypeId>{"Person"});
  CleanupOptions literal;
  literal.pi_literal = true;
  auto [b, sub] = cleanup_step(axiom_base(), literal);
  EXPECT_EQ(sub.P, std::set<TypeId>{"Employee"});
}

TEST(Cleanup, ReplacedConstraintIsDroppedWithItsType) {
  Schema s = parse_schema(chain_with("  c9: MANDATORY {tagged-1} ;\n"));
  CleanupOptions opts;
  opts.replaced = {"c9"};
  CleanupTrace trace;
  Schema out = cleanup(s, opts, &trace);
  EXPECT_EQ(out.version.types, kChainKept);
  EXPECT_TRUE(out.version.constraints.empty());
  const auto& dropped = trace.steps[0].dropped_constraints;
  EXPECT_NE(std::find(dropped.begin(), dropped.end(), "c9"), dropped.end());
}

TEST(Cleanup, IsIdempotentOnRandomSchemas) {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    Schema s = testing::random_schema(rng, i);
    Schema once = cleanup(s);
    EXPECT_EQ(cleanup(once), once) << s.name;
  }
}

TEST(Reduce, KeepsConstraintsOnSurvivingTypes) {
  Schema s = fixture_schema("olympics-b.schema");
  auto r = reduce(s, s.version.constraints, {}, {}, {});
  EXPECT_EQ(r.constraints.size(), s.version.constraints.size());
  EXPECT_TRUE(r.dropped.empty());
  EXPECT_TRUE(r.rewritten.empty());
  EXPECT_TRUE(r.blocking.empty());
}

TEST(Reduce, ReplacedConstraintOnRemovedTypeIsDropped) {
  Schema s = fixture_schema("olympics-b.schema");
  auto r = reduce(s, s.version.constraints, {"won-gold-in"}, {}, {}, {"u1"});
  EXPECT_EQ(r.constraints.size(), 2u);
  EXPECT_EQ(r.dropped, std::vector<std::string>{"u1"});
}

}  // namespace
}  // namespace ormt
