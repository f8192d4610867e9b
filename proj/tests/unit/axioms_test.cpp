// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ormt {
namespace {

using testing::axiom_base;
using testing::failing_axiom_cases;
using testing::fixture_schema;

TEST(Axioms, BaseFixturePassesEveryAxiom) {
  auto report = validate_schema(axiom_base());
  for (const auto& r : report.results) EXPECT_TRUE(r.passed) << r.label() << ": " << r.witness;
}

TEST(Axioms, EveryAxiomHasAFailingFixture) {
  std::set<std::string> failing;
  for (const auto& c : failing_axiom_cases()) {
    auto report = c.fixture.empty() ? validate_universe(c.schema.universe)
                                    : validate_schema(c.schema);
    auto* r = report.find(c.axiom);
    ASSERT_NE(r, nullptr) << c.axiom;
    EXPECT_FALSE(r->passed) << c.fixture << " should fail " << c.axiom;
    EXPECT_FALSE(r->witness.empty());
    failing.insert(c.axiom);
  }
  for (const auto& r : validate_schema(axiom_base()).results) {
    if (r.name != "declared types") EXPECT_TRUE(failing.count(r.name)) << r.label();
  }
}

TEST(Axioms, FailuresCarryTheirGroup) {
  for (const auto& c : failing_axiom_cases()) {
    if (c.fixture.empty()) continue;
    auto report = validate_schema(c.schema);
    auto* r = report.find(c.axiom);
    ASSERT_NE(r, nullptr);
    const std::string& g = r->group;
    EXPECT_TRUE(g == "ISU" || g == "ISV" || g == "CSV") << g;
  }
}

TEST(Axioms, ShippedFixturesAreCorrect) {
  for (const char* name :
       {"olympics-a.schema", "olympics-b.schema", "hospital-a.schema", "hospital-b.schema",
        "rally-a.schema", "rally-b.schema", "strengthen-left.schema", "strengthen-right.schema",
        "chain.schema", "genorm.schema"}) {
    auto report = is_sch(fixture_schema(name));
    EXPECT_TRUE(report.passed()) << name << ": " << report.failures().front().label();
  }
}

TEST(Axioms, OlympicsAfterOptimiseSatisfiesUpdateCompleteness) {
  Schema s = parse_schema(read_file(testing::golden_path("olympics-optimise.schema")));
  auto report = validate_schema(s);
  auto* r = report.find(axiom::kUpdateCompleteness);
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->passed) << r->witness;
}

TEST(Axioms, EmptySchemaIsNotConnected) {
  auto report = validate_schema(fixture_schema("empty.schema"));
  EXPECT_FALSE(report.find(axiom::kConnectivity)->passed);
}

}  // namespace
}  // namespace ormt
