// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <algorithm>

#include "ormt/error.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

using testing::fixture_path;
using testing::fixture_schema;
using testing::golden_path;
using testing::instance;
using testing::olympics;
using testing::shipped_scheme;

bool has(const std::set<TypeId>& s, const std::string& t) { return s.count(t) > 0; }

TEST(Instantiate, OlympicsBindings) {
  auto inst = olympics();
  EXPECT_EQ(inst.binding("x1"), "Country");
  EXPECT_EQ(inst.binding("r1,2"), "won-silver-in-1");
  EXPECT_EQ(inst.binding("r2,3"), "won-bronze-in-2");
  EXPECT_EQ(inst.binding("i3"), "'B'");
  EXPECT_FALSE(inst.binding("r1,4").has_value());
  EXPECT_EQ(inst.bindings.size(), 20u);
}

TEST(Instantiate, ArityIsFixedByTheList) {
  auto inst = olympics();
  ASSERT_FALSE(inst.arity.empty());
  std::size_t product = 1;
  for (const auto& [var, n] : inst.arity) product *= n;
  EXPECT_GE(product, 3u);
  EXPECT_TRUE(std::any_of(inst.arity.begin(), inst.arity.end(),
                          [](const auto& kv) { return kv.second == 3; }));
}

TEST(Instantiate, SerializedFormMatchesGolden) {
  auto inst = instantiate(shipped_scheme("ot-emission"),
                          parse_parlist(read_file(fixture_path("olympics.parlist"))));
  EXPECT_EQ(serialize_instantiated(inst), read_file(golden_path("ot-emission-olympics.txt")));
}

TEST(Instantiate, StaleListIsAnArityMismatch) {
  try {
    instance("ot-emission", "olympics-stale.parlist");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Instantiate, WrongNumberOfArgumentsIsRejected) {
  auto t = shipped_scheme("strengthen-split");
  EXPECT_THROW(instantiate(t, parse_parlist("(Driver, Car)")), Error);
}

TEST(Instantiate, FromAndToSidesSplitTheTypes) {
  auto inst = olympics();
  auto from = inst.from_types();
  auto to = inst.to_types();
  EXPECT_TRUE(has(from, "won-gold-in"));
  EXPECT_TRUE(has(from, "won-silver-in"));
  EXPECT_TRUE(has(to, "won-medals-of-in"));
  EXPECT_TRUE(has(to, "MedalKind"));
  EXPECT_FALSE(has(to, "won-gold-in"));
  auto all = inst.types();
  for (const auto& t : from) EXPECT_TRUE(has(all, t));
  for (const auto& t : to) EXPECT_TRUE(has(all, t));
}

TEST(Instantiate, SideSchemasCarryTheirTypes) {
  auto inst = olympics();
  Schema from = from_of(inst);
  Schema to = to_of(inst);
  Schema sch = sch_of(inst);
  EXPECT_TRUE(has(from.universe.types(), "won-gold-in"));
  EXPECT_FALSE(has(from.universe.types(), "won-medals-of-in"));
  EXPECT_TRUE(has(to.universe.types(), "won-medals-of-in"));
  EXPECT_TRUE(has(sch.universe.types(), "won-gold-in"));
  EXPECT_TRUE(has(sch.universe.types(), "won-medals-of-in"));
}

TEST(Instantiate, ContextSuppliesDomains) {
  auto inst = instance("pred-generalise-unary", "hospital.parlist", "hospital-a.schema");
  EXPECT_TRUE(has(inst.from_types(), "smokes"));
  EXPECT_TRUE(has(inst.from_types(), "drinks"));
  EXPECT_EQ(inst.arity.at("m"), 2u);
}

TEST(Instantiate, RelationshipBoundToAnObjectTypeIsPartial) {
  auto t = shipped_scheme("ot-emission");
  auto x = parse_parlist(read_file(fixture_path("olympics.parlist")));
  Schema ctx = parse_schema("SCHEMA ctx\nOBJECT TYPES: won-gold-in ;\nEND SCHEMA\n");
  try {
    instantiate(t, x, &ctx);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Partiality);
  }
}

TEST(Invert, SwapsTheSides) {
  auto inst = olympics();
  auto inv = invert(inst);
  EXPECT_TRUE(inv.inverted);
  EXPECT_EQ(inv.from_types(), inst.to_types());
  EXPECT_EQ(inv.to_types(), inst.from_types());
  EXPECT_EQ(inv.derivation_rules.size(), inst.update_rules.size());
  EXPECT_EQ(inv.update_rules.size(), inst.derivation_rules.size());
}

TEST(Invert, IsAnInvolution) {
  EXPECT_EQ(invert(invert(olympics())), olympics());
  auto h = instance("pred-generalise-unary", "hospital.parlist", "hospital-a.schema");
  EXPECT_EQ(invert(invert(h)), h);
}

}  // namespace
}  // namespace ormt
