// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include "ormt/constraint_eval.hpp"
#include "ormt/eval.hpp"
#include "ormt/population.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

Instance p(int i) { return Instance::abstract("Patient", "#" + std::to_string(i)); }
Instance s(const char* x) { return Instance::value(std::string(x)); }

class Hospital : public ::testing::Test {
 protected:
  Schema schema_ = testing::fixture_schema("hospital-a.schema");

  Population named(std::vector<std::pair<int, const char*>> names) {
    Population pop = empty_population(schema_.universe, base_types(schema_));
    for (const auto& [i, n] : names) {
      pop.objects["Patient"].insert(p(i));
      pop.relations["has-name"].insert({p(i), s(n)});
    }
    return pop;
  }
};

TEST_F(Hospital, EmptyPopulationIsValid) {
  EXPECT_TRUE(is_pop(schema_, named({}), PopKind::Base).valid());
}

TEST_F(Hospital, MandatoryNameIsEnforced) {
  Population pop = named({{0, "a"}});
  pop.objects["Patient"].insert(p(1));
  auto verdict = is_pop(schema_, pop, PopKind::Base);
  ASSERT_FALSE(verdict.valid());
  EXPECT_EQ(verdict.violations[0].what, "n3");
}

TEST_F(Hospital, UniquenessIsEnforced) {
  Population pop = named({{0, "a"}, {1, "a"}});
  auto verdict = is_pop(schema_, pop, PopKind::Base);
  ASSERT_FALSE(verdict.valid());
  EXPECT_EQ(verdict.violations[0].what, "n2");
}

TEST_F(Hospital, PlayersMustBePresent) {
  Population pop = named({{0, "a"}});
  pop.relations["smokes"].insert({p(5)});
  EXPECT_FALSE(is_pop(schema_, pop, PopKind::Base).valid());
}

TEST_F(Hospital, TextRoundTrip) {
  Population pop = named({{0, "a"}, {1, "b"}});
  pop.relations["drinks"].insert({p(1)});
  std::string name;
  Population back = parse_population(population_text(pop, "h"), schema_.universe, &name);
  EXPECT_EQ(back, pop);
  EXPECT_EQ(name, "h");
}

TEST_F(Hospital, MinusAndUnion) {
  Population one = named({{0, "a"}});
  Population two = named({{1, "b"}});
  Population both = pop_combine(one, two, SetOp::Union);
  EXPECT_EQ(both.objects["Patient"].size(), 2u);
  EXPECT_EQ(pop_combine(both, two, SetOp::Minus), one);
  EXPECT_EQ(pop_combine(one, one, SetOp::Minus), empty_like(one));
}

TEST_F(Hospital, RestrictKeepsOnlyListedTypes) {
  Population pop = restrict_population(named({{0, "a"}}), {"has-name"});
  EXPECT_EQ(pop.types(), std::set<TypeId>{"has-name"});
  EXPECT_EQ(pop.element_count(), 1u);
}

TEST(Constraints, EachKindOnSmallRelations) {
  Schema sch = parse_schema(
      "SCHEMA c OBJECT TYPES: A ; VALUE TYPES: C: c ; DOMAINS: c = { 'x', 'y' } ;"
      " RELATIONSHIP TYPES: f = [A:f-1, C:f-2] ; g = [A:g-1] ; h = [A:h-1] ; END SCHEMA");
  Instance a0 = Instance::abstract("A", "#0");
  Instance a1 = Instance::abstract("A", "#1");
  Population pop;
  pop.objects["A"] = {a0, a1};
  pop.objects["C"] = {s("x"), s("y")};
  pop.relations["f"] = Relation({"f-1", "f-2"}, {{a0, s("x")}, {a0, s("y")}, {a1, s("x")}});
  pop.relations["g"] = Relation({"g-1"}, {{a0}});
  pop.relations["h"] = Relation({"h-1"}, {{a1}});

  auto holds = [&](const Constraint& c) { return eval_constraint(c, sch, pop); };
  EXPECT_FALSE(holds(Constraint::unique("c", {"f-1"})));
  EXPECT_TRUE(holds(Constraint::unique("c", {"f-1", "f-2"})));
  EXPECT_TRUE(holds(Constraint::mandatory("c", {"f-1"})));
  EXPECT_FALSE(holds(Constraint::mandatory("c", {"g-1"})));
  EXPECT_TRUE(holds(Constraint::mandatory("c", {"g-1", "h-1"})));
  EXPECT_TRUE(holds(Constraint::frequency("c", "f-1", 1, 2)));
  EXPECT_FALSE(holds(Constraint::frequency("c", "f-2", 1, 1)));
  EXPECT_TRUE(holds(Constraint::exclusion("c", {"g-1"}, {"h-1"})));
  EXPECT_TRUE(holds(Constraint::subset("c", {{"g-1", "f-1"}})));
  EXPECT_FALSE(holds(Constraint::equality("c", {{"g-1", "f-1"}})));
  EXPECT_TRUE(holds(Constraint::card("c", "A", 2)));
  EXPECT_FALSE(holds(Constraint::card("c", "A", 1)));
  EXPECT_TRUE(holds(Constraint::each_is_in("c", "C", {std::string("x"), std::string("y")})));
  EXPECT_FALSE(holds(Constraint::each_is_in("c", "C", {std::string("x")})));
}

TEST(Constraints, TextRoundTrip) {
  for (const char* text :
       {"UNIQUE {a, b}", "MANDATORY {a}", "EXTUNIQUE {a, b}", "EXCLUSION {a} {b}",
        "EACH T IS IN 'G', 'S'", "FREQUENCY a 1..2", "SUBSET (a -> b), (c -> d)",
        "EQUALITY (a = b)", "CARD T = 1"}) {
    EXPECT_EQ(constraint_text(parse_constraint(text, "k")), text);
  }
}

TEST(Derivations, OlympicsBinariesFollowTheTernary) {
  Schema s = parse_schema(read_file(testing::golden_path("olympics-optimise.schema")));
  Population base = empty_population(s.universe, base_types(s));
  Instance c0 = Instance::abstract("Country", "#0");
  Instance gold = val(s.universe, "MedalKind", std::string("G"));
  base.objects["Country"] = {c0};
  base.objects["MedalKind"] = {gold};
  base.relations["won-medals-of-in"] =
      Relation(s.universe.role_list("won-medals-of-in"), {{c0, Instance::value(std::int64_t{3}), gold}});
  Population full = extend_with_derivations(s, base);
  EXPECT_EQ(full.relations.at("won-gold-in").size(), 1u);
  EXPECT_TRUE(full.relations.at("won-silver-in").empty());
  // The reference relation is fixed by its constant rule.
  EXPECT_EQ(full.relations.at("MedalKind.code").size(), 3u);
}

}  // namespace
}  // namespace ormt
