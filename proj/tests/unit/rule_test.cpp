// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include "ormt/error.hpp"
#include "ormt/eval.hpp"
#include "ormt/population.hpp"
#include "ormt/rule.hpp"
#include "ormt/schema.hpp"

namespace ormt {
namespace {

Instance a(int i) { return Instance::abstract("A", "#" + std::to_string(i)); }
Instance v(const char* s) { return Instance::value(std::string(s)); }

class RuleEval : public ::testing::Test {
 protected:
  void SetUp() override {
    s_ = parse_schema(
        "SCHEMA r OBJECT TYPES: A, K ; VALUE TYPES: C: c ; DOMAINS: c = { 'x', 'y' } ;"
        " RELATIONSHIP TYPES: f = [A:f-1, C:f-2] ; k = [K:k-1, C:k-2] ; u = [A:u-1] ;"
        " END SCHEMA");
    pop_.relations["f"] = Relation({"f-1", "f-2"}, {{a(0), v("x")}, {a(1), v("y")}});
    pop_.relations["k"] = Relation({"k-1", "k-2"}, {{val(s_.universe, "K", std::string("x")), v("x")}});
    pop_.relations["u"] = Relation({"u-1"}, {{a(1)}});
  }

  Relation eval(const std::string& text) { return eval_rule(parse_rule_expr(text), pop_, s_.universe); }

  Schema s_;
  Population pop_;
};

TEST_F(RuleEval, ProjectionRenamesAndReorders) {
  Relation r = eval("PROJ[g-2 = f-1, g-1 = f-2] f");
  EXPECT_EQ(r.columns(), (std::vector<RoleId>{"g-2", "g-1"}));
  EXPECT_TRUE(r.contains({a(0), v("x")}));
  EXPECT_EQ(r.size(), 2u);
}

TEST_F(RuleEval, SelectionWithLiteral) {
  Relation r = eval("SEL[f-2 = 'y'] f");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.rows()[0][0], a(1));
}

TEST_F(RuleEval, JoinThenSelectOnRoles) {
  Relation r = eval("PROJ[o = f-1] SEL[f-2 = k-2] f JOIN k");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.rows()[0][0], a(0));
}

TEST_F(RuleEval, UnionRemovesDuplicates) {
  Relation r = eval("PROJ[o = f-1] f UNION PROJ[o = u-1] u");
  EXPECT_EQ(r.size(), 2u);
}

TEST_F(RuleEval, ValIsInjectiveAndTyped) {
  Relation r = eval("PROJ[o = Val(K, f-2)] f");
  EXPECT_EQ(r.size(), 2u);
  EXPECT_TRUE(r.contains({val(s_.universe, "K", std::string("y"))}));
  EXPECT_NE(val(s_.universe, "K", std::string("x")), val(s_.universe, "A", std::string("x")));
}

TEST_F(RuleEval, LiteralSetIgnoresInput) {
  Relation r = eval("{<k-1 = Val(K,'x'), k-2 = 'x'>, <k-1 = Val(K,'y'), k-2 = 'y'>}");
  EXPECT_EQ(r.size(), 2u);
}

TEST_F(RuleEval, UnknownRoleIsAnError) {
  EXPECT_THROW(eval("PROJ[o = nope] f"), Error);
  EXPECT_THROW(eval("missing"), Error);
}

TEST(RuleText, PrintThenParseIsIdentity) {
  for (const char* text :
       {"f", "PROJ[a = b, c = 'x'] f", "SEL[a = b, c = 3] f JOIN g",
        "PROJ[o = Val(K,'x')] f UNION g", "{<a = Val(K,'x'), b = 'x'>}",
        "PROJ[p = r] SEL[t = u, v = 'S'] g JOIN h"}) {
    RuleExpr e = parse_rule_expr(text);
    EXPECT_EQ(parse_rule_expr(to_string(e)), e) << text;
  }
}

TEST(RuleText, RejectsUnbalancedBrackets) {
  EXPECT_THROW(parse_rule_expr("PROJ[a = b f"), Error);
}

TEST(Rules, DependsAndConstancy) {
  RuleExpr e = parse_rule_expr("PROJ[o = f-1] SEL[f-2 = k-2] f JOIN k");
  EXPECT_EQ(depends(e), (std::set<TypeId>{"f", "k"}));
  EXPECT_EQ(relation_refs(e), (std::set<TypeId>{"f", "k"}));
  EXPECT_FALSE(is_constant(e));
  EXPECT_TRUE(is_constant(parse_rule_expr("{<a = 'x'>}")));
  EXPECT_EQ(mentioned_roles(e), (std::set<RoleId>{"o", "f-1", "f-2", "k-2"}));
}

TEST(Rules, SubstituteInlinesRemovedBodies) {
  std::vector<Rule> kept{{"g", parse_rule_expr("PROJ[g-1 = m-1] m"), RuleKind::Derivation}};
  std::vector<Rule> removed{{"m", parse_rule_expr("PROJ[m-1 = n-1] n"), RuleKind::Derivation},
                            {"n", parse_rule_expr("PROJ[n-1 = f-1] f"), RuleKind::Derivation}};
  auto out = substitute(kept, removed);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(depends(out[0]), std::set<TypeId>{"f"});
}

TEST(Rules, SubstituteDetectsCycles) {
  std::vector<Rule> kept{{"g", parse_rule_expr("m"), RuleKind::Derivation}};
  std::vector<Rule> removed{{"m", parse_rule_expr("n"), RuleKind::Derivation},
                            {"n", parse_rule_expr("m"), RuleKind::Derivation}};
  try {
    substitute(kept, removed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Cycle);
  }
}

}  // namespace
}  // namespace ormt
