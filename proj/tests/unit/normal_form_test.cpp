// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include "ormt/normal_form.hpp"
#include "ormt/rule.hpp"
#include "ormt/schema.hpp"

namespace ormt {
namespace {

class NormalForm : public ::testing::Test {
 protected:
  Universe u_ = parse_schema(
                    "SCHEMA n OBJECT TYPES: A, B ; VALUE TYPES: C: c ; DOMAINS: c = {'x'} ;"
                    " RELATIONSHIP TYPES: f = [A:f-1, B:f-2] ; g = [A:g-1, B:g-2] ;"
                    " h = [A:h-1, C:h-2] ; END SCHEMA")
                    .universe;

  bool same(const char* a, const char* b) {
    return nf::equivalent(parse_rule_expr(a), parse_rule_expr(b), u_);
  }
};

TEST_F(NormalForm, UnionIsCommutative) {
  EXPECT_TRUE(same("PROJ[o = f-1] f UNION PROJ[o = g-1] g", "PROJ[o = g-1] g UNION PROJ[o = f-1] f"));
}

TEST_F(NormalForm, ProjectionOfProjectionComposes) {
  EXPECT_TRUE(same("PROJ[o = p] PROJ[p = f-1] f", "PROJ[o = f-1] f"));
}

TEST_F(NormalForm, SelfJoinOnAllRolesIsTheRelation) {
  EXPECT_TRUE(same("PROJ[f-1 = f-1, f-2 = f-2] f", "f"));
}

TEST_F(NormalForm, DifferentSelectionsDiffer) {
  EXPECT_FALSE(same("PROJ[o = h-1] SEL[h-2 = 'x'] h", "PROJ[o = h-1] h"));
  EXPECT_FALSE(same("PROJ[o = f-1] f", "PROJ[o = g-1] g"));
}

TEST_F(NormalForm, ContainmentFollowsSelection) {
  auto narrow = nf::normalize(parse_rule_expr("PROJ[o = h-1] SEL[h-2 = 'x'] h"), u_);
  auto wide = nf::normalize(parse_rule_expr("PROJ[o = h-1] h"), u_);
  EXPECT_TRUE(nf::contained_in(narrow, wide));
  EXPECT_FALSE(nf::contained_in(wide, narrow));
}

TEST_F(NormalForm, RecognisesRenamings) {
  auto q = nf::normalize(parse_rule_expr("PROJ[x-1 = f-2, x-2 = f-1] f"), u_);
  auto r = nf::as_renaming(q, u_);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->base, "f");
  EXPECT_EQ(r->roles.at("x-1"), "f-2");
  EXPECT_FALSE(nf::as_renaming(nf::normalize(parse_rule_expr("PROJ[x = f-1] f"), u_), u_));
}

TEST_F(NormalForm, RecognisesConstants) {
  auto q = nf::normalize(parse_rule_expr("{<h-1 = Val(A,'x'), h-2 = 'x'>}"), u_);
  auto rows = nf::as_constant(q);
  ASSERT_TRUE(rows.has_value());
  EXPECT_EQ(rows->size(), 1u);
  EXPECT_FALSE(nf::as_constant(nf::normalize(parse_rule_expr("f"), u_)));
}

}  // namespace
}  // namespace ormt
