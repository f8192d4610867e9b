// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <algorithm>

#include "ormt/error.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

using testing::fixture_schema;

TEST(SchemaText, ParsesOlympicsA) {
  Schema s = fixture_schema("olympics-a.schema");
  EXPECT_EQ(s.name, "olympics-a");
  EXPECT_TRUE(s.universe.is_entity("Country"));
  EXPECT_TRUE(s.universe.is_value("Quantity"));
  EXPECT_EQ(s.universe.role_list("won-medals-of-in"),
            (std::vector<RoleId>{"won-medals-of-in-1", "won-medals-of-in-3",
                                 "won-medals-of-in-2"}));
  EXPECT_EQ(s.version.constraints.size(), 5u);
  ASSERT_TRUE(s.version.dom.count("code"));
  EXPECT_FALSE(s.version.dom.at("code").bounded());
  EXPECT_EQ(s.version.dom.at("Quantity").values->size(), 10u);
}

TEST(SchemaText, SerializeThenParseIsIdentity) {
  for (const char* name : {"olympics-a.schema", "olympics-b.schema", "hospital-a.schema",
                           "hospital-b.schema", "rally-a.schema", "chain.schema",
                           "axioms/base.schema", "genorm.schema"}) {
    Schema s = fixture_schema(name);
    EXPECT_EQ(parse_schema(serialize_schema(s)), s) << name;
  }
}

TEST(SchemaText, CommentsAndOrderOfDeclarationsDoNotMatter) {
  Schema a = parse_schema(
      "SCHEMA s OBJECT TYPES: B, A ; RELATIONSHIP TYPES: f = [A:f-1] ; g = [B:g-1] ; END SCHEMA");
  Schema b = parse_schema(
      "# note\nSCHEMA s\nOBJECT TYPES: A, B ;\nRELATIONSHIP TYPES:\n  g = [ B:g-1 ] ;\n"
      "  f = [ A:f-1 ] ;\nEND SCHEMA\n");
  EXPECT_EQ(a, b);
}

TEST(SchemaText, ReportsPositionOfSyntaxErrors) {
  try {
    parse_schema("SCHEMA s\nOBJECT TYPES: A\nRELATIONSHIP TYPES: f = [A f-1] ;\nEND SCHEMA");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(SchemaText, SectionsMustComeInOrder) {
  EXPECT_THROW(parse_schema("SCHEMA s RELATIONSHIP TYPES: f = [A:f-1] ; OBJECT TYPES: A ; "
                            "END SCHEMA"),
               SyntaxError);
}

TEST(SchemaText, StrictParsingRejectsBadNames) {
  const char* twice = "SCHEMA s OBJECT TYPES: A, A ; END SCHEMA";
  EXPECT_THROW(parse_schema(twice), Error);
  EXPECT_NO_THROW(parse_schema(twice, NameCheck::Deferred));
  const char* unknown = "SCHEMA s OBJECT TYPES: A ; INTERNAL: B ; END SCHEMA";
  EXPECT_THROW(parse_schema(unknown), Error);
  Schema s = parse_schema(unknown, NameCheck::Deferred);
  EXPECT_TRUE(s.version.internal.count("B"));
}

TEST(SchemaText, MissingFileIsAnIoError) {
  try {
    load_schema("/nonexistent/x.schema");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Schema, DerivedTypesIncludeConstantUpdates) {
  Schema s = parse_schema(
      "SCHEMA s OBJECT TYPES: A ; VALUE TYPES: C: c ; DOMAINS: c = { 'x' } ;"
      " RELATIONSHIP TYPES: f = [A:f-1] ; g = [A:g-1] ; k = [A:k-1, C:k-2] ;"
      " DERIVATION RULES: g = PROJ[g-1 = f-1] f ;"
      " UPDATE RULES: k = {<k-1 = Val(A,'x'), k-2 = 'x'>} ; END SCHEMA");
  EXPECT_EQ(derived_types(s), (std::set<TypeId>{"g", "k"}));
  ASSERT_EQ(context_rules(s).size(), 1u);
  EXPECT_EQ(context_rules(s)[0].defines, "k");
}

TEST(Schema, PopulatableExcludesValueTypes) {
  Schema s = fixture_schema("hospital-a.schema");
  EXPECT_TRUE(populatable(s.universe, "Patient"));
  EXPECT_TRUE(populatable(s.universe, "smokes"));
  EXPECT_FALSE(populatable(s.universe, "PatientName"));
}

TEST(Schema, CanonicalizeSortsRulesAndConstraints) {
  Schema s = fixture_schema("olympics-a.schema");
  Schema shuffled = s;
  std::reverse(shuffled.version.constraints.begin(), shuffled.version.constraints.end());
  EXPECT_NE(shuffled, s);
  shuffled.canonicalize();
  EXPECT_EQ(shuffled, s);
}

}  // namespace
}  // namespace ormt
