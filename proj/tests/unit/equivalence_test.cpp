// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "ormt/error.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

using testing::fixture_bounds;
using testing::fixture_path;
using testing::fixture_schema;
using testing::instance;

InstantiatedTransformation hospital() {
  return instance("pred-generalise-unary", "hospital.parlist", "hospital-a.schema");
}

Schema hospital_without(const std::string& constraint_line) {
  std::string text = read_file(fixture_path("hospital-a.schema"));
  text.erase(text.find(constraint_line), constraint_line.size());
  return parse_schema(text);
}

TEST(DirectEquivalence, IsReflexive) {
  Schema a = fixture_schema("hospital-a.schema");
  auto v = check_direct_equivalence(a, a, fixture_bounds("hospital.bounds"));
  EXPECT_EQ(v.comparison, Comparison::Equivalent);
  EXPECT_EQ(v.first_size, v.second_size);
  EXPECT_GT(v.first_size, 0u);
  EXPECT_FALSE(v.only_in_first.has_value());
}

TEST(DirectEquivalence, DroppedConstraintMakesTheOtherStronger) {
  Schema strong = fixture_schema("hospital-a.schema");
  Schema weak = hospital_without("  n2: UNIQUE {has-name-2} ;\n");
  auto b = fixture_bounds("hospital.bounds");
  auto v = check_direct_equivalence(strong, weak, b);
  EXPECT_EQ(v.comparison, Comparison::FirstStronger);
  EXPECT_LT(v.first_size, v.second_size);
  ASSERT_TRUE(v.only_in_second.has_value());
  EXPECT_FALSE(v.only_in_first.has_value());
  auto w = check_direct_equivalence(weak, strong, b);
  EXPECT_EQ(w.comparison, Comparison::SecondStronger);
  EXPECT_TRUE(w.only_in_first.has_value());
}

TEST(DirectEquivalence, DifferentVocabulariesAreRejected) {
  try {
    check_direct_equivalence(fixture_schema("hospital-a.schema"), fixture_schema("hospital-b.schema"),
                             fixture_bounds("hospital.bounds"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VocabularyMismatch);
  }
}

TEST(DirectEquivalence, HospitalExtensionsAgreeBothWays) {
  auto inst = hospital();
  auto b = fixture_bounds("hospital.bounds");
  Schema a = conservative_extension(fixture_schema("hospital-a.schema"), inst, Side::To);
  Schema c = conservative_extension(fixture_schema("hospital-b.schema"), inst, Side::From);
  EXPECT_EQ(check_direct_equivalence(a, c, b).comparison, Comparison::Equivalent);
  EXPECT_EQ(check_direct_equivalence(c, a, b).comparison, Comparison::Equivalent);
}

TEST(DirectEquivalence, GeneratedPairsAreEquivalent) {
  std::mt19937 rng(11);
  auto b = testing::pair_bounds();
  for (int i = 0; i < 5; ++i) {
    auto pair = testing::equivalent_pair(rng, i);
    EXPECT_EQ(check_direct_equivalence(pair.first, pair.second, b).comparison,
              Comparison::Equivalent)
        << pair.rewrites;
  }
}

TEST(Translation, StrengtheningIsDirected) {
  auto inst = instance("strengthen-split", "strengthen.parlist", "strengthen-right.schema");
  auto b = fixture_bounds("strengthen.bounds");
  Schema right = fixture_schema("strengthen-right.schema");
  Schema left = fixture_schema("strengthen-left.schema");
  auto v = check_translation(right, left, inst, b);
  EXPECT_EQ(v.comparison, Comparison::SecondStronger);
  EXPECT_TRUE(v.untranslatable_first.has_value());
  EXPECT_FALSE(v.untranslatable_second.has_value());
}

TEST(SchemeProperty, HospitalPreservesEquivalence) {
  auto v = check_scheme_property(hospital(), fixture_bounds("hospital.bounds"));
  EXPECT_EQ(v.property, SchemeProperty::EquivalencePreserving);
  EXPECT_EQ(v.detail.first_size, v.detail.second_size);
}

TEST(SchemeProperty, SplitStrengthens) {
  auto inst = instance("strengthen-split", "strengthen.parlist", "strengthen-right.schema");
  auto v = check_scheme_property(inst, fixture_bounds("strengthen.bounds"));
  EXPECT_EQ(v.property, SchemeProperty::Strengthening);
  EXPECT_EQ(v.detail.comparison, Comparison::FirstStronger);
}

TEST(SchemeProperty, MergeIsNeither) {
  auto inst = instance("weaken-merge.scheme", "weaken.parlist");
  auto v = check_scheme_property(inst, fixture_bounds("weaken.bounds"));
  EXPECT_EQ(v.property, SchemeProperty::Neither);
}

TEST(SchemeProperty, ViewsSwapUnderInversion) {
  auto inst = hospital();
  EXPECT_EQ(from_view(invert(inst)).version.types, to_view(inst).version.types);
}

TEST(Bijection, HospitalMappingIsABijection) {
  auto r = verify_bijection(hospital(), fixture_bounds("hospital.bounds"));
  EXPECT_TRUE(r.bijective) << r.failure.value_or("");
  EXPECT_TRUE(r.round_trip);
  EXPECT_EQ(r.from_size, r.to_size);
  EXPECT_EQ(r.images, r.to_size);
}

TEST(Bijection, MergeIsNotInjective) {
  auto r = verify_bijection(instance("weaken-merge.scheme", "weaken.parlist"),
                            fixture_bounds("weaken.bounds"));
  EXPECT_FALSE(r.bijective);
  EXPECT_TRUE(r.failure.has_value());
}

TEST(Distributivity, HospitalUpdatesDistribute) {
  auto r = check_update_distributivity(hospital(), fixture_bounds("hospital.bounds"));
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.guarded_pairs, 0u);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(Distributivity, StrictScopeFindsTheConstantRule) {
  DistributivityOptions strict;
  strict.strict_mu = true;
  auto r = check_update_distributivity(hospital(), fixture_bounds("hospital.bounds"), strict);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->expected, r.counterexample->actual);
}

TEST(Names, ComparisonAndPropertyNames) {
  EXPECT_EQ(to_string(Comparison::Equivalent), "equivalent");
  EXPECT_EQ(to_string(SchemeProperty::Neither), "neither");
}

}  // namespace
}  // namespace ormt
