// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace ormt {
namespace {

using testing::fixture_path;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run ormt(std::vector<std::string> args) {
  args.insert(args.begin(), "ormt");
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return fixture_path(name); }

TEST(CliValidate, CorrectSchemaExitsZero) {
  auto r = ormt({"validate", fx("olympics-a.schema")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("schema is correct"), std::string::npos);
}

TEST(CliValidate, FailingAxiomIsNamed) {
  auto r = ormt({"validate", fx("axioms/separation.schema")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL ISU separation"), std::string::npos);
}

TEST(CliValidate, MissingFileIsAnInputError) {
  auto r = ormt({"validate", fx("no-such.schema")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(CliValidate, JsonCarriesTheFormatVersion) {
  auto r = ormt({"validate", fx("olympics-a.schema"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("format_version"), 1);
}

TEST(CliApply, OptimiseMatchesGolden) {
  auto r = ormt({"apply", fx("olympics-b.schema"), "--scheme", "ot-emission", "--parlist",
                 fx("olympics.parlist"), "--mode", "optimise"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_file(testing::golden_path("olympics-optimise.schema")));
}

TEST(CliApply, StaleParameterListFails) {
  auto r = ormt({"apply", fx("olympics-b.schema"), "--scheme", "ot-emission", "--parlist",
                 fx("olympics-stale.parlist")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("arity mismatch"), std::string::npos);
}

TEST(CliApply, AlternativeModeReportsIllFormedResult) {
  auto r = ormt({"apply", fx("olympics-b.schema"), "--scheme", "ot-emission", "--parlist",
                 fx("olympics.parlist"), "--mode", "alternative"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliApply, UnknownModeIsAnInputError) {
  auto r = ormt({"apply", fx("olympics-b.schema"), "--scheme", "ot-emission", "--parlist",
                 fx("olympics.parlist"), "--mode", "fastest"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliCheck, HospitalSchemeIsEquivalencePreserving) {
  auto r = ormt({"check", "--scheme", "pred-generalise-unary", "--parlist", fx("hospital.parlist"),
                 "--schema", fx("hospital-a.schema"), "--bounds", fx("hospital.bounds"),
                 "--equiv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("equivalence preserving"), std::string::npos);
}

TEST(CliCheck, HospitalSchemasAreEquivalent) {
  auto r = ormt({"check", fx("hospital-a.schema"), fx("hospital-b.schema"), "--scheme",
                 "pred-generalise-unary", "--parlist", fx("hospital.parlist"), "--bounds",
                 fx("hospital.bounds"), "--equiv"});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
}

TEST(CliCheck, SplitStrengthens) {
  auto r = ormt({"check", fx("strengthen-right.schema"), fx("strengthen-left.schema"), "--scheme",
                 "strengthen-split", "--parlist", fx("strengthen.parlist"), "--bounds",
                 fx("strengthen.bounds"), "--stronger"});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
}

TEST(CliCheck, MergeIsNeither) {
  auto r = ormt({"check", "--scheme", fx("weaken-merge.scheme"), "--parlist", fx("weaken.parlist"),
                 "--bounds", fx("weaken.bounds"), "--stronger", "--json"});
  EXPECT_EQ(r.code, 1) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("format_version"), 1);
  EXPECT_NE(r.out.find("neither"), std::string::npos);
}

TEST(CliCheck, StrictDistributivityFails) {
  auto r = ormt({"check", "--scheme", "pred-generalise-unary", "--parlist", fx("hospital.parlist"),
                 "--schema", fx("hospital-a.schema"), "--bounds", fx("hospital.bounds"),
                 "--distrib", "--strict-mu"});
  EXPECT_EQ(r.code, 1) << r.err;
}

TEST(CliCheck, DefaultDistributivityHolds) {
  auto r = ormt({"check", "--scheme", "pred-generalise-unary", "--parlist", fx("hospital.parlist"),
                 "--schema", fx("hospital-a.schema"), "--bounds", fx("hospital.bounds"),
                 "--distrib"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliEnumerate, CountsPopulations) {
  auto r = ormt({"enumerate", fx("hospital-a.schema"), "--bounds", fx("hospital-small.bounds")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
}

TEST(CliEnumerate, EmptySchemaHasOnePopulation) {
  auto r = ormt({"enumerate", fx("empty.schema"), "--bounds", fx("hospital-small.bounds")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");
}

TEST(CliEnumerate, CapExceededExitsThree) {
  auto r = ormt({"enumerate", fx("hospital-a.schema"), "--bounds", fx("hospital-cap1.bounds")});
  EXPECT_EQ(r.code, 3);
}

TEST(CliEnumerate, ListedPopulationsAsJson) {
  auto r = ormt({"enumerate", fx("hospital-a.schema"), "--bounds", fx("hospital-small.bounds"),
                 "--list", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("format_version"), 1);
}

TEST(CliSchemes, ListsTheShippedSchemes) {
  auto r = ormt({"schemes"});
  EXPECT_EQ(r.code, 0);
  for (const char* n : {"ot-absorb-context", "ot-emission", "pred-generalise-unary",
                        "strengthen-split"}) {
    EXPECT_NE(r.out.find(n), std::string::npos) << n;
  }
}

TEST(CliInvert, PrintsTheSwappedScheme) {
  auto r = ormt({"invert", "--scheme", "ot-emission", "--parlist", fx("olympics.parlist")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(CliCleanup, ChainLosesItsInternalTypes) {
  auto r = ormt({"cleanup", fx("chain.schema")});
  ASSERT_EQ(r.code, 0) << r.err;
  Schema s = parse_schema(r.out);
  EXPECT_EQ(s.version.types, (std::set<TypeId>{"Person", "likes"}));
}

}  // namespace
}  // namespace ormt
