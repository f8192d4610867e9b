// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_TEST_GENERATORS_HPP_
#define ORMT_TEST_GENERATORS_HPP_

#include <random>
#include <string>
#include <utility>

#include "ormt/bounds.hpp"
#include "ormt/schema.hpp"

namespace ormt::testing {

// Small schemas with random subtyping, internal types, constraints and
// rule chains. Rules only refer to earlier relationship types, so
// substitution always terminates. The result need not be correct.
std::string random_schema_text(std::mt19937& rng, int index);
Schema random_schema(std::mt19937& rng, int index);

struct SchemaPair {
  Schema first;
  Schema second;
  std::string rewrites;  // which equivalent forms differ, for messages
};

// Two schemas over one vocabulary that differ only in the way some
// constraints and a derivation rule are written; each rewrite keeps the
// set of valid populations.
SchemaPair equivalent_pair(std::mt19937& rng, int index);
DomainBounds pair_bounds();

// Adds the same fresh relationship type over the pair's players, with a
// uniqueness constraint on its first role.
Schema with_fresh_fact(const Schema& s);

}  // namespace ormt::testing

#endif  // ORMT_TEST_GENERATORS_HPP_
