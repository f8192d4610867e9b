// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_TEST_SUPPORT_HPP_
#define ORMT_TEST_SUPPORT_HPP_

#include <string>
#include <vector>

#include "ormt/bounds.hpp"
#include "ormt/equivalence.hpp"
#include "ormt/schema.hpp"
#include "ormt/scheme.hpp"
#include "ormt/state_space.hpp"
#include "ormt/transform.hpp"

namespace ormt::testing {

std::string fixture_path(const std::string& name);
std::string scheme_path(const std::string& name);
std::string golden_path(const std::string& name);

Schema fixture_schema(const std::string& name);
DomainBounds fixture_bounds(const std::string& name);
TransformationScheme shipped_scheme(const std::string& name);
std::vector<std::string> shipped_scheme_names();

// Instantiates a scheme (shipped name or fixture file ending in .scheme)
// with a fixture parameter list, optionally against a fixture schema.
InstantiatedTransformation instance(const std::string& scheme, const std::string& parlist,
                                    const std::string& context = "");

// The OTEmission instantiation used throughout, in the olympics-b context.
InstantiatedTransformation olympics();

struct AxiomCase {
  std::string fixture;  // empty for cases built in code
  std::string axiom;
  Schema schema;
};

// One failing case per axiom; `base` passes them all.
std::vector<AxiomCase> failing_axiom_cases();
Schema axiom_base();

}  // namespace ormt::testing

#endif  // ORMT_TEST_SUPPORT_HPP_
