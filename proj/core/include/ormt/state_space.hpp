// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_STATE_SPACE_HPP_
#define ORMT_STATE_SPACE_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ormt/bounds.hpp"
#include "ormt/population.hpp"
#include "ormt/schema.hpp"

namespace ormt {

struct EnumerateOptions {
  // Abstract instances to offer besides the pools, typically the Val
  // images of a companion schema.
  std::set<Instance> extra_instances;
};

struct StateSpace {
  std::vector<Population> pops;  // full populations, sorted, unique
  double raw_log2 = 0;           // log2 of the raw base-population estimate
  std::uint64_t examined = 0;    // base populations generated

  bool contains(const Population& p) const;
  std::size_t size() const { return pops.size(); }
};

// Abstract instances named by Val calls with literal arguments and by
// EACH ... IS IN constraints over non-value object types.
std::set<Instance> val_images(const Schema& s);

// Values a value type ranges over: the bound for its domain if one is given,
// otherwise the declared finite domain.
std::vector<Literal> domain_values(const Schema& s, const TypeId& value_type,
                                   const DomainBounds& b);

// log2 of the number of base populations the enumerator would generate in
// the worst case.
double estimate_log2(const Schema& s, const DomainBounds& b, const EnumerateOptions& opts = {});

// Calls `visit` with every base population over the bounded instance pools
// that satisfies the constraints local to one type. Throws SpaceExceeded
// when the estimate exceeds the cap.
void for_each_base_population(const Schema& s, const DomainBounds& b,
                              const EnumerateOptions& opts,
                              const std::function<void(const Population&)>& visit);

StateSpace enumerate_state_space(const Schema& s, const DomainBounds& b,
                                 const EnumerateOptions& opts = {});

}  // namespace ormt

#endif  // ORMT_STATE_SPACE_HPP_
