// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_BOUNDS_HPP_
#define ORMT_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ormt/instance.hpp"

namespace ormt {

// Finite stand-ins for everything enumeration cannot range over: values for
// domains (overriding declared ones), a pool of anonymous instances per
// non-value object type, and a cap on the raw search space.
struct DomainBounds {
  std::map<std::string, std::vector<Literal>> domains;
  std::map<TypeId, std::size_t> pools;  // absent types get no anonymous instances
  std::uint64_t cap = std::uint64_t{1} << 20;

  std::size_t pool(const TypeId& t) const {
    auto it = pools.find(t);
    return it == pools.end() ? 0 : it->second;
  }
  friend bool operator==(const DomainBounds&, const DomainBounds&) = default;
};

DomainBounds parse_bounds(std::string_view source);
std::string bounds_text(const DomainBounds& b);

}  // namespace ormt

#endif  // ORMT_BOUNDS_HPP_
