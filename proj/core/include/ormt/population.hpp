// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_POPULATION_HPP_
#define ORMT_POPULATION_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ormt/instance.hpp"
#include "ormt/relation.hpp"
#include "ormt/universe.hpp"

namespace ormt {

// Instance sets for object types, tuple sets for relationship types.
// Relations keep their columns in the declared role order.
struct Population {
  std::map<TypeId, std::set<Instance>> objects;
  std::map<TypeId, Relation> relations;

  bool covers(const TypeId& t) const {
    return objects.count(t) > 0 || relations.count(t) > 0;
  }
  std::set<TypeId> types() const;
  std::size_t element_count() const;

  friend auto operator<=>(const Population&, const Population&) = default;
  friend bool operator==(const Population&, const Population&) = default;
};

enum class SetOp { Union, Minus };

// Pointwise union or difference; both sides must cover the same types.
Population pop_combine(const Population& a, const Population& b, SetOp op);
Population empty_like(const Population& p);
Population restrict_population(const Population& p, const std::set<TypeId>& keep);

// An empty assignment for every object and relationship type in `types`.
Population empty_population(const Universe& u, const std::set<TypeId>& types);

std::string population_text(const Population& p, const std::string& schema_name);
Population parse_population(std::string_view source, const Universe& u,
                            std::string* schema_name = nullptr);

}  // namespace ormt

#endif  // ORMT_POPULATION_HPP_
