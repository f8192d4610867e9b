// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/population.hpp"

#include <algorithm>
#include <iterator>

#include "ormt/error.hpp"

namespace ormt {

std::set<TypeId> Population::types() const {
  std::set<TypeId> out;
  for (const auto& [t, _] : objects) out.insert(t);
  for (const auto& [t, _] : relations) out.insert(t);
  return out;
}

std::size_t Population::element_count() const {
  std::size_t n = 0;
  for (const auto& [_, s] : objects) n += s.size();
  for (const auto& [_, r] : relations) n += r.size();
  return n;
}

Population pop_combine(const Population& a, const Population& b, SetOp op) {
  if (a.types() != b.types()) {
    throw Error(ErrorKind::DomainMismatch, "populations cover different types");
  }
  Population out;
  for (const auto& [t, xs] : a.objects) {
    const auto& ys = b.objects.at(t);
    std::set<Instance> zs;
    if (op == SetOp::Union) {
      std::set_union(xs.begin(), xs.end(), ys.begin(), ys.end(), std::inserter(zs, zs.end()));
    } else {
      std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(),
                          std::inserter(zs, zs.end()));
    }
    out.objects.emplace(t, std::move(zs));
  }
  for (const auto& [t, ra] : a.relations) {
    const Relation& rb = b.relations.at(t);
    if (ra.columns() != rb.columns()) {
      throw Error(ErrorKind::DomainMismatch, "relation " + t + " has different columns");
    }
    std::vector<Row> rows;
    if (op == SetOp::Union) {
      std::set_union(ra.rows().begin(), ra.rows().end(), rb.rows().begin(), rb.rows().end(),
                     std::back_inserter(rows));
    } else {
      std::set_difference(ra.rows().begin(), ra.rows().end(), rb.rows().begin(),
                          rb.rows().end(), std::back_inserter(rows));
    }
    out.relations.emplace(t, Relation(ra.columns(), std::move(rows)));
  }
  return out;
}

Population empty_like(const Population& p) {
  Population out;
  for (const auto& [t, _] : p.objects) out.objects[t];
  for (const auto& [t, r] : p.relations) out.relations.emplace(t, Relation(r.columns()));
  return out;
}

Population restrict_population(const Population& p, const std::set<TypeId>& keep) {
  Population out;
  for (const auto& [t, s] : p.objects) {
    if (keep.count(t)) out.objects.emplace(t, s);
  }
  for (const auto& [t, r] : p.relations) {
    if (keep.count(t)) out.relations.emplace(t, r);
  }
  return out;
}

Population empty_population(const Universe& u, const std::set<TypeId>& types) {
  Population out;
  for (const auto& t : types) {
    if (u.is_object(t)) {
      out.objects[t];
    } else if (u.is_relationship(t)) {
      out.relations.emplace(t, Relation(u.role_list(t)));
    }
  }
  return out;
}

}  // namespace ormt
