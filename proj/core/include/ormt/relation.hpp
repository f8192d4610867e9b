// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_RELATION_HPP_
#define ORMT_RELATION_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ormt/instance.hpp"

namespace ormt {

// A set of tuples over named columns. Rows are kept sorted and unique.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::vector<RoleId> columns);
  Relation(std::vector<RoleId> columns, std::vector<Row> rows);

  const std::vector<RoleId>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::optional<std::size_t> column_index(const RoleId& role) const;
  bool contains(const Row& row) const;
  bool insert(Row row);

  // Same tuples with columns permuted into `order`; `order` must be a
  // permutation of the current columns.
  Relation reordered(const std::vector<RoleId>& order) const;

  friend auto operator<=>(const Relation&, const Relation&) = default;
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<RoleId> columns_;
  std::vector<Row> rows_;
};

std::string to_string(const Relation& r);

}  // namespace ormt

#endif  // ORMT_RELATION_HPP_
