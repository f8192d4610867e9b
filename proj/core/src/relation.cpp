// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/relation.hpp"

#include <algorithm>

#include "ormt/error.hpp"

namespace ormt {

Relation::Relation(std::vector<RoleId> columns) : columns_(std::move(columns)) {}

Relation::Relation(std::vector<RoleId> columns, std::vector<Row> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != columns_.size()) {
      throw Error(ErrorKind::SchemaMismatch, "row width differs from column count");
    }
  }
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

std::optional<std::size_t> Relation::column_index(const RoleId& role) const {
  auto it = std::find(columns_.begin(), columns_.end(), role);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

bool Relation::contains(const Row& row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

bool Relation::insert(Row row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorKind::SchemaMismatch, "row width differs from column count");
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it != rows_.end() && *it == row) return false;
  rows_.insert(it, std::move(row));
  return true;
}

Relation Relation::reordered(const std::vector<RoleId>& order) const {
  if (order == columns_) return *this;
  if (order.size() != columns_.size()) {
    throw Error(ErrorKind::SchemaMismatch, "column sets differ");
  }
  std::vector<std::size_t> from;
  from.reserve(order.size());
  for (const auto& c : order) {
    auto idx = column_index(c);
    if (!idx) throw Error(ErrorKind::SchemaMismatch, "column " + c + " missing");
    from.push_back(*idx);
  }
  std::vector<Row> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) {
    Row out;
    out.reserve(from.size());
    for (auto i : from) out.push_back(r[i]);
    rows.push_back(std::move(out));
  }
  return Relation(order, std::move(rows));
}

std::string to_string(const Relation& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.rows().size(); ++i) {
    if (i) out += ", ";
    out += "<";
    for (std::size_t j = 0; j < r.columns().size(); ++j) {
      if (j) out += ", ";
      out += r.columns()[j] + "=" + to_string(r.rows()[i][j]);
    }
    out += ">";
  }
  return out + "}";
}

}  // namespace ormt
