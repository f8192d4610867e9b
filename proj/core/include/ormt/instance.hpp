// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_INSTANCE_HPP_
#define ORMT_INSTANCE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ormt {

using TypeId = std::string;
using RoleId = std::string;

// A denotable value: integers print bare, strings print single-quoted.
using Literal = std::variant<std::int64_t, std::string>;

std::string literal_text(const Literal& lit);

struct Instance {
  enum class Kind : std::uint8_t { Value, Abstract };

  Kind kind = Kind::Value;
  TypeId type;  // owning object type; empty for values
  Literal tag;

  static Instance value(Literal lit);
  static Instance abstract(TypeId type, Literal tag);

  bool is_value() const { return kind == Kind::Value; }

  friend auto operator<=>(const Instance&, const Instance&) = default;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Text form: literals as written, abstract instances as Val(T,lit).
std::string to_string(const Instance& inst);

using Row = std::vector<Instance>;

}  // namespace ormt

#endif  // ORMT_INSTANCE_HPP_
