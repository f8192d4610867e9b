// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/instance.hpp"

namespace ormt {

std::string literal_text(const Literal& lit) {
  if (const auto* i = std::get_if<std::int64_t>(&lit)) return std::to_string(*i);
  std::string s = "'";
  for (char c : std::get<std::string>(lit)) {
    s += c;
    if (c == '\'') s += '\'';
  }
  return s + "'";
}

Instance Instance::value(Literal lit) {
  Instance i;
  i.kind = Kind::Value;
  i.tag = std::move(lit);
  return i;
}

Instance Instance::abstract(TypeId type, Literal tag) {
  Instance i;
  i.kind = Kind::Abstract;
  i.type = std::move(type);
  i.tag = std::move(tag);
  return i;
}

std::string to_string(const Instance& inst) {
  if (inst.is_value()) return literal_text(inst.tag);
  return "Val(" + inst.type + "," + literal_text(inst.tag) + ")";
}

}  // namespace ormt
