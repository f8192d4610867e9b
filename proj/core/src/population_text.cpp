// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <map>

#include "ormt/error.hpp"
#include "ormt/lexer.hpp"
#include "ormt/population.hpp"

namespace ormt {
namespace {

using text::Tok;
using text::TokenStream;

Literal parse_literal(TokenStream& ts) {
  const text::Token& t = ts.peek();
  if (t.kind == Tok::Int) return ts.next().value;
  if (t.kind == Tok::String) return ts.next().text;
  ts.fail("expected a value literal");
}

Instance parse_instance(TokenStream& ts, const Universe& u) {
  if (ts.is_word("Val") && ts.is_punct("(", 1)) {
    ts.next();
    ts.next();
    auto type = ts.expect_ident("object type");
    if (!u.is_entity(type)) {
      throw Error(ErrorKind::TypeError, "Val needs a non-value object type, got " + type);
    }
    ts.expect_punct(",");
    auto tag = parse_literal(ts);
    ts.expect_punct(")");
    return Instance::abstract(type, tag);
  }
  return Instance::value(parse_literal(ts));
}

}  // namespace

std::string population_text(const Population& p, const std::string& schema_name) {
  std::string out = "POPULATION " + schema_name + " ;\n";
  auto instances = [](const auto& items, auto&& show) {
    std::string s = "{";
    bool first = true;
    for (const auto& item : items) {
      s += (first ? " " : ", ") + show(item);
      first = false;
    }
    return s + (first ? "}" : " }");
  };
  for (const auto& [t, xs] : p.objects) {
    out += "  " + t + " = " +
           instances(xs, [](const Instance& i) { return to_string(i); }) + " ;\n";
  }
  for (const auto& [t, r] : p.relations) {
    out += "  " + t + " = " + instances(r.rows(), [&](const Row& row) {
             std::string s = "<";
             for (std::size_t i = 0; i < row.size(); ++i) {
               s += (i ? ", " : "") + r.columns()[i] + "=" + to_string(row[i]);
             }
             return s + ">";
           }) + " ;\n";
  }
  return out + "END\n";
}

Population parse_population(std::string_view source, const Universe& u,
                            std::string* schema_name) {
  TokenStream ts(text::tokenize(source));
  ts.expect_word("POPULATION");
  auto name = ts.expect_ident("schema name");
  if (schema_name) *schema_name = name;
  Population p;
  while (true) {
    while (ts.accept_punct(";")) {
    }
    if (ts.accept_word("END")) break;
    auto type = ts.expect_ident("type name");
    if (!u.declares(type)) throw Error(ErrorKind::Undeclared, "type " + type);
    if (p.covers(type)) throw Error(ErrorKind::DuplicateName, type + " populated twice");
    ts.expect_punct("=");
    ts.expect_punct("{");
    if (u.is_object(type)) {
      auto& set = p.objects[type];
      if (!ts.is_punct("}")) {
        do {
          set.insert(parse_instance(ts, u));
        } while (ts.accept_punct(","));
      }
    } else {
      const auto& roles = u.role_list(type);
      Relation rel(roles);
      if (!ts.is_punct("}")) {
        do {
          ts.expect_punct("<");
          std::map<RoleId, Instance> bound;
          do {
            auto role = ts.expect_ident("role name");
            if (u.rel_of(role) != type) {
              throw Error(ErrorKind::UnknownRole, role + " is not a role of " + type);
            }
            ts.expect_punct("=");
            if (!bound.emplace(role, parse_instance(ts, u)).second) {
              throw Error(ErrorKind::DuplicateName, "role " + role + " bound twice");
            }
          } while (ts.accept_punct(","));
          ts.expect_punct(">");
          if (bound.size() != roles.size()) {
            throw Error(ErrorKind::ArityMismatch, "tuple of " + type + " misses roles");
          }
          Row row;
          for (const auto& r : roles) row.push_back(bound.at(r));
          rel.insert(std::move(row));
        } while (ts.accept_punct(","));
      }
      p.relations.emplace(type, std::move(rel));
    }
    ts.expect_punct("}");
  }
  ts.expect_end();
  return p;
}

}  // namespace ormt
