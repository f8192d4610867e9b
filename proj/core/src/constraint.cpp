// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/constraint.hpp"

namespace ormt {
namespace {

Constraint make(std::string id, ConstraintKind kind) {
  Constraint c;
  c.id = std::move(id);
  c.kind = kind;
  return c;
}

std::string role_set(const std::vector<RoleId>& rs) {
  std::string out = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ", ";
    out += rs[i];
  }
  return out + "}";
}

std::vector<RoleId> parse_role_set(text::TokenStream& ts) {
  std::vector<RoleId> out;
  ts.expect_punct("{");
  do {
    out.push_back(ts.expect_ident("role name"));
  } while (ts.accept_punct(","));
  ts.expect_punct("}");
  return out;
}

Literal parse_literal(text::TokenStream& ts) {
  const text::Token& t = ts.peek();
  if (t.kind == text::Tok::Int) return ts.next().value;
  if (t.kind == text::Tok::String) return ts.next().text;
  ts.fail("expected a value literal");
}

std::vector<std::pair<RoleId, RoleId>> parse_pairs(text::TokenStream& ts,
                                                   std::string_view sep) {
  std::vector<std::pair<RoleId, RoleId>> out;
  do {
    ts.expect_punct("(");
    RoleId a = ts.expect_ident("role name");
    ts.expect_punct(sep);
    RoleId b = ts.expect_ident("role name");
    ts.expect_punct(")");
    out.emplace_back(std::move(a), std::move(b));
  } while (ts.accept_punct(","));
  return out;
}

}  // namespace

Constraint Constraint::unique(std::string id, std::vector<RoleId> roles) {
  auto c = make(std::move(id), ConstraintKind::Unique);
  c.roles = std::move(roles);
  return c;
}

Constraint Constraint::mandatory(std::string id, std::vector<RoleId> roles) {
  auto c = make(std::move(id), ConstraintKind::Mandatory);
  c.roles = std::move(roles);
  return c;
}

Constraint Constraint::each_is_in(std::string id, TypeId type, std::vector<Literal> values) {
  auto c = make(std::move(id), ConstraintKind::EachIsIn);
  c.type = std::move(type);
  c.values = std::move(values);
  return c;
}

Constraint Constraint::frequency(std::string id, RoleId role, std::int64_t lo, std::int64_t hi) {
  auto c = make(std::move(id), ConstraintKind::Frequency);
  c.roles = {std::move(role)};
  c.lo = lo;
  c.hi = hi;
  return c;
}

Constraint Constraint::exclusion(std::string id, std::vector<RoleId> a, std::vector<RoleId> b) {
  auto c = make(std::move(id), ConstraintKind::Exclusion);
  c.roles = std::move(a);
  c.other = std::move(b);
  return c;
}

Constraint Constraint::subset(std::string id, std::vector<std::pair<RoleId, RoleId>> pairs) {
  auto c = make(std::move(id), ConstraintKind::Subset);
  c.pairs = std::move(pairs);
  return c;
}

Constraint Constraint::equality(std::string id, std::vector<std::pair<RoleId, RoleId>> pairs) {
  auto c = make(std::move(id), ConstraintKind::Equality);
  c.pairs = std::move(pairs);
  return c;
}

Constraint Constraint::external_unique(std::string id, std::vector<RoleId> roles) {
  auto c = make(std::move(id), ConstraintKind::ExternalUnique);
  c.roles = std::move(roles);
  return c;
}

Constraint Constraint::card(std::string id, TypeId type, std::int64_t n) {
  auto c = make(std::move(id), ConstraintKind::CardEq);
  c.type = std::move(type);
  c.lo = n;
  return c;
}

std::set<RoleId> referenced_roles(const Constraint& c) {
  std::set<RoleId> out(c.roles.begin(), c.roles.end());
  out.insert(c.other.begin(), c.other.end());
  for (const auto& [a, b] : c.pairs) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

std::set<TypeId> referenced_types(const Constraint& c, const Universe& u) {
  std::set<TypeId> out;
  if (!c.type.empty()) out.insert(c.type);
  for (const auto& r : referenced_roles(c)) {
    if (auto rel = u.rel_of(r)) out.insert(*rel);
  }
  return out;
}

Constraint rename_roles(const Constraint& c, const std::map<RoleId, RoleId>& to) {
  auto map = [&](const RoleId& r) {
    auto it = to.find(r);
    return it == to.end() ? r : it->second;
  };
  Constraint out = c;
  for (auto& r : out.roles) r = map(r);
  for (auto& r : out.other) r = map(r);
  for (auto& [a, b] : out.pairs) {
    a = map(a);
    b = map(b);
  }
  return out;
}

std::string constraint_text(const Constraint& c) {
  switch (c.kind) {
    case ConstraintKind::Unique:
      return "UNIQUE " + role_set(c.roles);
    case ConstraintKind::Mandatory:
      return "MANDATORY " + role_set(c.roles);
    case ConstraintKind::ExternalUnique:
      return "EXTUNIQUE " + role_set(c.roles);
    case ConstraintKind::Exclusion:
      return "EXCLUSION " + role_set(c.roles) + " " + role_set(c.other);
    case ConstraintKind::EachIsIn: {
      std::string out = "EACH " + c.type + " IS IN ";
      for (std::size_t i = 0; i < c.values.size(); ++i) {
        if (i) out += ", ";
        out += literal_text(c.values[i]);
      }
      return out;
    }
    case ConstraintKind::Frequency:
      return "FREQUENCY " + c.roles.at(0) + " " + std::to_string(c.lo) + ".." +
             std::to_string(c.hi);
    case ConstraintKind::Subset:
    case ConstraintKind::Equality: {
      bool subset = c.kind == ConstraintKind::Subset;
      std::string out = subset ? "SUBSET " : "EQUALITY ";
      for (std::size_t i = 0; i < c.pairs.size(); ++i) {
        if (i) out += ", ";
        out += "(" + c.pairs[i].first + (subset ? " -> " : " = ") +
               c.pairs[i].second + ")";
      }
      return out;
    }
    case ConstraintKind::CardEq:
      return "CARD " + c.type + " = " + std::to_string(c.lo);
  }
  return "";
}

Constraint parse_constraint(text::TokenStream& ts, std::string id) {
  if (ts.accept_word("UNIQUE")) return Constraint::unique(id, parse_role_set(ts));
  if (ts.accept_word("MANDATORY")) return Constraint::mandatory(id, parse_role_set(ts));
  if (ts.accept_word("EXTUNIQUE")) {
    return Constraint::external_unique(id, parse_role_set(ts));
  }
  if (ts.accept_word("EXCLUSION")) {
    auto a = parse_role_set(ts);
    auto b = parse_role_set(ts);
    return Constraint::exclusion(id, std::move(a), std::move(b));
  }
  if (ts.accept_word("EACH")) {
    TypeId t = ts.expect_ident("type name");
    ts.expect_word("IS");
    ts.expect_word("IN");
    std::vector<Literal> values;
    do {
      values.push_back(parse_literal(ts));
    } while (ts.accept_punct(","));
    return Constraint::each_is_in(id, t, std::move(values));
  }
  if (ts.accept_word("FREQUENCY")) {
    RoleId r = ts.expect_ident("role name");
    if (ts.peek().kind != text::Tok::Int) ts.fail("expected frequency minimum");
    std::int64_t lo = ts.next().value;
    ts.expect_punct("..");
    if (ts.peek().kind != text::Tok::Int) ts.fail("expected frequency maximum");
    std::int64_t hi = ts.next().value;
    if (lo < 0 || hi < lo) ts.fail("frequency range must satisfy 0 <= min <= max");
    return Constraint::frequency(id, r, lo, hi);
  }
  if (ts.accept_word("SUBSET")) return Constraint::subset(id, parse_pairs(ts, "->"));
  if (ts.accept_word("EQUALITY")) return Constraint::equality(id, parse_pairs(ts, "="));
  if (ts.accept_word("CARD")) {
    TypeId t = ts.expect_ident("type name");
    ts.expect_punct("=");
    if (ts.peek().kind != text::Tok::Int) ts.fail("expected cardinality");
    return Constraint::card(id, t, ts.next().value);
  }
  ts.fail("expected a constraint");
}

Constraint parse_constraint(std::string_view body, std::string id) {
  text::TokenStream ts(text::tokenize(body));
  Constraint c = parse_constraint(ts, std::move(id));
  ts.expect_end();
  return c;
}

}  // namespace ormt
