// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_RULE_HPP_
#define ORMT_RULE_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ormt/instance.hpp"
#include "ormt/lexer.hpp"

namespace ormt {

struct RoleRef {
  RoleId name;
  friend bool operator==(const RoleRef&, const RoleRef&) = default;
};

// Val(type, arg): the abstract instance of `type` encoding a value.
struct ValCall {
  TypeId type;
  std::variant<RoleRef, Literal> arg;
  friend bool operator==(const ValCall&, const ValCall&) = default;
};

using Term = std::variant<RoleRef, Literal, ValCall>;

struct Binding {
  RoleId out;
  Term value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

struct Condition {
  RoleId lhs;
  std::variant<RoleRef, Literal> rhs;
  friend bool operator==(const Condition&, const Condition&) = default;
};

using TupleTerms = std::vector<std::pair<RoleId, Term>>;

// Immutable expression tree; copies share structure.
class RuleExpr {
 public:
  enum class Op { Ref, Proj, Sel, Join, Union, Literal };

  RuleExpr();  // the empty literal set

  static RuleExpr ref(TypeId target);
  static RuleExpr proj(std::vector<Binding> bindings, RuleExpr body);
  static RuleExpr sel(std::vector<Condition> conditions, RuleExpr body);
  static RuleExpr join(RuleExpr left, RuleExpr right);
  static RuleExpr unite(RuleExpr left, RuleExpr right);
  static RuleExpr literal(std::vector<TupleTerms> tuples);

  Op op() const;
  const TypeId& target() const;
  const std::vector<Binding>& bindings() const;
  const std::vector<Condition>& conditions() const;
  const std::vector<TupleTerms>& tuples() const;
  const RuleExpr& body() const;
  const RuleExpr& left() const;
  const RuleExpr& right() const;

  friend bool operator==(const RuleExpr& a, const RuleExpr& b);

  // Tree node; exposed so the implementation can build trees directly.
  struct Node;

 private:
  explicit RuleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class RuleKind { Derivation, Update };

struct Rule {
  TypeId defines;
  RuleExpr body;
  RuleKind kind = RuleKind::Derivation;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Relation references plus the object types named in Val calls.
std::set<TypeId> depends(const RuleExpr& e);
std::set<TypeId> depends(const Rule& r);
// Only the relation references.
std::set<TypeId> relation_refs(const RuleExpr& e);
// Roles mentioned anywhere in the expression (inputs and outputs).
std::set<RoleId> mentioned_roles(const RuleExpr& e);
// A rule with no relation references yields the same content on every
// population; such rules fix reference data rather than carry updates.
bool is_constant(const RuleExpr& e);

RuleExpr replace_refs(const RuleExpr& e, const std::map<TypeId, RuleExpr>& bodies);

// Inlines the bodies of `removed` into `rules` until no removed type is
// referenced. Throws a cycle error if removed rules depend on each other
// cyclically.
std::vector<Rule> substitute(const std::vector<Rule>& rules,
                             const std::vector<Rule>& removed);

std::string to_string(const Term& t);
std::string to_string(const RuleExpr& e);

RuleExpr parse_rule_expr(text::TokenStream& ts);
RuleExpr parse_rule_expr(std::string_view source);

struct RuleExpr::Node {
  Op op = Op::Literal;
  TypeId target;
  std::vector<Binding> bindings;
  std::vector<Condition> conditions;
  std::vector<TupleTerms> tuples;
  std::vector<RuleExpr> kids;
};

}  // namespace ormt

#endif  // ORMT_RULE_HPP_
