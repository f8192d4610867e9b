// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/rule.hpp"

#include <functional>

#include "ormt/error.hpp"

namespace ormt {
namespace {

std::shared_ptr<RuleExpr::Node> node(RuleExpr::Op op) {
  auto n = std::make_shared<RuleExpr::Node>();
  n->op = op;
  return n;
}

void walk(const RuleExpr& e, const std::function<void(const RuleExpr&)>& f) {
  f(e);
  switch (e.op()) {
    case RuleExpr::Op::Proj:
    case RuleExpr::Op::Sel:
      walk(e.body(), f);
      break;
    case RuleExpr::Op::Join:
    case RuleExpr::Op::Union:
      walk(e.left(), f);
      walk(e.right(), f);
      break;
    default:
      break;
  }
}

void term_types(const Term& t, std::set<TypeId>& out) {
  if (const auto* v = std::get_if<ValCall>(&t)) out.insert(v->type);
}

void term_roles(const Term& t, std::set<RoleId>& out) {
  if (const auto* r = std::get_if<RoleRef>(&t)) out.insert(r->name);
  if (const auto* v = std::get_if<ValCall>(&t)) {
    if (const auto* r = std::get_if<RoleRef>(&v->arg)) out.insert(r->name);
  }
}

}  // namespace

RuleExpr::RuleExpr() : node_(node(Op::Literal)) {}

RuleExpr RuleExpr::ref(TypeId target) {
  auto n = node(Op::Ref);
  n->target = std::move(target);
  return RuleExpr(n);
}

RuleExpr RuleExpr::proj(std::vector<Binding> bindings, RuleExpr body) {
  auto n = node(Op::Proj);
  n->bindings = std::move(bindings);
  n->kids.push_back(std::move(body));
  return RuleExpr(n);
}

RuleExpr RuleExpr::sel(std::vector<Condition> conditions, RuleExpr body) {
  auto n = node(Op::Sel);
  n->conditions = std::move(conditions);
  n->kids.push_back(std::move(body));
  return RuleExpr(n);
}

RuleExpr RuleExpr::join(RuleExpr left, RuleExpr right) {
  auto n = node(Op::Join);
  n->kids.push_back(std::move(left));
  n->kids.push_back(std::move(right));
  return RuleExpr(n);
}

RuleExpr RuleExpr::unite(RuleExpr left, RuleExpr right) {
  auto n = node(Op::Union);
  n->kids.push_back(std::move(left));
  n->kids.push_back(std::move(right));
  return RuleExpr(n);
}

RuleExpr RuleExpr::literal(std::vector<TupleTerms> tuples) {
  auto n = node(Op::Literal);
  n->tuples = std::move(tuples);
  return RuleExpr(n);
}

RuleExpr::Op RuleExpr::op() const { return node_->op; }
const TypeId& RuleExpr::target() const { return node_->target; }
const std::vector<Binding>& RuleExpr::bindings() const { return node_->bindings; }
const std::vector<Condition>& RuleExpr::conditions() const { return node_->conditions; }
const std::vector<TupleTerms>& RuleExpr::tuples() const { return node_->tuples; }
const RuleExpr& RuleExpr::body() const { return node_->kids.at(0); }
const RuleExpr& RuleExpr::left() const { return node_->kids.at(0); }
const RuleExpr& RuleExpr::right() const { return node_->kids.at(1); }

bool operator==(const RuleExpr& a, const RuleExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.target == y.target && x.bindings == y.bindings &&
         x.conditions == y.conditions && x.tuples == y.tuples && x.kids == y.kids;
}

std::set<TypeId> depends(const RuleExpr& e) {
  std::set<TypeId> out;
  walk(e, [&](const RuleExpr& x) {
    switch (x.op()) {
      case RuleExpr::Op::Ref:
        out.insert(x.target());
        break;
      case RuleExpr::Op::Proj:
        for (const auto& b : x.bindings()) term_types(b.value, out);
        break;
      case RuleExpr::Op::Literal:
        for (const auto& t : x.tuples()) {
          for (const auto& [role, term] : t) term_types(term, out);
        }
        break;
      default:
        break;
    }
  });
  return out;
}

std::set<TypeId> depends(const Rule& r) { return depends(r.body); }

std::set<TypeId> relation_refs(const RuleExpr& e) {
  std::set<TypeId> out;
  walk(e, [&](const RuleExpr& x) {
    if (x.op() == RuleExpr::Op::Ref) out.insert(x.target());
  });
  return out;
}

std::set<RoleId> mentioned_roles(const RuleExpr& e) {
  std::set<RoleId> out;
  walk(e, [&](const RuleExpr& x) {
    switch (x.op()) {
      case RuleExpr::Op::Proj:
        for (const auto& b : x.bindings()) {
          out.insert(b.out);
          term_roles(b.value, out);
        }
        break;
      case RuleExpr::Op::Sel:
        for (const auto& c : x.conditions()) {
          out.insert(c.lhs);
          if (const auto* r = std::get_if<RoleRef>(&c.rhs)) out.insert(r->name);
        }
        break;
      case RuleExpr::Op::Literal:
        for (const auto& t : x.tuples()) {
          for (const auto& [role, term] : t) {
            out.insert(role);
            term_roles(term, out);
          }
        }
        break;
      default:
        break;
    }
  });
  return out;
}

bool is_constant(const RuleExpr& e) { return relation_refs(e).empty(); }

RuleExpr replace_refs(const RuleExpr& e, const std::map<TypeId, RuleExpr>& bodies) {
  switch (e.op()) {
    case RuleExpr::Op::Ref: {
      auto it = bodies.find(e.target());
      return it == bodies.end() ? e : it->second;
    }
    case RuleExpr::Op::Proj:
      return RuleExpr::proj(e.bindings(), replace_refs(e.body(), bodies));
    case RuleExpr::Op::Sel:
      return RuleExpr::sel(e.conditions(), replace_refs(e.body(), bodies));
    case RuleExpr::Op::Join:
      return RuleExpr::join(replace_refs(e.left(), bodies),
                            replace_refs(e.right(), bodies));
    case RuleExpr::Op::Union:
      return RuleExpr::unite(replace_refs(e.left(), bodies),
                             replace_refs(e.right(), bodies));
    case RuleExpr::Op::Literal:
      return e;
  }
  return e;
}

std::vector<Rule> substitute(const std::vector<Rule>& rules,
                             const std::vector<Rule>& removed) {
  std::map<TypeId, RuleExpr> raw;
  for (const auto& r : removed) raw[r.defines] = r.body;

  // Fully expand each removed body first; a removed type reaching itself
  // through other removed types has no finite expansion.
  std::map<TypeId, RuleExpr> expanded;
  std::map<TypeId, int> state;
  std::function<const RuleExpr&(const TypeId&, std::vector<TypeId>&)> expand =
      [&](const TypeId& t, std::vector<TypeId>& path) -> const RuleExpr& {
    auto done = expanded.find(t);
    if (done != expanded.end()) return done->second;
    if (state[t] == 1) {
      std::string cycle;
      bool on = false;
      for (const auto& p : path) {
        if (p == t) on = true;
        if (on) cycle += p + " -> ";
      }
      throw Error(ErrorKind::Cycle, "substitution cycle " + cycle + t);
    }
    state[t] = 1;
    path.push_back(t);
    std::map<TypeId, RuleExpr> inner;
    for (const auto& d : relation_refs(raw.at(t))) {
      if (raw.count(d)) inner.emplace(d, expand(d, path));
    }
    path.pop_back();
    state[t] = 2;
    return expanded.emplace(t, replace_refs(raw.at(t), inner)).first->second;
  };
  for (const auto& r : removed) {
    std::vector<TypeId> path;
    expand(r.defines, path);
  }

  std::vector<Rule> out;
  out.reserve(rules.size());
  for (const auto& r : rules) {
    out.push_back(Rule{r.defines, replace_refs(r.body, expanded), r.kind});
  }
  return out;
}

}  // namespace ormt
