// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/rule.hpp"

namespace ormt {
namespace {

using text::Tok;
using text::TokenStream;

bool is_keyword(const text::Token& t) {
  if (t.kind != Tok::Ident) return false;
  return t.text == "PROJ" || t.text == "SEL" || t.text == "JOIN" ||
         t.text == "UNION" || t.text == "Val";
}

Literal parse_literal(TokenStream& ts) {
  const text::Token& t = ts.peek();
  if (t.kind == Tok::Int) return ts.next().value;
  if (t.kind == Tok::String) return ts.next().text;
  ts.fail("expected a value literal");
}

bool at_literal(const TokenStream& ts) {
  auto k = ts.peek().kind;
  return k == Tok::Int || k == Tok::String;
}

std::variant<RoleRef, Literal> parse_role_or_literal(TokenStream& ts) {
  if (at_literal(ts)) return parse_literal(ts);
  if (is_keyword(ts.peek())) ts.fail("expected a role or literal");
  return RoleRef{ts.expect_ident("role name")};
}

Term parse_term(TokenStream& ts) {
  if (ts.is_word("Val") && ts.is_punct("(", 1)) {
    ts.next();
    ts.next();
    ValCall v;
    v.type = ts.expect_ident("object type name");
    ts.expect_punct(",");
    v.arg = parse_role_or_literal(ts);
    ts.expect_punct(")");
    return v;
  }
  auto rl = parse_role_or_literal(ts);
  if (auto* r = std::get_if<RoleRef>(&rl)) return *r;
  return std::get<Literal>(rl);
}

RuleExpr parse_union(TokenStream& ts);
RuleExpr parse_join(TokenStream& ts);

RuleExpr parse_primary(TokenStream& ts) {
  if (ts.accept_punct("(")) {
    RuleExpr e = parse_union(ts);
    ts.expect_punct(")");
    return e;
  }
  if (ts.accept_punct("{")) {
    std::vector<TupleTerms> tuples;
    if (ts.accept_punct("}")) return RuleExpr::literal({});
    do {
      ts.expect_punct("<");
      TupleTerms tuple;
      do {
        RoleId role = ts.expect_ident("role name");
        ts.expect_punct("=");
        tuple.emplace_back(std::move(role), parse_term(ts));
      } while (ts.accept_punct(","));
      ts.expect_punct(">");
      tuples.push_back(std::move(tuple));
    } while (ts.accept_punct(","));
    ts.expect_punct("}");
    return RuleExpr::literal(std::move(tuples));
  }
  if (ts.peek().kind != Tok::Ident || is_keyword(ts.peek())) {
    ts.fail("expected an expression");
  }
  return RuleExpr::ref(ts.next().text);
}

// PROJ and SEL scope over the join chain that follows them and stop at
// UNION, so "PROJ[..] SEL[..] g JOIN h UNION k" is (PROJ SEL (g JOIN h)) UNION k.
RuleExpr parse_prefix(TokenStream& ts) {
  if (ts.accept_word("PROJ")) {
    ts.expect_punct("[");
    std::vector<Binding> bindings;
    do {
      Binding b;
      b.out = ts.expect_ident("output role");
      ts.expect_punct("=");
      b.value = parse_term(ts);
      bindings.push_back(std::move(b));
    } while (ts.accept_punct(","));
    ts.expect_punct("]");
    return RuleExpr::proj(std::move(bindings), parse_join(ts));
  }
  if (ts.accept_word("SEL")) {
    ts.expect_punct("[");
    std::vector<Condition> conditions;
    do {
      Condition c;
      c.lhs = ts.expect_ident("role name");
      ts.expect_punct("=");
      c.rhs = parse_role_or_literal(ts);
      conditions.push_back(std::move(c));
    } while (ts.accept_punct(","));
    ts.expect_punct("]");
    return RuleExpr::sel(std::move(conditions), parse_join(ts));
  }
  return parse_primary(ts);
}

RuleExpr parse_join(TokenStream& ts) {
  RuleExpr e = parse_prefix(ts);
  while (ts.accept_word("JOIN")) e = RuleExpr::join(e, parse_prefix(ts));
  return e;
}

RuleExpr parse_union(TokenStream& ts) {
  RuleExpr e = parse_join(ts);
  while (ts.accept_word("UNION")) e = RuleExpr::unite(e, parse_join(ts));
  return e;
}

std::string print(const RuleExpr& e);

std::string wrap(const RuleExpr& e) { return "(" + print(e) + ")"; }

std::string print_prefix_body(const RuleExpr& body) {
  return body.op() == RuleExpr::Op::Union ? wrap(body) : print(body);
}

std::string print(const RuleExpr& e) {
  using Op = RuleExpr::Op;
  switch (e.op()) {
    case Op::Ref:
      return e.target();
    case Op::Proj: {
      std::string out = "PROJ[";
      for (std::size_t i = 0; i < e.bindings().size(); ++i) {
        if (i) out += ", ";
        out += e.bindings()[i].out + " = " + to_string(e.bindings()[i].value);
      }
      return out + "] " + print_prefix_body(e.body());
    }
    case Op::Sel: {
      std::string out = "SEL[";
      for (std::size_t i = 0; i < e.conditions().size(); ++i) {
        const auto& c = e.conditions()[i];
        if (i) out += ", ";
        out += c.lhs + " = ";
        if (const auto* r = std::get_if<RoleRef>(&c.rhs)) {
          out += r->name;
        } else {
          out += literal_text(std::get<Literal>(c.rhs));
        }
      }
      return out + "] " + print_prefix_body(e.body());
    }
    case Op::Join: {
      const RuleExpr& l = e.left();
      const RuleExpr& r = e.right();
      bool wrap_left = l.op() == Op::Union || l.op() == Op::Proj || l.op() == Op::Sel;
      bool wrap_right = r.op() != Op::Ref && r.op() != Op::Literal;
      return (wrap_left ? wrap(l) : print(l)) + " JOIN " +
             (wrap_right ? wrap(r) : print(r));
    }
    case Op::Union: {
      const RuleExpr& r = e.right();
      return print(e.left()) + " UNION " +
             (r.op() == Op::Union ? wrap(r) : print(r));
    }
    case Op::Literal: {
      std::string out = "{";
      for (std::size_t i = 0; i < e.tuples().size(); ++i) {
        if (i) out += ", ";
        out += "<";
        const auto& t = e.tuples()[i];
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (j) out += ", ";
          out += t[j].first + " = " + to_string(t[j].second);
        }
        out += ">";
      }
      return out + "}";
    }
  }
  return "";
}

}  // namespace

std::string to_string(const Term& t) {
  if (const auto* r = std::get_if<RoleRef>(&t)) return r->name;
  if (const auto* l = std::get_if<Literal>(&t)) return literal_text(*l);
  const auto& v = std::get<ValCall>(t);
  std::string arg;
  if (const auto* r = std::get_if<RoleRef>(&v.arg)) {
    arg = r->name;
  } else {
    arg = literal_text(std::get<Literal>(v.arg));
  }
  return "Val(" + v.type + "," + arg + ")";
}

std::string to_string(const RuleExpr& e) { return print(e); }

RuleExpr parse_rule_expr(text::TokenStream& ts) { return parse_union(ts); }

RuleExpr parse_rule_expr(std::string_view source) {
  TokenStream ts(text::tokenize(source));
  RuleExpr e = parse_union(ts);
  ts.expect_end();
  return e;
}

}  // namespace ormt
