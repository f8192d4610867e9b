// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/eval.hpp"

#include <algorithm>

#include "ormt/error.hpp"

namespace ormt {
namespace {

std::size_t column(const Relation& r, const RoleId& role) {
  auto idx = r.column_index(role);
  if (!idx) throw Error(ErrorKind::UnknownRole, "'" + role + "' is not in scope");
  return *idx;
}

Instance eval_val(const Universe& u, const ValCall& v, const Relation* in, const Row* row) {
  if (const auto* lit = std::get_if<Literal>(&v.arg)) return val(u, v.type, *lit);
  const auto& role = std::get<RoleRef>(v.arg).name;
  if (!in) throw Error(ErrorKind::UnknownRole, "'" + role + "' has no input in a literal");
  const Instance& x = (*row)[column(*in, role)];
  if (!x.is_value()) {
    throw Error(ErrorKind::TypeError, "Val(" + v.type + ", " + role +
                                          ") applied to abstract instance " +
                                          to_string(x));
  }
  return val(u, v.type, x.tag);
}

Relation eval(const RuleExpr& e, const Population& pop, const Universe& u) {
  using Op = RuleExpr::Op;
  switch (e.op()) {
    case Op::Ref: {
      auto it = pop.relations.find(e.target());
      if (it == pop.relations.end()) {
        throw Error(ErrorKind::Evaluation,
                    "population assigns nothing to '" + e.target() + "'");
      }
      return it->second;
    }
    case Op::Proj: {
      Relation in = eval(e.body(), pop, u);
      std::vector<RoleId> cols;
      for (const auto& b : e.bindings()) {
        if (std::find(cols.begin(), cols.end(), b.out) != cols.end()) {
          throw Error(ErrorKind::SchemaMismatch, "output role '" + b.out + "' bound twice");
        }
        cols.push_back(b.out);
      }
      // Resolve column positions once.
      std::vector<std::ptrdiff_t> src;
      for (const auto& b : e.bindings()) {
        if (const auto* r = std::get_if<RoleRef>(&b.value)) {
          src.push_back(static_cast<std::ptrdiff_t>(column(in, r->name)));
        } else {
          src.push_back(-1);
        }
      }
      std::vector<Row> rows;
      rows.reserve(in.size());
      for (const auto& row : in.rows()) {
        Row out;
        out.reserve(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
          const Term& t = e.bindings()[i].value;
          if (src[i] >= 0) {
            out.push_back(row[static_cast<std::size_t>(src[i])]);
          } else if (const auto* lit = std::get_if<Literal>(&t)) {
            out.push_back(Instance::value(*lit));
          } else {
            out.push_back(eval_val(u, std::get<ValCall>(t), &in, &row));
          }
        }
        rows.push_back(std::move(out));
      }
      return Relation(std::move(cols), std::move(rows));
    }
    case Op::Sel: {
      Relation in = eval(e.body(), pop, u);
      struct Check {
        std::size_t lhs;
        std::ptrdiff_t rhs;
        Instance constant;
      };
      std::vector<Check> checks;
      for (const auto& c : e.conditions()) {
        Check k{column(in, c.lhs), -1, {}};
        if (const auto* r = std::get_if<RoleRef>(&c.rhs)) {
          k.rhs = static_cast<std::ptrdiff_t>(column(in, r->name));
        } else {
          k.constant = Instance::value(std::get<Literal>(c.rhs));
        }
        checks.push_back(std::move(k));
      }
      std::vector<Row> rows;
      for (const auto& row : in.rows()) {
        bool keep = std::all_of(checks.begin(), checks.end(), [&](const Check& k) {
          const Instance& rhs =
              k.rhs >= 0 ? row[static_cast<std::size_t>(k.rhs)] : k.constant;
          return row[k.lhs] == rhs;
        });
        if (keep) rows.push_back(row);
      }
      return Relation(in.columns(), std::move(rows));
    }
    case Op::Join: {
      Relation a = eval(e.left(), pop, u);
      Relation b = eval(e.right(), pop, u);
      std::vector<RoleId> cols = a.columns();
      for (const auto& c : b.columns()) {
        if (a.column_index(c)) {
          throw Error(ErrorKind::SchemaMismatch, "JOIN operands share role '" + c + "'");
        }
        cols.push_back(c);
      }
      std::vector<Row> rows;
      rows.reserve(a.size() * b.size());
      for (const auto& x : a.rows()) {
        for (const auto& y : b.rows()) {
          Row r = x;
          r.insert(r.end(), y.begin(), y.end());
          rows.push_back(std::move(r));
        }
      }
      return Relation(std::move(cols), std::move(rows));
    }
    case Op::Union: {
      Relation a = eval(e.left(), pop, u);
      Relation b = eval(e.right(), pop, u);
      if (a.columns().empty() && a.empty()) return b;
      if (b.columns().empty() && b.empty()) return a;
      std::vector<RoleId> ca = a.columns(), cb = b.columns();
      std::sort(ca.begin(), ca.end());
      std::sort(cb.begin(), cb.end());
      if (ca != cb) throw Error(ErrorKind::SchemaMismatch, "UNION operands have different roles");
      Relation aligned = b.reordered(a.columns());
      std::vector<Row> rows = a.rows();
      rows.insert(rows.end(), aligned.rows().begin(), aligned.rows().end());
      return Relation(a.columns(), std::move(rows));
    }
    case Op::Literal: {
      if (e.tuples().empty()) return Relation();
      std::vector<RoleId> cols;
      for (const auto& [role, term] : e.tuples().front()) cols.push_back(role);
      std::vector<Row> rows;
      for (const auto& tuple : e.tuples()) {
        if (tuple.size() != cols.size()) {
          throw Error(ErrorKind::SchemaMismatch, "literal tuples bind different roles");
        }
        Row row(cols.size());
        std::vector<bool> seen(cols.size(), false);
        for (const auto& [role, term] : tuple) {
          auto it = std::find(cols.begin(), cols.end(), role);
          if (it == cols.end()) {
            throw Error(ErrorKind::SchemaMismatch, "literal tuples bind different roles");
          }
          auto i = static_cast<std::size_t>(it - cols.begin());
          if (seen[i]) throw Error(ErrorKind::SchemaMismatch, "role bound twice in a literal tuple");
          seen[i] = true;
          if (const auto* lit = std::get_if<Literal>(&term)) {
            row[i] = Instance::value(*lit);
          } else if (const auto* v = std::get_if<ValCall>(&term)) {
            row[i] = eval_val(u, *v, nullptr, nullptr);
          } else {
            throw Error(ErrorKind::UnknownRole,
                        "'" + std::get<RoleRef>(term).name + "' has no input in a literal");
          }
        }
        rows.push_back(std::move(row));
      }
      return Relation(std::move(cols), std::move(rows));
    }
  }
  return Relation();
}

}  // namespace

Instance val(const Universe& u, const TypeId& t, const Literal& v) {
  if (u.is_value(t)) {
    throw Error(ErrorKind::TypeError, "Val over value type '" + t + "'");
  }
  if (!u.is_object(t)) {
    throw Error(ErrorKind::TypeError, "Val over non-object type '" + t + "'");
  }
  return Instance::abstract(t, v);
}

Relation eval_rule(const RuleExpr& e, const Population& pop, const Universe& u) {
  return eval(e, pop, u);
}

Relation eval_rule(const Rule& r, const Population& pop, const Universe& u) {
  Relation out = eval(r.body, pop, u);
  if (!u.is_relationship(r.defines)) return out;
  const auto& roles = u.role_list(r.defines);
  if (out.columns().empty() && out.empty()) return Relation(roles);
  std::vector<RoleId> have = out.columns(), want = roles;
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (have != want) {
    throw Error(ErrorKind::SchemaMismatch,
                "rule for '" + r.defines + "' yields roles that differ from its declaration");
  }
  return out.reordered(roles);
}

}  // namespace ormt
