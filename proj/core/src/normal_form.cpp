// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/normal_form.hpp"

#include <algorithm>
#include <functional>

#include "ormt/error.hpp"

namespace ormt::nf {

NTerm NTerm::variable(std::uint32_t v) {
  NTerm t;
  t.kind = Kind::Var;
  t.var = v;
  return t;
}

NTerm NTerm::of(Instance c) {
  NTerm t;
  t.kind = Kind::Const;
  t.constant = std::move(c);
  return t;
}

NTerm NTerm::val_of(TypeId type, std::uint32_t v) {
  NTerm t;
  t.kind = Kind::ValOf;
  t.type = std::move(type);
  t.var = v;
  return t;
}

namespace {

using Kind = NTerm::Kind;

// A conjunctive query under construction: variables are unified through a
// union-find forest and may be bound to a constant or a Val term.
struct Partial {
  std::vector<Atom> atoms;
  std::map<RoleId, NTerm> cols;
  std::vector<std::uint32_t> parent;
  std::vector<std::optional<NTerm>> bound;
  bool unsat = false;

  std::uint32_t fresh() {
    auto v = static_cast<std::uint32_t>(parent.size());
    parent.push_back(v);
    bound.emplace_back();
    return v;
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  NTerm resolve(const NTerm& t) {
    switch (t.kind) {
      case Kind::Const:
        return t;
      case Kind::Var: {
        auto r = find(t.var);
        if (bound[r]) return resolve(*bound[r]);
        return NTerm::variable(r);
      }
      case Kind::ValOf: {
        NTerm arg = resolve(NTerm::variable(t.var));
        if (arg.kind == Kind::Const) {
          if (!arg.constant.is_value()) {
            unsat = true;
            return t;
          }
          return NTerm::of(Instance::abstract(t.type, arg.constant.tag));
        }
        if (arg.kind == Kind::ValOf) {
          unsat = true;
          return t;
        }
        return NTerm::val_of(t.type, arg.var);
      }
    }
    return t;
  }

  void unify(const NTerm& a, const NTerm& b) {
    if (unsat) return;
    NTerm x = resolve(a);
    NTerm y = resolve(b);
    if (unsat) return;
    if (x.kind != Kind::Var && y.kind == Kind::Var) std::swap(x, y);
    if (x.kind == Kind::Var) {
      if (y.kind == Kind::Var) {
        if (x.var != y.var) parent[x.var] = y.var;
        return;
      }
      if (y.kind == Kind::ValOf && find(y.var) == x.var) {
        unsat = true;  // x = Val(t, x) mixes a value with an abstract instance
        return;
      }
      bound[x.var] = y;
      return;
    }
    if (x.kind == Kind::Const && y.kind == Kind::Const) {
      if (!(x.constant == y.constant)) unsat = true;
      return;
    }
    if (x.kind == Kind::Const) std::swap(x, y);
    if (x.kind == Kind::ValOf && y.kind == Kind::Const) {
      if (y.constant.is_value() || y.constant.type != x.type) {
        unsat = true;
        return;
      }
      unify(NTerm::variable(x.var), NTerm::of(Instance::value(y.constant.tag)));
      return;
    }
    if (x.type != y.type) {
      unsat = true;
      return;
    }
    unify(NTerm::variable(x.var), NTerm::variable(y.var));
  }
};

Partial merge(const Partial& a, const Partial& b) {
  Partial out = a;
  auto offset = static_cast<std::uint32_t>(a.parent.size());
  auto shift = [&](NTerm t) {
    if (t.kind != Kind::Const) t.var += offset;
    return t;
  };
  for (std::uint32_t p : b.parent) out.parent.push_back(p + offset);
  for (const auto& bd : b.bound) {
    out.bound.push_back(bd ? std::optional<NTerm>(shift(*bd)) : std::nullopt);
  }
  for (const auto& at : b.atoms) {
    Atom s{at.rel, {}};
    for (const auto& t : at.args) s.args.push_back(shift(t));
    out.atoms.push_back(std::move(s));
  }
  for (const auto& [role, t] : b.cols) {
    if (out.cols.count(role)) {
      throw Error(ErrorKind::SchemaMismatch, "JOIN operands share role '" + role + "'");
    }
    out.cols.emplace(role, shift(t));
  }
  out.unsat = a.unsat || b.unsat;
  return out;
}

const NTerm& col(const Partial& p, const RoleId& role) {
  auto it = p.cols.find(role);
  if (it == p.cols.end()) throw Error(ErrorKind::UnknownRole, "'" + role + "' is not in scope");
  return it->second;
}

NTerm term_of(Partial& p, const Term& t) {
  if (const auto* r = std::get_if<RoleRef>(&t)) return col(p, r->name);
  if (const auto* l = std::get_if<Literal>(&t)) return NTerm::of(Instance::value(*l));
  const auto& v = std::get<ValCall>(t);
  if (const auto* l = std::get_if<Literal>(&v.arg)) {
    return NTerm::of(Instance::abstract(v.type, *l));
  }
  NTerm arg = p.resolve(col(p, std::get<RoleRef>(v.arg).name));
  if (arg.kind == Kind::Const) {
    if (!arg.constant.is_value()) {
      p.unsat = true;
      return arg;
    }
    return NTerm::of(Instance::abstract(v.type, arg.constant.tag));
  }
  if (arg.kind == Kind::ValOf) {
    p.unsat = true;
    return arg;
  }
  return NTerm::val_of(v.type, arg.var);
}

std::vector<Partial> build(const RuleExpr& e, const Universe& u) {
  using Op = RuleExpr::Op;
  switch (e.op()) {
    case Op::Ref: {
      Partial p;
      Atom a{e.target(), {}};
      for (const auto& r : u.role_list(e.target())) {
        auto v = p.fresh();
        a.args.push_back(NTerm::variable(v));
        p.cols.emplace(r, NTerm::variable(v));
      }
      p.atoms.push_back(std::move(a));
      return {p};
    }
    case Op::Proj: {
      auto parts = build(e.body(), u);
      for (auto& p : parts) {
        std::map<RoleId, NTerm> cols;
        for (const auto& b : e.bindings()) {
          if (!cols.emplace(b.out, term_of(p, b.value)).second) {
            throw Error(ErrorKind::SchemaMismatch, "output role '" + b.out + "' bound twice");
          }
        }
        p.cols = std::move(cols);
      }
      return parts;
    }
    case Op::Sel: {
      auto parts = build(e.body(), u);
      for (auto& p : parts) {
        for (const auto& c : e.conditions()) {
          NTerm rhs = std::holds_alternative<RoleRef>(c.rhs)
                          ? col(p, std::get<RoleRef>(c.rhs).name)
                          : NTerm::of(Instance::value(std::get<Literal>(c.rhs)));
          p.unify(col(p, c.lhs), rhs);
        }
      }
      return parts;
    }
    case Op::Join: {
      auto left = build(e.left(), u);
      auto right = build(e.right(), u);
      std::vector<Partial> out;
      for (const auto& a : left) {
        for (const auto& b : right) out.push_back(merge(a, b));
      }
      return out;
    }
    case Op::Union: {
      auto left = build(e.left(), u);
      auto right = build(e.right(), u);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    case Op::Literal: {
      std::vector<Partial> out;
      for (const auto& tuple : e.tuples()) {
        Partial p;
        for (const auto& [role, term] : tuple) {
          if (std::holds_alternative<RoleRef>(term)) {
            throw Error(ErrorKind::UnknownRole, "'" + std::get<RoleRef>(term).name +
                                                    "' has no input in a literal");
          }
          p.cols.emplace(role, term_of(p, term));
        }
        out.push_back(std::move(p));
      }
      return out;
    }
  }
  return {};
}

CQ finish(Partial& p) {
  CQ q;
  std::map<std::uint32_t, std::uint32_t> renumber;
  auto canon = [&](const NTerm& t) {
    NTerm r = p.resolve(t);
    if (r.kind == Kind::Const) return r;
    auto [it, fresh] = renumber.emplace(r.var, static_cast<std::uint32_t>(renumber.size()));
    r.var = it->second;
    return r;
  };
  for (const auto& a : p.atoms) {
    Atom c{a.rel, {}};
    for (const auto& t : a.args) c.args.push_back(canon(t));
    q.atoms.push_back(std::move(c));
  }
  for (const auto& [role, t] : p.cols) q.out.emplace(role, canon(t));
  std::sort(q.atoms.begin(), q.atoms.end());
  q.atoms.erase(std::unique(q.atoms.begin(), q.atoms.end()), q.atoms.end());
  q.vars = static_cast<std::uint32_t>(renumber.size());
  return q;
}

using Assignment = std::vector<std::optional<NTerm>>;

bool match(const NTerm& pattern, const NTerm& target, Assignment& h) {
  switch (pattern.kind) {
    case Kind::Const:
      return target.kind == Kind::Const && target.constant == pattern.constant;
    case Kind::Var: {
      auto& slot = h[pattern.var];
      if (slot) return *slot == target;
      slot = target;
      return true;
    }
    case Kind::ValOf:
      if (target.kind == Kind::ValOf) {
        return target.type == pattern.type &&
               match(NTerm::variable(pattern.var), NTerm::variable(target.var), h);
      }
      if (target.kind == Kind::Const && !target.constant.is_value() &&
          target.constant.type == pattern.type) {
        return match(NTerm::variable(pattern.var),
                     NTerm::of(Instance::value(target.constant.tag)), h);
      }
      return false;
  }
  return false;
}

bool map_atoms(const CQ& from, const CQ& to, std::size_t i, const Assignment& h) {
  if (i == from.atoms.size()) return true;
  const Atom& a = from.atoms[i];
  for (const Atom& b : to.atoms) {
    if (b.rel != a.rel || b.args.size() != a.args.size()) continue;
    Assignment next = h;
    bool ok = true;
    for (std::size_t k = 0; ok && k < a.args.size(); ++k) {
      ok = match(a.args[k], b.args[k], next);
    }
    if (ok && map_atoms(from, to, i + 1, next)) return true;
  }
  return false;
}

}  // namespace

UCQ normalize(const RuleExpr& e, const Universe& u) {
  UCQ out;
  for (auto& p : build(e, u)) {
    CQ q = finish(p);
    if (p.unsat) continue;
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

bool contained_in(const CQ& a, const CQ& b) {
  if (a.out.size() != b.out.size()) return false;
  // A homomorphism from b into a witnesses that a's answers are b's.
  Assignment h(b.vars);
  for (const auto& [role, t] : b.out) {
    auto it = a.out.find(role);
    if (it == a.out.end() || !match(t, it->second, h)) return false;
  }
  return map_atoms(b, a, 0, h);
}

bool contained_in(const UCQ& a, const UCQ& b) {
  return std::all_of(a.begin(), a.end(), [&](const CQ& q) {
    return std::any_of(b.begin(), b.end(), [&](const CQ& p) { return contained_in(q, p); });
  });
}

bool equivalent(const UCQ& a, const UCQ& b) {
  return contained_in(a, b) && contained_in(b, a);
}

bool equivalent(const RuleExpr& a, const RuleExpr& b, const Universe& u) {
  return equivalent(normalize(a, u), normalize(b, u));
}

std::optional<Renaming> as_renaming(const UCQ& q, const Universe& u) {
  if (q.size() != 1 || q[0].atoms.size() != 1) return std::nullopt;
  const CQ& c = q[0];
  const Atom& a = c.atoms[0];
  if (c.out.size() != a.args.size()) return std::nullopt;
  std::map<std::uint32_t, std::size_t> position;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (a.args[i].kind != Kind::Var) return std::nullopt;
    if (!position.emplace(a.args[i].var, i).second) return std::nullopt;
  }
  Renaming r{a.rel, {}};
  std::set<std::uint32_t> used;
  const auto& roles = u.role_list(a.rel);
  for (const auto& [role, t] : c.out) {
    if (t.kind != Kind::Var || !used.insert(t.var).second) return std::nullopt;
    r.roles.emplace(role, roles.at(position.at(t.var)));
  }
  return r;
}

std::optional<std::vector<std::map<RoleId, Instance>>> as_constant(const UCQ& q) {
  std::vector<std::map<RoleId, Instance>> rows;
  for (const CQ& c : q) {
    if (!c.atoms.empty()) return std::nullopt;
    std::map<RoleId, Instance> row;
    for (const auto& [role, t] : c.out) {
      if (t.kind != Kind::Const) return std::nullopt;
      row.emplace(role, t.constant);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(const CQ& q) {
  auto term = [](const NTerm& t) -> std::string {
    switch (t.kind) {
      case Kind::Var: return "?" + std::to_string(t.var);
      case Kind::Const: return ormt::to_string(t.constant);
      case Kind::ValOf: return "Val(" + t.type + ",?" + std::to_string(t.var) + ")";
    }
    return "";
  };
  std::string out = "{";
  bool first = true;
  for (const auto& [role, t] : q.out) {
    out += (first ? "" : ", ") + role + "=" + term(t);
    first = false;
  }
  out += "} <- ";
  for (std::size_t i = 0; i < q.atoms.size(); ++i) {
    if (i) out += ", ";
    out += q.atoms[i].rel + "(";
    for (std::size_t k = 0; k < q.atoms[i].args.size(); ++k) {
      if (k) out += ", ";
      out += term(q.atoms[i].args[k]);
    }
    out += ")";
  }
  return out;
}

}  // namespace ormt::nf
