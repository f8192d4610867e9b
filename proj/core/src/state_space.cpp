// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ormt/constraint_eval.hpp"
#include "ormt/error.hpp"

namespace ormt {
namespace {

void collect_images(const RuleExpr& e, std::set<Instance>& out) {
  auto term = [&](const Term& t) {
    if (const auto* v = std::get_if<ValCall>(&t)) {
      if (const auto* lit = std::get_if<Literal>(&v->arg)) {
        out.insert(Instance::abstract(v->type, *lit));
      }
    }
  };
  switch (e.op()) {
    case RuleExpr::Op::Proj:
      for (const auto& b : e.bindings()) term(b.value);
      collect_images(e.body(), out);
      break;
    case RuleExpr::Op::Sel:
      collect_images(e.body(), out);
      break;
    case RuleExpr::Op::Join:
    case RuleExpr::Op::Union:
      collect_images(e.left(), out);
      collect_images(e.right(), out);
      break;
    case RuleExpr::Op::Literal:
      for (const auto& tuple : e.tuples()) {
        for (const auto& [_, t] : tuple) term(t);
      }
      break;
    case RuleExpr::Op::Ref:
      break;
  }
}

// A non-value object type with no supertype in the schema owns its
// instances; subtypes draw from it.
TypeId root_of(const Schema& s, const TypeId& t) {
  TypeId best = t;
  for (const auto& sup : s.universe.supertypes(t)) {
    if (s.version.types.count(sup) && s.universe.supertypes(sup).size() <
                                          s.universe.supertypes(best).size()) {
      best = sup;
    }
  }
  return best;
}

struct Plan {
  std::vector<TypeId> entities;  // supertypes before subtypes
  std::map<TypeId, std::vector<Instance>> candidates;  // per root entity
  std::vector<TypeId> relations;
  std::map<TypeId, std::vector<Instance>> values;  // value-type candidates
  std::map<TypeId, std::vector<const Constraint*>> local;
  double raw_log2 = 0;
};

bool local_to(const Constraint& c, const Universe& u, const TypeId& t) {
  switch (c.kind) {
    case ConstraintKind::Unique:
    case ConstraintKind::Frequency:
      return std::all_of(c.roles.begin(), c.roles.end(),
                         [&](const RoleId& r) { return u.rel_of(r) == t; });
    case ConstraintKind::CardEq:
      return c.type == t;
    case ConstraintKind::EachIsIn:
      return c.type == t && u.is_entity(t);
    default:
      return false;
  }
}

Plan make_plan(const Schema& s, const DomainBounds& b, const EnumerateOptions& opts) {
  const Universe& u = s.universe;
  Plan plan;
  std::set<TypeId> base = base_types(s);
  for (const auto& t : base) {
    if (u.is_entity(t)) plan.entities.push_back(t);
    if (u.is_relationship(t)) plan.relations.push_back(t);
  }
  std::stable_sort(plan.entities.begin(), plan.entities.end(),
                   [&](const TypeId& a, const TypeId& c) {
                     return u.supertypes(a).size() < u.supertypes(c).size();
                   });
  for (const auto& t : s.version.types) {
    if (u.is_value(t)) {
      for (const auto& v : domain_values(s, t, b)) plan.values[t].push_back(Instance::value(v));
    }
  }
  std::set<Instance> images = val_images(s);
  images.insert(opts.extra_instances.begin(), opts.extra_instances.end());
  for (const auto& t : plan.entities) {
    if (root_of(s, t) != t) continue;
    auto& cand = plan.candidates[t];
    for (std::size_t k = 0; k < b.pool(t); ++k) {
      cand.push_back(Instance::abstract(t, "#" + std::to_string(k)));
    }
    for (const auto& x : images) {
      if (s.version.types.count(x.type) && u.is_entity(x.type) && root_of(s, x.type) == t) {
        cand.push_back(x);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  }
  for (const auto& c : s.version.constraints) {
    for (const auto& t : base) {
      if (local_to(c, u, t)) plan.local[t].push_back(&c);
    }
  }

  auto max_size = [&](const TypeId& t) -> double {
    if (u.is_value(t)) return static_cast<double>(plan.values[t].size());
    if (u.is_entity(t) && s.version.types.count(t)) {
      return static_cast<double>(plan.candidates[root_of(s, t)].size());
    }
    throw Error(ErrorKind::UnsupportedPattern, "cannot enumerate players of type " + t);
  };
  for (const auto& t : plan.entities) plan.raw_log2 += max_size(t);
  for (const auto& rel : plan.relations) {
    double tuples = 1;
    for (const auto& r : u.role_list(rel)) tuples *= max_size(u.player.at(r));
    plan.raw_log2 += tuples;
  }
  return plan;
}

void check_cap(double raw_log2, std::uint64_t cap) {
  double limit = cap == 0 ? -1 : std::log2(static_cast<double>(cap));
  if (raw_log2 > limit + 1e-9) {
    std::ostringstream msg;
    msg << "estimated 2^" << raw_log2 << " base populations exceed the cap of " << cap;
    throw Error(ErrorKind::SpaceExceeded, msg.str());
  }
}

bool locally_valid(const Schema& s, const Plan& plan, const TypeId& t, const Population& p) {
  auto it = plan.local.find(t);
  if (it == plan.local.end()) return true;
  for (const Constraint* c : it->second) {
    if (check_constraint(*c, s, p)) return false;
  }
  return true;
}

// All subsets of `items`, smallest masks first.
template <typename T, typename F>
void for_each_subset(const std::vector<T>& items, F&& f) {
  if (items.size() >= 63) throw Error(ErrorKind::SpaceExceeded, "too many candidates");
  const std::uint64_t n = std::uint64_t{1} << items.size();
  std::vector<T> subset;
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) subset.push_back(items[i]);
    }
    f(subset);
  }
}

class Enumerator {
 public:
  Enumerator(const Schema& s, const Plan& plan, const std::function<void(const Population&)>& visit)
      : s_(s), plan_(plan), visit_(visit) {
    pop_ = empty_population(s.universe, base_types(s));
  }

  void run() { entity(0); }

 private:
  void entity(std::size_t i) {
    if (i == plan_.entities.size()) {
      relations();
      return;
    }
    const TypeId& t = plan_.entities[i];
    std::vector<Instance> cand;
    if (auto it = plan_.candidates.find(t); it != plan_.candidates.end()) {
      cand = it->second;
    } else {
      cand = plan_.candidates.at(root_of(s_, t));
      for (const auto& sup : s_.universe.supertypes(t)) {
        auto chosen = pop_.objects.find(sup);
        if (chosen == pop_.objects.end()) continue;
        std::erase_if(cand, [&](const Instance& x) { return !chosen->second.count(x); });
      }
    }
    for_each_subset(cand, [&](const std::vector<Instance>& subset) {
      pop_.objects[t] = std::set<Instance>(subset.begin(), subset.end());
      if (locally_valid(s_, plan_, t, pop_)) entity(i + 1);
    });
    pop_.objects[t].clear();
  }

  void relations() {
    const Universe& u = s_.universe;
    std::vector<std::vector<Relation>> choices;
    for (const auto& rel : plan_.relations) {
      const auto& roles = u.role_list(rel);
      std::vector<Row> tuples{Row{}};
      for (const auto& r : roles) {
        const auto& pl = u.player.at(r);
        std::vector<Instance> dom;
        if (u.is_value(pl)) {
          dom = plan_.values.at(pl);
        } else {
          const auto& chosen = pop_.objects.at(pl);
          dom.assign(chosen.begin(), chosen.end());
        }
        std::vector<Row> next;
        for (const auto& row : tuples) {
          for (const auto& x : dom) {
            Row extended = row;
            extended.push_back(x);
            next.push_back(std::move(extended));
          }
        }
        tuples = std::move(next);
      }
      std::vector<Relation> options;
      for_each_subset(tuples, [&](const std::vector<Row>& subset) {
        Relation candidate(roles, subset);
        pop_.relations.insert_or_assign(rel, candidate);
        if (locally_valid(s_, plan_, rel, pop_)) options.push_back(std::move(candidate));
      });
      pop_.relations.insert_or_assign(rel, Relation(roles));
      choices.push_back(std::move(options));
    }
    product(choices, 0);
  }

  void product(const std::vector<std::vector<Relation>>& choices, std::size_t j) {
    if (j == choices.size()) {
      visit_(pop_);
      return;
    }
    const TypeId& rel = plan_.relations[j];
    for (const auto& r : choices[j]) {
      pop_.relations.insert_or_assign(rel, r);
      product(choices, j + 1);
    }
    pop_.relations.insert_or_assign(rel, Relation(s_.universe.role_list(rel)));
  }

  const Schema& s_;
  const Plan& plan_;
  const std::function<void(const Population&)>& visit_;
  Population pop_;
};

}  // namespace

bool StateSpace::contains(const Population& p) const {
  return std::binary_search(pops.begin(), pops.end(), p);
}

std::set<Instance> val_images(const Schema& s) {
  std::set<Instance> out;
  for (const auto* rules : {&s.version.derivation_rules, &s.version.update_rules}) {
    for (const auto& r : *rules) collect_images(r.body, out);
  }
  for (const auto& c : s.version.constraints) {
    if (c.kind == ConstraintKind::EachIsIn && s.universe.is_entity(c.type)) {
      for (const auto& l : c.values) out.insert(Instance::abstract(c.type, l));
    }
  }
  return out;
}

std::vector<Literal> domain_values(const Schema& s, const TypeId& value_type,
                                   const DomainBounds& b) {
  auto name = s.universe.domain_of.find(value_type);
  if (name != s.universe.domain_of.end()) {
    auto bound = b.domains.find(name->second);
    if (bound != b.domains.end()) return bound->second;
  }
  auto decl = s.version.dom.find(value_type);
  if (decl != s.version.dom.end() && decl->second.values) return *decl->second.values;
  throw Error(ErrorKind::UnboundedDomain,
              "value type " + value_type + " needs a bound for its domain" +
                  (name != s.universe.domain_of.end() ? " " + name->second : std::string()));
}

double estimate_log2(const Schema& s, const DomainBounds& b, const EnumerateOptions& opts) {
  return make_plan(s, b, opts).raw_log2;
}

void for_each_base_population(const Schema& s, const DomainBounds& b,
                              const EnumerateOptions& opts,
                              const std::function<void(const Population&)>& visit) {
  Plan plan = make_plan(s, b, opts);
  check_cap(plan.raw_log2, b.cap);
  Enumerator(s, plan, visit).run();
}

StateSpace enumerate_state_space(const Schema& s, const DomainBounds& b,
                                 const EnumerateOptions& opts) {
  StateSpace space;
  space.raw_log2 = estimate_log2(s, b, opts);
  std::set<Population> found;
  for_each_base_population(s, b, opts, [&](const Population& base) {
    ++space.examined;
    Population full = extend_with_derivations(s, base);
    if (check_full_population(s, full, true).valid()) found.insert(std::move(full));
  });
  space.pops.assign(found.begin(), found.end());
  return space;
}

}  // namespace ormt
