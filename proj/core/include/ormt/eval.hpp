// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_EVAL_HPP_
#define ORMT_EVAL_HPP_

#include "ormt/population.hpp"
#include "ormt/relation.hpp"
#include "ormt/rule.hpp"
#include "ormt/universe.hpp"

namespace ormt {

// The abstract instance of non-value object type t encoding v.
Instance val(const Universe& u, const TypeId& t, const Literal& v);

// Join is a Cartesian product over disjoint columns; SEL carries all
// matching. Results are duplicate-free.
Relation eval_rule(const RuleExpr& e, const Population& pop, const Universe& u);

// Evaluates a rule and orders the result by the defined type's roles.
Relation eval_rule(const Rule& r, const Population& pop, const Universe& u);

}  // namespace ormt

#endif  // ORMT_EVAL_HPP_
