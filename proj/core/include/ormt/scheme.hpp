// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_SCHEME_HPP_
#define ORMT_SCHEME_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ormt/lexer.hpp"
#include "ormt/schema.hpp"

namespace ormt {

// One element of a section template. `x!n` is a Repeat, `(...)!n` and
// `<...>!n` are Groups, and `UNION OF (...)!n` is a Group whose copies are
// joined by UNION instead of commas.
struct TemplateItem {
  enum class Kind { Token, Symbol, Repeat, Group };
  Kind kind = Kind::Token;
  text::Token token;  // Token; the symbol name for Symbol and Repeat
  std::string arity;  // Repeat, Group
  std::vector<TemplateItem> body;
  bool angle = false;     // Group written with angle brackets, kept per copy
  bool union_of = false;  // Group introduced by UNION OF

  friend bool operator==(const TemplateItem&, const TemplateItem&) = default;
};
using Template = std::vector<TemplateItem>;

// `x` is scalar, `x!n` has dims {n}, `(r!n)!m` has dims {n, m}.
struct ParamDecl {
  std::string name;
  std::vector<std::string> dims;  // innermost first
  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct ConstraintTemplate {
  std::string id;
  Template body;
  friend bool operator==(const ConstraintTemplate&, const ConstraintTemplate&) = default;
};

struct TransformationScheme {
  std::string name;
  bool parameterized = false;  // false for a fully concrete transformation
  std::vector<ParamDecl> params;
  std::optional<std::string> property;  // "equivalence" or "strengthening"
  std::vector<Template> object_types;
  std::vector<Template> value_types;
  std::vector<Template> relationship_types;
  std::vector<ConstraintTemplate> constraints;
  std::vector<Template> from;
  std::vector<Template> to;
  std::vector<Template> derivation_rules;
  std::vector<Template> update_rules;
  // Every symbol with its dims: parameters plus relationship names the
  // scheme introduces.
  std::map<std::string, std::vector<std::string>> symbols;

  std::vector<std::string> arity_vars() const;
  friend bool operator==(const TransformationScheme&, const TransformationScheme&) = default;
};

TransformationScheme parse_scheme(std::string_view source);
std::string serialize_scheme(const TransformationScheme& t);

// A parameter list: names and literals, nested in brackets.
struct ParValue {
  std::variant<text::Token, std::vector<ParValue>> value;
  bool is_list() const { return value.index() == 1; }
  const text::Token& atom() const { return std::get<0>(value); }
  const std::vector<ParValue>& list() const { return std::get<1>(value); }
};
struct ParList {
  std::optional<std::string> scheme;  // name written before the list, if any
  std::vector<ParValue> items;
};
ParList parse_parlist(std::string_view source);
std::size_t leaf_count(const ParList& x);

struct InstantiatedTransformation {
  std::string scheme_name;
  std::optional<std::string> property;
  std::vector<std::pair<std::string, std::string>> bindings;  // e.g. {"r1,2", "won-silver-in-1"}
  std::map<std::string, std::size_t> arity;
  Universe universe;
  std::vector<TypeId> object_types;                        // as listed
  std::vector<std::pair<TypeId, std::string>> value_types;  // type and domain name
  std::vector<TypeId> relationship_types;
  std::map<TypeId, DomainDecl> dom;
  std::vector<Constraint> constraints;
  std::vector<std::string> from;  // listed components: types, constraint ids, domains
  std::vector<std::string> to;
  std::vector<Rule> derivation_rules;
  std::vector<Rule> update_rules;
  bool inverted = false;

  std::set<TypeId> types() const;
  std::set<TypeId> from_types() const;
  std::set<TypeId> to_types() const;
  std::vector<Constraint> constraints_named(const std::vector<std::string>& names) const;
  std::optional<std::string> binding(const std::string& key) const;
  friend bool operator==(const InstantiatedTransformation&,
                         const InstantiatedTransformation&) = default;
};

// Binds the parameters and grounds every section. A context schema, when
// given, decides whether listed object types are value types and supplies
// domains and relationship names.
InstantiatedTransformation instantiate(const TransformationScheme& t, const ParList& x,
                                       const Schema* context = nullptr);

Schema from_of(const InstantiatedTransformation& inst);
Schema to_of(const InstantiatedTransformation& inst);
Schema sch_of(const InstantiatedTransformation& inst);

// Swaps From and To and the two rule sets.
InstantiatedTransformation invert(const InstantiatedTransformation& inst);

// The grounded transformation in the scheme layout without parameters.
std::string serialize_instantiated(const InstantiatedTransformation& inst);

}  // namespace ormt

#endif  // ORMT_SCHEME_HPP_
