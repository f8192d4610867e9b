// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>

#include "ormt/error.hpp"
#include "ormt/schema.hpp"

namespace ormt {
namespace {

using text::Tok;
using text::TokenStream;

enum Section {
  kObjectTypes,
  kValueTypes,
  kDomains,
  kRelationshipTypes,
  kSubtypes,
  kInternal,
  kConstraints,
  kDerivationRules,
  kUpdateRules,
  kEnd,
  kNone,
};

// Returns the section whose header starts at the cursor and its token length.
std::pair<Section, std::size_t> header_at(const TokenStream& ts) {
  auto two = [&](std::string_view a, std::string_view b) {
    return ts.is_word(a) && ts.is_word(b, 1) && ts.is_punct(":", 2);
  };
  if (two("OBJECT", "TYPES")) return {kObjectTypes, 3};
  if (two("VALUE", "TYPES")) return {kValueTypes, 3};
  if (ts.is_word("DOMAINS") && ts.is_punct(":", 1)) return {kDomains, 2};
  if (two("RELATIONSHIP", "TYPES")) return {kRelationshipTypes, 3};
  if (ts.is_word("SUBTYPES") && ts.is_punct(":", 1)) return {kSubtypes, 2};
  if (ts.is_word("INTERNAL") && ts.is_punct(":", 1)) return {kInternal, 2};
  if (ts.is_word("CONSTRAINTS") && ts.is_punct(":", 1)) return {kConstraints, 2};
  if (two("DERIVATION", "RULES")) return {kDerivationRules, 3};
  if (two("UPDATE", "RULES")) return {kUpdateRules, 3};
  if (ts.is_word("END") && ts.is_word("SCHEMA", 1)) return {kEnd, 2};
  return {kNone, 0};
}

bool at_section_end(const TokenStream& ts) {
  return ts.at_end() || header_at(ts).first != kNone;
}

void skip_separators(TokenStream& ts) {
  while (ts.accept_punct(";") || ts.accept_punct(",")) {
  }
}

Literal parse_literal(TokenStream& ts) {
  const text::Token& t = ts.peek();
  if (t.kind == Tok::Int) return ts.next().value;
  if (t.kind == Tok::String) return ts.next().text;
  ts.fail("expected a value literal");
}

class SchemaParser {
 public:
  SchemaParser(std::string_view src, NameCheck names)
      : ts_(text::tokenize(src)), strict_(names == NameCheck::Strict) {}

  Schema parse() {
    if (ts_.at_end()) ts_.fail("expected SCHEMA");
    ts_.expect_word("SCHEMA");
    schema_.name = ts_.expect_ident("schema name");
    int last = -1;
    while (true) {
      auto [section, len] = header_at(ts_);
      if (section == kNone) ts_.fail("expected a section header or END SCHEMA");
      if (static_cast<int>(section) <= last) ts_.fail("section out of order");
      last = static_cast<int>(section);
      for (std::size_t i = 0; i < len; ++i) ts_.next();
      if (section == kEnd) break;
      parse_section(section);
    }
    ts_.expect_end();
    finish();
    return schema_;
  }

 private:
  void duplicate(const std::string& what) const {
    if (strict_) throw Error(ErrorKind::DuplicateName, what);
  }

  void undeclared(const std::string& what) const {
    if (strict_) throw Error(ErrorKind::Undeclared, what);
  }

  void declare_type(const TypeId& t) {
    if (names_.count(t)) duplicate("'" + t + "' declared twice");
    names_.insert(t);
  }

  void parse_section(Section section) {
    Universe& u = schema_.universe;
    while (true) {
      skip_separators(ts_);
      if (at_section_end(ts_)) return;
      switch (section) {
        case kObjectTypes: {
          auto t = ts_.expect_ident("object type name");
          declare_type(t);
          u.object_types.insert(t);
          break;
        }
        case kValueTypes: {
          auto t = ts_.expect_ident("value type name");
          ts_.expect_punct(":");
          auto d = ts_.expect_ident("domain name");
          declare_type(t);
          u.object_types.insert(t);
          u.value_types.insert(t);
          u.domain_of[t] = d;
          break;
        }
        case kDomains: {
          DomainDecl d;
          d.name = ts_.expect_ident("domain name");
          ts_.expect_punct("=");
          if (ts_.accept_word("UNBOUNDED")) {
            d.values.reset();
          } else {
            ts_.expect_punct("{");
            std::vector<Literal> values;
            if (!ts_.is_punct("}")) {
              do {
                values.push_back(parse_literal(ts_));
              } while (ts_.accept_punct(","));
            }
            ts_.expect_punct("}");
            auto sorted = values;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
              duplicate("domain " + d.name + " lists a value twice");
            }
            d.values = std::move(values);
          }
          if (domains_.count(d.name)) duplicate("domain " + d.name + " declared twice");
          domains_.emplace(d.name, d);
          break;
        }
        case kRelationshipTypes: {
          auto rel = ts_.expect_ident("relationship type name");
          ts_.expect_punct("=");
          ts_.expect_punct("[");
          std::vector<std::pair<TypeId, RoleId>> roles;
          do {
            auto p = ts_.expect_ident("player type");
            ts_.expect_punct(":");
            auto r = ts_.expect_ident("role name");
            roles.emplace_back(p, r);
          } while (ts_.accept_punct(","));
          ts_.expect_punct("]");
          declare_type(rel);
          for (const auto& [p, r] : roles) {
            if (u.roles.count(r)) duplicate("role '" + r + "' listed in two relationship types");
            if (names_.count(r)) duplicate("role '" + r + "' collides with a type name");
            u.roles.insert(r);
          }
          u.add_relationship(rel, roles);
          break;
        }
        case kSubtypes: {
          auto a = ts_.expect_ident("subtype");
          ts_.expect_word("SUBOF");
          auto b = ts_.expect_ident("supertype");
          generators_.emplace(a, b);
          break;
        }
        case kInternal:
          internal_.push_back(ts_.expect_ident("type name"));
          break;
        case kConstraints: {
          auto id = ts_.expect_ident("constraint id");
          ts_.expect_punct(":");
          if (!constraint_ids_.insert(id).second) duplicate("constraint " + id + " declared twice");
          schema_.version.constraints.push_back(parse_constraint(ts_, id));
          break;
        }
        case kDerivationRules:
        case kUpdateRules: {
          Rule r;
          r.defines = ts_.expect_ident("defined type");
          ts_.expect_punct("=");
          r.body = parse_rule_expr(ts_);
          r.kind = section == kDerivationRules ? RuleKind::Derivation : RuleKind::Update;
          auto& list = section == kDerivationRules ? schema_.version.derivation_rules
                                                   : schema_.version.update_rules;
          list.push_back(std::move(r));
          break;
        }
        default:
          return;
      }
      if (!at_section_end(ts_) && !ts_.is_punct(";") && !ts_.is_punct(",")) {
        ts_.fail("expected ';'");
      }
    }
  }

  void finish() {
    Universe& u = schema_.universe;
    SchemaVersion& v = schema_.version;
    for (const auto& [rel, roles] : u.roles_of) {
      for (const auto& r : roles) {
        if (names_.count(r)) duplicate("role '" + r + "' collides with a type name");
        auto found = u.player.find(r);
        if (found == u.player.end()) continue;
        const auto& p = found->second;
        if (!u.declares(p)) undeclared("player '" + p + "' of role " + r);
      }
    }
    for (const auto& [a, b] : generators_) {
      for (const auto* t : {&a, &b}) {
        if (!u.declares(*t)) undeclared("type '" + *t + "' in SUBTYPES");
      }
    }
    u.sub_of = transitive_closure(generators_);
    v.types = u.types();
    for (const auto& t : internal_) {
      if (!u.declares(t)) undeclared("internal type '" + t + "'");
      v.internal.insert(t);
    }
    for (const auto& [t, d] : u.domain_of) {
      auto it = domains_.find(d);
      if (it != domains_.end()) v.dom.emplace(t, it->second);
    }
    for (const auto& c : v.constraints) {
      for (const auto& r : referenced_roles(c)) {
        if (!u.has_role(r)) undeclared("role '" + r + "' in constraint " + c.id);
      }
      if (!c.type.empty() && !u.declares(c.type)) {
        undeclared("type '" + c.type + "' in constraint " + c.id);
      }
    }
    for (const auto* rules : {&v.derivation_rules, &v.update_rules}) {
      for (const auto& r : *rules) {
        if (!u.declares(r.defines)) undeclared("type '" + r.defines + "' defined by a rule");
        for (const auto& d : depends(r)) {
          if (!u.declares(d)) undeclared("type '" + d + "' in rule for " + r.defines);
        }
      }
    }
    schema_.canonicalize();
  }

  TokenStream ts_;
  bool strict_;
  Schema schema_;
  std::set<std::string> names_;
  std::set<std::string> constraint_ids_;
  std::map<std::string, DomainDecl> domains_;
  SubOfRelation generators_;
  std::vector<TypeId> internal_;
};

std::string domain_text(const DomainDecl& d) {
  if (!d.values) return d.name + " = UNBOUNDED";
  std::string out = d.name + " = {";
  for (std::size_t i = 0; i < d.values->size(); ++i) {
    out += (i ? ", " : " ") + literal_text((*d.values)[i]);
  }
  return out + (d.values->empty() ? "}" : " }");
}

}  // namespace

Schema parse_schema(std::string_view source, NameCheck names) {
  return SchemaParser(source, names).parse();
}

std::string serialize_schema(const Schema& s) {
  const Universe& u = s.universe;
  const SchemaVersion& v = s.version;
  std::string out = "SCHEMA " + s.name + "\n";
  auto list = [&](const std::string& header, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out += header + ":";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : " ") + items[i];
    out += " ;\n";
  };
  auto block = [&](const std::string& header, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out += header + ":\n";
    for (const auto& item : items) out += "  " + item + " ;\n";
  };

  std::vector<std::string> entities, values, rels, subs, internal, constraints, der, upd;
  std::map<std::string, DomainDecl> domains;
  for (const auto& t : v.types) {
    if (u.is_entity(t)) entities.push_back(t);
    if (u.is_value(t)) {
      auto d = u.domain_of.find(t);
      values.push_back(t + ": " + (d == u.domain_of.end() ? std::string("?") : d->second));
      auto decl = v.dom.find(t);
      if (decl != v.dom.end()) domains.emplace(decl->second.name, decl->second);
    }
    if (u.is_relationship(t)) {
      std::string item = t + " = [";
      const auto& roles = u.role_list(t);
      for (std::size_t i = 0; i < roles.size(); ++i) {
        item += (i ? ", " : " ") + u.player.at(roles[i]) + ":" + roles[i];
      }
      rels.push_back(item + " ]");
    }
  }
  for (const auto& [a, b] : transitive_reduction(u.sub_of)) {
    if (v.types.count(a) && v.types.count(b)) subs.push_back(a + " SUBOF " + b);
  }
  internal.assign(v.internal.begin(), v.internal.end());
  for (const auto& c : v.constraints) constraints.push_back(c.id + ": " + constraint_text(c));
  for (const auto& r : v.derivation_rules) der.push_back(r.defines + " = " + to_string(r.body));
  for (const auto& r : v.update_rules) upd.push_back(r.defines + " = " + to_string(r.body));
  std::vector<std::string> doms;
  for (const auto& [name, d] : domains) doms.push_back(domain_text(d));

  list("OBJECT TYPES", entities);
  list("VALUE TYPES", values);
  block("DOMAINS", doms);
  block("RELATIONSHIP TYPES", rels);
  block("SUBTYPES", subs);
  list("INTERNAL", internal);
  block("CONSTRAINTS", constraints);
  block("DERIVATION RULES", der);
  block("UPDATE RULES", upd);
  out += "END SCHEMA\n";
  return out;
}

}  // namespace ormt
