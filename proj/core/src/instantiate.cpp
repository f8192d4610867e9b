// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>
#include <functional>

#include "ormt/error.hpp"
#include "ormt/scheme.hpp"

namespace ormt {
namespace {

using text::Tok;
using text::Token;
using text::TokenStream;

using Index = std::vector<std::size_t>;
using Bindings = std::map<std::string, std::map<Index, Token>>;

constexpr char kPlaceholder = '\x01';

bool opens(const Token& t) {
  return t.kind == Tok::Punct &&
         (t.text == "(" || t.text == "[" || t.text == "{" || t.text == "<");
}
bool closes(const Token& t) {
  return t.kind == Tok::Punct &&
         (t.text == ")" || t.text == "]" || t.text == "}" || t.text == ">");
}

std::vector<std::vector<Token>> split_top(const std::vector<Token>& toks) {
  std::vector<std::vector<Token>> out(1);
  int depth = 0;
  for (const auto& t : toks) {
    if (opens(t)) ++depth;
    if (closes(t)) --depth;
    if (depth == 0 && t.kind == Tok::Punct && (t.text == "," || t.text == ";")) {
      out.emplace_back();
      continue;
    }
    out.back().push_back(t);
  }
  std::erase_if(out, [](const auto& v) { return v.empty(); });
  return out;
}

TokenStream stream_of(std::vector<Token> toks) {
  Token end;
  end.kind = Tok::End;
  if (!toks.empty()) {
    end.line = toks.back().line;
    end.column = toks.back().column;
  }
  toks.push_back(end);
  return TokenStream(std::move(toks));
}

std::string index_key(const std::string& name, const Index& idx) {
  std::string out = name;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out;
}

class Expander {
 public:
  Expander(const TransformationScheme& t, Bindings& b, const std::map<std::string, std::size_t>& a)
      : scheme_(t), bindings_(b), arity_(a) {}

  std::vector<Token> expand(const Template& t) {
    std::vector<Token> out;
    emit(t, out);
    return out;
  }

  // Placeholders stand for relationship names the scheme introduces until
  // those names are resolved.
  const std::map<std::string, std::pair<std::string, Index>>& placeholders() const {
    return placeholders_;
  }

 private:
  Token symbol(const Token& at, const std::string& name) {
    Index idx;
    for (const auto& d : scheme_.symbols.at(name)) idx.push_back(env_.at(d));
    auto sym = bindings_.find(name);
    if (sym != bindings_.end()) {
      auto it = sym->second.find(idx);
      if (it != sym->second.end()) {
        Token t = it->second;
        t.line = at.line;
        t.column = at.column;
        return t;
      }
    }
    Token p = text::ident_token(std::string(1, kPlaceholder) + index_key(name, idx));
    p.line = at.line;
    p.column = at.column;
    placeholders_[p.text] = {name, idx};
    return p;
  }

  void emit(const Template& t, std::vector<Token>& out) {
    for (const auto& item : t) {
      switch (item.kind) {
        case TemplateItem::Kind::Token:
          out.push_back(item.token);
          break;
        case TemplateItem::Kind::Symbol:
          out.push_back(symbol(item.token, item.token.text));
          break;
        case TemplateItem::Kind::Repeat: {
          std::size_t n = arity_.at(item.arity);
          for (std::size_t k = 1; k <= n; ++k) {
            env_[item.arity] = k;
            if (k > 1) out.push_back(text::punct_token(","));
            out.push_back(symbol(item.token, item.token.text));
          }
          env_.erase(item.arity);
          break;
        }
        case TemplateItem::Kind::Group: {
          std::size_t n = arity_.at(item.arity);
          for (std::size_t k = 1; k <= n; ++k) {
            env_[item.arity] = k;
            if (k > 1) {
              out.push_back(item.union_of ? text::ident_token("UNION") : text::punct_token(","));
            }
            if (item.angle) out.push_back(text::punct_token("<"));
            emit(item.body, out);
            if (item.angle) out.push_back(text::punct_token(">"));
          }
          env_.erase(item.arity);
          break;
        }
      }
    }
  }

  const TransformationScheme& scheme_;
  Bindings& bindings_;
  const std::map<std::string, std::size_t>& arity_;
  std::map<std::string, std::size_t> env_;
  std::map<std::string, std::pair<std::string, Index>> placeholders_;
};

void fix_arity(std::map<std::string, std::size_t>& arity, const std::string& var, std::size_t n,
               const std::string& param) {
  if (n == 0) throw Error(ErrorKind::ArityMismatch, param + " binds an empty list");
  auto [it, fresh] = arity.emplace(var, n);
  if (!fresh && it->second != n) {
    throw Error(ErrorKind::ArityMismatch, param + " gives " + var + " = " + std::to_string(n) +
                                              " but it is already " + std::to_string(it->second));
  }
}

const Token& atom_of(const ParValue& v, const std::string& param) {
  if (v.is_list()) throw Error(ErrorKind::ArityMismatch, param + " expects a single value");
  return v.atom();
}

void collect_idents(const ParValue& v, std::set<std::string>& seen) {
  if (v.is_list()) {
    for (const auto& x : v.list()) collect_idents(x, seen);
    return;
  }
  if (v.atom().kind != Tok::Ident) return;
  if (!seen.insert(v.atom().text).second) {
    throw Error(ErrorKind::DuplicateName, "'" + v.atom().text + "' appears twice in the parameter list");
  }
}

bool all_atoms(const std::vector<ParValue>& xs) {
  return std::none_of(xs.begin(), xs.end(), [](const ParValue& v) { return v.is_list(); });
}

std::pair<Bindings, std::map<std::string, std::size_t>> bind(const TransformationScheme& t,
                                                             const ParList& x) {
  if (x.items.size() != t.params.size()) {
    throw Error(ErrorKind::ArityMismatch, t.name + " takes " + std::to_string(t.params.size()) +
                                              " parameters, got " + std::to_string(x.items.size()));
  }
  std::set<std::string> seen;
  for (const auto& v : x.items) collect_idents(v, seen);

  std::map<std::string, std::size_t> arity;
  Bindings b;
  for (std::size_t p = 0; p < t.params.size(); ++p) {
    const auto& decl = t.params[p];
    const auto& v = x.items[p];
    if (decl.dims.empty()) {
      b[decl.name][{}] = atom_of(v, decl.name);
    } else if (decl.dims.size() == 1) {
      if (!v.is_list()) {
        fix_arity(arity, decl.dims[0], 1, decl.name);
        b[decl.name][{1}] = v.atom();
        continue;
      }
      if (!all_atoms(v.list())) throw Error(ErrorKind::ArityMismatch, decl.name + " expects a flat list");
      fix_arity(arity, decl.dims[0], v.list().size(), decl.name);
      for (std::size_t k = 0; k < v.list().size(); ++k) b[decl.name][{k + 1}] = v.list()[k].atom();
    }
  }
  for (std::size_t p = 0; p < t.params.size(); ++p) {
    const auto& decl = t.params[p];
    if (decl.dims.size() != 2) continue;
    const auto& v = x.items[p];
    if (!v.is_list()) throw Error(ErrorKind::ArityMismatch, decl.name + " expects a list");
    const auto& xs = v.list();
    const std::string& n = decl.dims[0];
    const std::string& m = decl.dims[1];
    if (all_atoms(xs)) {
      std::size_t total = xs.size();
      if (arity.count(n)) {
        if (total % arity[n] != 0) throw Error(ErrorKind::ArityMismatch, decl.name + " has the wrong length");
        fix_arity(arity, m, total / arity[n], decl.name);
      } else if (arity.count(m)) {
        if (total % arity[m] != 0) throw Error(ErrorKind::ArityMismatch, decl.name + " has the wrong length");
        fix_arity(arity, n, total / arity[m], decl.name);
      } else {
        throw Error(ErrorKind::ArityMismatch,
                    decl.name + " is flat but neither " + n + " nor " + m + " is known; nest it");
      }
      std::size_t nn = arity[n];
      for (std::size_t i = 0; i < total; ++i) b[decl.name][{i % nn + 1, i / nn + 1}] = xs[i].atom();
      continue;
    }
    fix_arity(arity, m, xs.size(), decl.name);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!xs[j].is_list() || !all_atoms(xs[j].list())) {
        throw Error(ErrorKind::ArityMismatch, decl.name + " mixes lists and values");
      }
      fix_arity(arity, n, xs[j].list().size(), decl.name);
      for (std::size_t k = 0; k < xs[j].list().size(); ++k) {
        b[decl.name][{k + 1, j + 1}] = xs[j].list()[k].atom();
      }
    }
  }
  for (const auto& var : t.arity_vars()) {
    if (!arity.count(var)) throw Error(ErrorKind::ArityMismatch, "arity " + var + " is never fixed");
  }
  return {std::move(b), std::move(arity)};
}

std::string single_name(const std::vector<Token>& piece, const std::string& what) {
  if (piece.size() != 1 || piece[0].kind != Tok::Ident || piece[0].text[0] == kPlaceholder) {
    const Token& at = piece.front();
    throw SyntaxError(at.line, at.column, "expected a single " + what + " name");
  }
  return piece[0].text;
}

class Builder {
 public:
  Builder(const TransformationScheme& t, const Schema* context) : scheme_(t), context_(context) {}

  InstantiatedTransformation run(const ParList& x) {
    if (x.scheme && *x.scheme != scheme_.name) {
      throw Error(ErrorKind::SchemaMismatch,
                  "parameter list is for " + *x.scheme + ", not " + scheme_.name);
    }
    auto [bindings, arity] = bind(scheme_, x);
    bindings_ = std::move(bindings);
    out_.scheme_name = scheme_.name;
    out_.property = scheme_.property;
    out_.arity = arity;
    for (const auto& p : scheme_.params) {
      std::vector<std::pair<Index, Token>> entries(bindings_[p.name].begin(), bindings_[p.name].end());
      std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(),
                                            b.first.rend());
      });
      for (const auto& [idx, tok] : entries) {
        out_.bindings.emplace_back(index_key(p.name, idx), text::spell(tok));
      }
    }
    Expander ex(scheme_, bindings_, out_.arity);

    for (const auto& item : scheme_.object_types) {
      for (const auto& piece : split_top(ex.expand(item))) add_object(single_name(piece, "object type"));
    }
    for (const auto& item : scheme_.value_types) {
      for (const auto& piece : split_top(ex.expand(item))) add_value_decl(piece);
    }
    std::vector<std::vector<Token>> rels;
    for (const auto& item : scheme_.relationship_types) {
      for (auto& piece : split_top(ex.expand(item))) rels.push_back(std::move(piece));
    }
    for (const auto& piece : rels) add_relationship(piece, ex);

    for (const auto& c : scheme_.constraints) {
      TokenStream ts = stream_of(ex.expand(c.body));
      Constraint k = parse_constraint(ts, c.id);
      ts.expect_end();
      out_.constraints.push_back(std::move(k));
    }
    out_.from = listed(scheme_.from, ex);
    out_.to = listed(scheme_.to, ex);
    out_.derivation_rules = rules(scheme_.derivation_rules, ex, RuleKind::Derivation);
    out_.update_rules = rules(scheme_.update_rules, ex, RuleKind::Update);
    return std::move(out_);
  }

 private:
  void claim(const std::string& name) {
    if (!names_.insert(name).second) throw Error(ErrorKind::DuplicateName, "type " + name + " declared twice");
  }

  std::optional<DomainDecl> context_domain(const std::string& name) const {
    if (!context_) return std::nullopt;
    for (const auto& [t, d] : context_->version.dom) {
      if (d.name == name) return d;
    }
    return std::nullopt;
  }

  void declare_value(const TypeId& t, const DomainDecl& d) {
    out_.universe.object_types.insert(t);
    out_.universe.value_types.insert(t);
    out_.universe.domain_of[t] = d.name;
    out_.dom[t] = d;
  }

  void add_object(const TypeId& t) {
    claim(t);
    out_.object_types.push_back(t);
    if (context_ && context_->universe.is_relationship(t)) {
      throw Error(ErrorKind::Partiality, t + " is a relationship type in the context schema");
    }
    if (context_ && context_->universe.is_value(t)) {
      const auto& d = context_->version.dom.count(t)
                          ? context_->version.dom.at(t)
                          : DomainDecl{context_->universe.domain_of.at(t), std::nullopt};
      declare_value(t, d);
      out_.value_types.emplace_back(t, d.name);
      return;
    }
    out_.universe.object_types.insert(t);
  }

  void add_value_decl(const std::vector<Token>& piece) {
    if (piece.size() != 3 || piece[0].kind != Tok::Ident || piece[1].text != ":" ||
        piece[2].kind != Tok::Ident) {
      throw SyntaxError(piece[0].line, piece[0].column, "expected '<value type>: <domain>'");
    }
    const TypeId& t = piece[0].text;
    const std::string& dname = piece[2].text;
    if (!out_.universe.is_object(t)) {
      claim(t);
    }
    auto existing = std::find_if(out_.value_types.begin(), out_.value_types.end(),
                                 [&](const auto& v) { return v.first == t; });
    if (existing != out_.value_types.end()) {
      if (existing->second != dname) {
        throw Error(ErrorKind::DomainMismatch, t + " has domains " + existing->second + " and " + dname);
      }
      return;
    }
    declare_value(t, context_domain(dname).value_or(DomainDecl{dname, std::nullopt}));
    out_.value_types.emplace_back(t, dname);
  }

  void ensure_player(const TypeId& p, const Token& at) {
    if (out_.universe.is_object(p)) return;
    if (context_ && context_->universe.is_object(p)) {
      claim(p);
      out_.object_types.push_back(p);
      if (context_->universe.is_value(p)) {
        DomainDecl d = context_->version.dom.count(p)
                           ? context_->version.dom.at(p)
                           : DomainDecl{context_->universe.domain_of.at(p), std::nullopt};
        declare_value(p, d);
        out_.value_types.emplace_back(p, d.name);
      } else {
        out_.universe.object_types.insert(p);
      }
      return;
    }
    throw Error(ErrorKind::Undeclared, std::to_string(at.line) + ":" + std::to_string(at.column) +
                                           ": role player " + p + " is not declared");
  }

  std::string resolve_name(const std::vector<std::pair<TypeId, RoleId>>& roles) const {
    if (context_) {
      std::set<RoleId> mine;
      for (const auto& pr : roles) mine.insert(pr.second);
      for (const auto& rel : context_->universe.relationship_types) {
        const auto& rs = context_->universe.role_list(rel);
        if (std::set<RoleId>(rs.begin(), rs.end()) == mine) return rel;
      }
    }
    std::string base;
    for (std::size_t j = 0; j < roles.size(); ++j) {
      const RoleId& r = roles[j].second;
      std::string suffix = "-" + std::to_string(j + 1);
      if (r.size() <= suffix.size() || r.compare(r.size() - suffix.size(), suffix.size(), suffix) != 0) {
        return {};
      }
      std::string stem = r.substr(0, r.size() - suffix.size());
      if (j == 0) base = stem;
      if (stem != base) return {};
    }
    return base;
  }

  void add_relationship(const std::vector<Token>& piece, Expander& ex) {
    TokenStream ts = stream_of(piece);
    const Token head = ts.next();
    if (head.kind != Tok::Ident) ts.fail("expected a relationship name");
    ts.expect_punct("=");
    ts.expect_punct("[");
    std::vector<std::pair<TypeId, RoleId>> roles;
    std::vector<Token> at;
    do {
      at.push_back(ts.peek());
      TypeId p = ts.expect_ident("role player");
      ts.expect_punct(":");
      RoleId r = ts.expect_ident("role name");
      roles.emplace_back(std::move(p), std::move(r));
    } while (ts.accept_punct(","));
    ts.expect_punct("]");
    std::optional<std::string> named;
    if (ts.accept_word("NAMED")) named = ts.expect_ident("relationship name");
    ts.expect_end();

    std::string name = head.text;
    bool placeholder = name[0] == kPlaceholder;
    if (named) {
      name = *named;
    } else if (placeholder) {
      name = resolve_name(roles);
      if (name.empty()) {
        const auto& [sym, idx] = ex.placeholders().at(head.text);
        throw Error(ErrorKind::Partiality,
                    "no name for relationship " + index_key(sym, idx) +
                        "; bind it with NAMED or follow the '<name>-k' role convention");
      }
    }
    if (placeholder) {
      const auto& [sym, idx] = ex.placeholders().at(head.text);
      bindings_[sym][idx] = text::ident_token(name);
    }
    if (context_ && context_->universe.is_object(name)) {
      throw Error(ErrorKind::Partiality, name + " is an object type in the context schema");
    }
    claim(name);
    for (std::size_t j = 0; j < roles.size(); ++j) {
      ensure_player(roles[j].first, at[j]);
      bool repeated = std::count_if(roles.begin(), roles.end(), [&](const auto& pr) {
                        return pr.second == roles[j].second;
                      }) > 1;
      if (repeated || out_.universe.has_role(roles[j].second)) {
        throw Error(ErrorKind::DuplicateName, "role " + roles[j].second + " declared twice");
      }
    }
    out_.universe.add_relationship(name, roles);
    out_.relationship_types.push_back(name);
  }

  std::vector<std::string> listed(const std::vector<Template>& items, Expander& ex) {
    std::set<std::string> ids;
    for (const auto& c : out_.constraints) ids.insert(c.id);
    std::set<std::string> domains;
    for (const auto& [t, d] : out_.dom) domains.insert(d.name);
    std::vector<std::string> out;
    for (const auto& item : items) {
      for (const auto& piece : split_top(ex.expand(item))) {
        std::string name = single_name(piece, "component");
        if (!out_.universe.declares(name) && !ids.count(name) && !domains.count(name)) {
          throw Error(ErrorKind::Partiality,
                      name + " is neither a type, a constraint nor a domain of the transformation");
        }
        out.push_back(std::move(name));
      }
    }
    return out;
  }

  std::vector<Rule> rules(const std::vector<Template>& items, Expander& ex, RuleKind kind) {
    std::vector<Rule> out;
    for (const auto& item : items) {
      for (const auto& piece : split_top(ex.expand(item))) {
        TokenStream ts = stream_of(piece);
        Rule r;
        r.defines = ts.expect_ident("rule target");
        ts.expect_punct("=");
        r.body = parse_rule_expr(ts);
        ts.expect_end();
        r.kind = kind;
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  const TransformationScheme& scheme_;
  const Schema* context_;
  Bindings bindings_;
  std::set<std::string> names_;
  InstantiatedTransformation out_;
};

}  // namespace

InstantiatedTransformation instantiate(const TransformationScheme& t, const ParList& x,
                                       const Schema* context) {
  return Builder(t, context).run(x);
}

}  // namespace ormt
