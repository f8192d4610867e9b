// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <algorithm>
#include <array>
#include <string_view>

#include "ormt/error.hpp"
#include "ormt/scheme.hpp"

namespace ormt {
namespace {

using text::Tok;
using text::Token;
using text::TokenStream;

constexpr std::array<std::string_view, 18> kKeywords = {
    "PROJ",     "SEL",      "JOIN",      "UNION",     "OF",        "Val",
    "UNIQUE",   "MANDATORY", "EACH",     "IS",        "IN",        "FREQUENCY",
    "EXCLUSION", "SUBSET",  "EQUALITY",  "EXTUNIQUE", "CARD",      "NAMED"};

bool is_keyword(const std::string& s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

enum Section {
  kProperty,
  kObjectTypes,
  kValueTypes,
  kRelationshipTypes,
  kConstraints,
  kFrom,
  kTo,
  kDerivationRules,
  kUpdateRules,
  kEnd,
  kNone,
};

std::pair<Section, std::size_t> header_at(const std::vector<Token>& toks, std::size_t i) {
  auto word = [&](std::size_t k, std::string_view w) {
    return i + k < toks.size() && toks[i + k].kind == Tok::Ident && toks[i + k].text == w;
  };
  auto punct = [&](std::size_t k, std::string_view p) {
    return i + k < toks.size() && toks[i + k].kind == Tok::Punct && toks[i + k].text == p;
  };
  if (word(0, "Property") && punct(1, ":")) return {kProperty, 2};
  if (word(0, "Object") && word(1, "types") && punct(2, ":")) return {kObjectTypes, 3};
  if (word(0, "Value") && word(1, "types") && punct(2, ":")) return {kValueTypes, 3};
  if (word(0, "Relationship") && word(1, "types") && punct(2, ":")) return {kRelationshipTypes, 3};
  if (word(0, "Constraints") && punct(1, ":")) return {kConstraints, 2};
  if (word(0, "From") && punct(1, ":")) return {kFrom, 2};
  if (word(0, "To") && punct(1, ":")) return {kTo, 2};
  if (word(0, "Derivation") && word(1, "rules") && punct(2, ":")) return {kDerivationRules, 3};
  if (word(0, "Update") && word(1, "rules") && punct(2, ":")) return {kUpdateRules, 3};
  if (word(0, "End") && word(1, "Transformation") && word(2, "schema")) {
    return {kEnd, punct(3, ".") ? 4 : 3};
  }
  return {kNone, 0};
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
  throw SyntaxError(t.line, t.column, msg);
}

bool is_open(const Token& t) {
  return t.kind == Tok::Punct &&
         (t.text == "(" || t.text == "[" || t.text == "{" || t.text == "<");
}
bool is_close(const Token& t) {
  return t.kind == Tok::Punct &&
         (t.text == ")" || t.text == "]" || t.text == "}" || t.text == ">");
}

// Index of the bracket closing the one at `open`.
std::size_t matching(const std::vector<Token>& toks, std::size_t open, std::size_t end) {
  int depth = 0;
  for (std::size_t i = open; i < end; ++i) {
    if (is_open(toks[i])) ++depth;
    if (is_close(toks[i]) && --depth == 0) return i;
  }
  fail_at(toks[open], "unbalanced '" + toks[open].text + "'");
}

using Range = std::pair<std::size_t, std::size_t>;

std::vector<Range> split_items(const std::vector<Token>& toks, Range r, bool commas) {
  std::vector<Range> out;
  int depth = 0;
  std::size_t start = r.first;
  for (std::size_t i = r.first; i < r.second; ++i) {
    const Token& t = toks[i];
    if (is_open(t)) ++depth;
    if (is_close(t)) --depth;
    bool sep = depth == 0 && t.kind == Tok::Punct && (t.text == ";" || (commas && t.text == ","));
    if (sep) {
      if (i > start) out.emplace_back(start, i);
      start = i + 1;
    }
  }
  if (r.second > start) out.emplace_back(start, r.second);
  return out;
}

bool group_at(const std::vector<Token>& toks, std::size_t i, std::size_t end,
              std::size_t* close) {
  if (toks[i].kind != Tok::Punct || (toks[i].text != "(" && toks[i].text != "<")) return false;
  std::size_t j = matching(toks, i, end);
  if (j + 2 < end + 1 && j + 2 <= end && j + 2 < toks.size() && toks[j + 1].kind == Tok::Punct &&
      toks[j + 1].text == "!" && j + 2 < end && toks[j + 2].kind == Tok::Ident) {
    *close = j;
    return true;
  }
  return false;
}

class TemplateParser {
 public:
  TemplateParser(const std::vector<Token>& toks, const TransformationScheme& t,
                 const std::set<std::string>& constraint_ids)
      : toks_(toks), scheme_(t), ids_(constraint_ids) {
    auto vars = t.arity_vars();
    vars_.insert(vars.begin(), vars.end());
  }

  Template parse(Range r, const std::set<std::string>& bound) const {
    Template out;
    std::size_t i = r.first;
    while (i < r.second) {
      const Token& tok = toks_[i];
      std::size_t close = 0;
      bool union_of = tok.kind == Tok::Ident && tok.text == "UNION" && i + 2 < r.second &&
                      toks_[i + 1].kind == Tok::Ident && toks_[i + 1].text == "OF";
      if (union_of) {
        if (!scheme_.parameterized || !group_at(toks_, i + 2, r.second, &close) ||
            toks_[i + 2].text != "(") {
          fail_at(tok, "UNION OF needs a repeated group '( ... )!n'");
        }
        TemplateItem g = group(i + 2, close, bound);
        g.union_of = true;
        out.push_back(std::move(g));
        i = close + 3;
        continue;
      }
      if (scheme_.parameterized && group_at(toks_, i, r.second, &close)) {
        out.push_back(group(i, close, bound));
        i = close + 3;
        continue;
      }
      TemplateItem item;
      item.token = tok;
      if (scheme_.parameterized && tok.kind == Tok::Ident) {
        auto sym = scheme_.symbols.find(tok.text);
        if (sym != scheme_.symbols.end()) {
          std::vector<std::string> free;
          for (const auto& d : sym->second) {
            if (!bound.count(d)) free.push_back(d);
          }
          bool repeat = i + 2 < r.second + 1 && i + 2 < toks_.size() && i + 1 < r.second &&
                        toks_[i + 1].kind == Tok::Punct && toks_[i + 1].text == "!";
          if (repeat) {
            if (i + 2 >= r.second || toks_[i + 2].kind != Tok::Ident) {
              fail_at(toks_[i + 1], "expected an arity variable after '!'");
            }
            const std::string& a = toks_[i + 2].text;
            if (free.size() != 1 || free[0] != a) {
              throw Error(ErrorKind::ArityNotation,
                          where(tok) + tok.text + "!" + a + " does not match the declared shape of " +
                              tok.text);
            }
            item.kind = TemplateItem::Kind::Repeat;
            item.arity = a;
            out.push_back(std::move(item));
            i += 3;
            continue;
          }
          if (!free.empty()) {
            throw Error(ErrorKind::ArityNotation,
                        where(tok) + tok.text + " is used without its arity " + free[0]);
          }
          item.kind = TemplateItem::Kind::Symbol;
        } else if (!is_keyword(tok.text) && !ids_.count(tok.text)) {
          throw Error(ErrorKind::UnknownSymbol, where(tok) + "unknown symbol '" + tok.text + "'");
        }
      }
      out.push_back(std::move(item));
      ++i;
    }
    return out;
  }

 private:
  static std::string where(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
  }

  TemplateItem group(std::size_t open, std::size_t close, const std::set<std::string>& bound) const {
    const Token& var = toks_[close + 2];
    if (!vars_.count(var.text)) {
      throw Error(ErrorKind::ArityNotation, where(var) + "'" + var.text + "' is not an arity variable");
    }
    if (bound.count(var.text)) {
      throw Error(ErrorKind::ArityNotation,
                  where(var) + "arity " + var.text + " is already being repeated");
    }
    auto inner = bound;
    inner.insert(var.text);
    TemplateItem g;
    g.kind = TemplateItem::Kind::Group;
    g.token = toks_[open];
    g.arity = var.text;
    g.angle = toks_[open].text == "<";
    g.body = parse({open + 1, close}, inner);
    return g;
  }

  const std::vector<Token>& toks_;
  const TransformationScheme& scheme_;
  const std::set<std::string>& ids_;
  std::set<std::string> vars_;
};

// Pieces are joined by single spaces except around brackets and a few
// tight operators.
bool need_space(const std::string& prev, const std::string& next) {
  if (prev.empty() || next.empty()) return false;
  if (std::string_view(",;)]}>:!").find(next[0]) != std::string_view::npos) return false;
  if (next == "..") return false;
  if (prev == ".." || prev == "!") return false;
  if (std::string_view("([{<:").find(prev.back()) != std::string_view::npos && prev != "->") {
    return false;
  }
  if (next[0] == '(' && prev == "Val") return false;
  if (next[0] == '[' && (prev == "PROJ" || prev == "SEL")) return false;
  return true;
}

std::string join_pieces(const std::vector<std::string>& pieces) {
  std::string out;
  std::string prev;
  for (const auto& p : pieces) {
    if (need_space(prev, p)) out += ' ';
    out += p;
    prev = p;
  }
  return out;
}

}  // namespace

std::string template_text(const Template& t);

std::string template_text(const Template& t) {
  std::vector<std::string> pieces;
  for (const auto& item : t) {
    switch (item.kind) {
      case TemplateItem::Kind::Token:
      case TemplateItem::Kind::Symbol:
        pieces.push_back(text::spell(item.token));
        break;
      case TemplateItem::Kind::Repeat:
        pieces.push_back(item.token.text + "!" + item.arity);
        break;
      case TemplateItem::Kind::Group: {
        std::string g = item.angle ? "<" + template_text(item.body) + ">"
                                   : "(" + template_text(item.body) + ")";
        g += "!" + item.arity;
        if (item.union_of) {
          pieces.push_back("UNION");
          pieces.push_back("OF");
        }
        pieces.push_back(g);
        break;
      }
    }
  }
  return join_pieces(pieces);
}

std::vector<std::string> TransformationScheme::arity_vars() const {
  std::vector<std::string> out;
  for (const auto& p : params) {
    for (const auto& d : p.dims) {
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
  }
  return out;
}

TransformationScheme parse_scheme(std::string_view source) {
  std::vector<Token> toks = text::tokenize(source);
  TokenStream ts(toks);
  TransformationScheme t;
  if (ts.at_end()) ts.fail("expected 'Transformation schema'");
  ts.expect_word("Transformation");
  ts.expect_word("schema");
  t.name = ts.expect_ident("scheme name");
  if (ts.accept_punct("(")) {
    t.parameterized = true;
    do {
      ParamDecl p;
      if (ts.accept_punct("(")) {
        p.name = ts.expect_ident("parameter");
        ts.expect_punct("!");
        p.dims.push_back(ts.expect_ident("arity variable"));
        ts.expect_punct(")");
        ts.expect_punct("!");
        p.dims.push_back(ts.expect_ident("arity variable"));
        if (p.dims[0] == p.dims[1]) {
          throw Error(ErrorKind::ArityNotation, p.name + " repeats arity " + p.dims[0] + " twice");
        }
      } else {
        p.name = ts.expect_ident("parameter");
        if (ts.accept_punct("!")) p.dims.push_back(ts.expect_ident("arity variable"));
      }
      if (t.symbols.count(p.name)) {
        throw Error(ErrorKind::DuplicateName, "parameter " + p.name + " declared twice");
      }
      t.symbols.emplace(p.name, p.dims);
      t.params.push_back(std::move(p));
    } while (ts.accept_punct(","));
    ts.expect_punct(")");
  }
  ts.accept_punct(";");

  std::map<Section, Range> ranges;
  std::size_t i = ts.position();
  Section current = kNone;
  std::size_t start = i;
  int last = -1;
  bool ended = false;
  while (i < toks.size() && toks[i].kind != Tok::End) {
    auto [section, len] = header_at(toks, i);
    if (section == kNone) {
      if (current == kNone) fail_at(toks[i], "expected a section header");
      ++i;
      continue;
    }
    if (static_cast<int>(section) <= last) fail_at(toks[i], "section out of order");
    if (current != kNone) ranges[current] = {start, i};
    last = static_cast<int>(section);
    current = section;
    i += len;
    start = i;
    if (section == kEnd) {
      ended = true;
      break;
    }
  }
  if (!ended) {
    const Token& at = toks[std::min(i, toks.size() - 1)];
    fail_at(at, "expected 'End Transformation schema'");
  }
  if (toks[i].kind != Tok::End) fail_at(toks[i], "unexpected trailing input");

  if (auto it = ranges.find(kProperty); it != ranges.end()) {
    auto items = split_items(toks, it->second, true);
    if (items.size() != 1 || items[0].second - items[0].first != 1 ||
        toks[items[0].first].kind != Tok::Ident) {
      fail_at(toks[it->second.first], "Property takes one word");
    }
    const auto& word = toks[items[0].first].text;
    if (word != "equivalence" && word != "strengthening") {
      fail_at(toks[items[0].first], "Property is 'equivalence' or 'strengthening'");
    }
    t.property = word;
  }

  auto items_of = [&](Section s, bool commas) {
    auto it = ranges.find(s);
    return it == ranges.end() ? std::vector<Range>{} : split_items(toks, it->second, commas);
  };

  // Relationship names introduced by the scheme become symbols too.
  auto rel_items = items_of(kRelationshipTypes, true);
  if (t.parameterized) {
    for (const auto& r : rel_items) {
      std::size_t close = 0;
      std::string name;
      std::vector<std::string> dims;
      std::size_t k = r.first;
      while (group_at(toks, k, r.second, &close)) {
        dims.insert(dims.begin(), toks[close + 2].text);
        ++k;
      }
      if (toks[k].kind != Tok::Ident) fail_at(toks[k], "expected a relationship name");
      name = toks[k].text;
      auto existing = t.symbols.find(name);
      if (existing != t.symbols.end()) {
        if (std::find_if(t.params.begin(), t.params.end(), [&](const ParamDecl& p) {
              return p.name == name;
            }) != t.params.end()) {
          continue;  // a parameter naming the relationship directly
        }
        throw Error(ErrorKind::DuplicateName, "relationship " + name + " introduced twice");
      }
      t.symbols.emplace(name, dims);
    }
  }

  std::set<std::string> ids;
  std::vector<std::pair<std::string, Range>> constraint_items;
  for (const auto& r : items_of(kConstraints, false)) {
    if (r.second - r.first < 3 || toks[r.first].kind != Tok::Ident ||
        toks[r.first + 1].text != ":") {
      fail_at(toks[r.first], "expected '<id>: <constraint>'");
    }
    const auto& id = toks[r.first].text;
    if (!ids.insert(id).second) throw Error(ErrorKind::DuplicateName, "constraint " + id);
    if (t.symbols.count(id)) throw Error(ErrorKind::DuplicateName, "constraint id " + id);
    constraint_items.emplace_back(id, Range{r.first + 2, r.second});
  }

  TemplateParser parser(toks, t, ids);
  auto parse_all = [&](const std::vector<Range>& items) {
    std::vector<Template> out;
    for (const auto& r : items) out.push_back(parser.parse(r, {}));
    return out;
  };
  t.object_types = parse_all(items_of(kObjectTypes, true));
  t.value_types = parse_all(items_of(kValueTypes, true));
  t.relationship_types = parse_all(rel_items);
  for (const auto& [id, r] : constraint_items) t.constraints.push_back({id, parser.parse(r, {})});
  t.from = parse_all(items_of(kFrom, true));
  t.to = parse_all(items_of(kTo, true));
  t.derivation_rules = parse_all(items_of(kDerivationRules, true));
  t.update_rules = parse_all(items_of(kUpdateRules, true));
  return t;
}

std::string serialize_scheme(const TransformationScheme& t) {
  std::string out = "Transformation schema " + t.name;
  if (t.parameterized) {
    out += " (";
    for (std::size_t i = 0; i < t.params.size(); ++i) {
      const auto& p = t.params[i];
      out += i ? ", " : "";
      if (p.dims.size() == 2) {
        out += "(" + p.name + "!" + p.dims[0] + ")!" + p.dims[1];
      } else {
        out += p.name + (p.dims.empty() ? "" : "!" + p.dims[0]);
      }
    }
    out += ")";
  }
  out += ";\n";
  if (t.property) out += "  Property: " + *t.property + ";\n";
  auto inline_list = [&](const std::string& header, const std::vector<Template>& items) {
    if (items.empty()) return;
    out += "  " + header + ":\n    ";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + template_text(items[i]);
    out += ";\n";
  };
  auto block = [&](const std::string& header, const std::vector<Template>& items,
                   const std::string& sep) {
    if (items.empty()) return;
    out += "  " + header + ":\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += "    " + template_text(items[i]) + (i + 1 < items.size() ? sep : ";") + "\n";
    }
  };
  inline_list("Object types", t.object_types);
  inline_list("Value types", t.value_types);
  block("Relationship types", t.relationship_types, ",");
  if (!t.constraints.empty()) {
    out += "  Constraints:\n";
    for (const auto& c : t.constraints) out += "    " + c.id + ": " + template_text(c.body) + ";\n";
  }
  inline_list("From", t.from);
  inline_list("To", t.to);
  block("Derivation rules", t.derivation_rules, ";");
  block("Update rules", t.update_rules, ";");
  out += "End Transformation schema.\n";
  return out;
}

namespace {

ParValue parse_par_value(TokenStream& ts) {
  ParValue v;
  if (ts.accept_punct("[")) {
    std::vector<ParValue> items;
    if (!ts.is_punct("]")) {
      do {
        items.push_back(parse_par_value(ts));
      } while (ts.accept_punct(","));
    }
    ts.expect_punct("]");
    v.value = std::move(items);
    return v;
  }
  const Token& t = ts.peek();
  if (t.kind != Tok::Ident && t.kind != Tok::Int && t.kind != Tok::String) {
    ts.fail("expected a name, a literal or '['");
  }
  v.value = ts.next();
  return v;
}

std::size_t leaves(const ParValue& v) {
  if (!v.is_list()) return 1;
  std::size_t n = 0;
  for (const auto& x : v.list()) n += leaves(x);
  return n;
}

}  // namespace

ParList parse_parlist(std::string_view source) {
  TokenStream ts(text::tokenize(source));
  ParList x;
  bool wrapped = false;
  if (ts.peek().kind == Tok::Ident && ts.is_punct("(", 1)) {
    x.scheme = ts.next().text;
    ts.next();
    wrapped = true;
  }
  bool closing = wrapped ? ts.is_punct(")") : ts.at_end();
  if (!closing) {
    do {
      x.items.push_back(parse_par_value(ts));
    } while (ts.accept_punct(","));
  }
  if (wrapped) ts.expect_punct(")");
  ts.accept_punct(";");
  ts.expect_end();
  return x;
}

std::size_t leaf_count(const ParList& x) {
  std::size_t n = 0;
  for (const auto& v : x.items) n += leaves(v);
  return n;
}

}  // namespace ormt
