// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/bounds.hpp"

#include <algorithm>

#include "ormt/error.hpp"
#include "ormt/lexer.hpp"

namespace ormt {

DomainBounds parse_bounds(std::string_view source) {
  text::TokenStream ts(text::tokenize(source));
  DomainBounds b;
  ts.expect_word("BOUNDS");
  auto integer = [&](std::string_view what) {
    const auto& t = ts.peek();
    if (t.kind != text::Tok::Int || t.value < 0) ts.fail("expected a non-negative " + std::string(what));
    return ts.next().value;
  };
  while (true) {
    while (ts.accept_punct(";")) {
    }
    if (ts.accept_word("END")) break;
    if (ts.accept_word("DOMAIN")) {
      auto name = ts.expect_ident("domain name");
      ts.expect_punct("=");
      ts.expect_punct("{");
      std::vector<Literal> values;
      if (!ts.is_punct("}")) {
        do {
          const auto& t = ts.peek();
          if (t.kind == text::Tok::Int) {
            values.emplace_back(ts.next().value);
          } else if (t.kind == text::Tok::String) {
            values.emplace_back(ts.next().text);
          } else {
            ts.fail("expected a value literal");
          }
        } while (ts.accept_punct(","));
      }
      ts.expect_punct("}");
      auto sorted = values;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::DuplicateName, "domain " + name + " lists a value twice");
      }
      if (!b.domains.emplace(name, std::move(values)).second) {
        throw Error(ErrorKind::DuplicateName, "domain " + name + " bounded twice");
      }
    } else if (ts.accept_word("POOL")) {
      auto type = ts.expect_ident("object type");
      ts.expect_punct("=");
      auto k = integer("pool size");
      if (!b.pools.emplace(type, static_cast<std::size_t>(k)).second) {
        throw Error(ErrorKind::DuplicateName, "pool for " + type + " given twice");
      }
    } else if (ts.accept_word("CAP")) {
      ts.expect_punct("=");
      b.cap = static_cast<std::uint64_t>(integer("cap"));
    } else {
      ts.fail("expected DOMAIN, POOL, CAP or END");
    }
  }
  ts.expect_end();
  return b;
}

std::string bounds_text(const DomainBounds& b) {
  std::string out = "BOUNDS ;\n";
  for (const auto& [name, values] : b.domains) {
    out += "  DOMAIN " + name + " = {";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += (i ? ", " : " ") + literal_text(values[i]);
    }
    out += values.empty() ? "} ;\n" : " } ;\n";
  }
  for (const auto& [t, k] : b.pools) out += "  POOL " + t + " = " + std::to_string(k) + " ;\n";
  out += "  CAP = " + std::to_string(b.cap) + " ;\nEND\n";
  return out;
}

}  // namespace ormt
