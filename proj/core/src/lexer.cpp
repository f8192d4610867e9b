// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ormt/lexer.hpp"

#include <cctype>

#include "ormt/error.hpp"

namespace ormt::text {
namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto at = [&](std::size_t k) { return i + k < src.size() ? src[i + k] : '\0'; };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size()) {
        char d = src[j];
        if (ident_char(d)) {
          ++j;
        } else if ((d == '-' || d == '.') && j + 1 < src.size() &&
                   ident_char(src[j + 1])) {
          ++j;
        } else {
          break;
        }
      }
      tok.kind = Tok::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (is_digit(c) || (c == '-' && is_digit(at(1)))) {
      std::size_t j = i + 1;
      while (j < src.size() && is_digit(src[j])) ++j;
      tok.kind = Tok::Int;
      tok.text = std::string(src.substr(i, j - i));
      try {
        tok.value = std::stoll(tok.text);
      } catch (const std::out_of_range&) {
        throw SyntaxError(line, col, "integer literal out of range");
      }
      advance(j - i);
    } else if (c == '\'') {
      std::string body;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < src.size()) {
        if (src[j] == '\'') {
          if (j + 1 < src.size() && src[j + 1] == '\'') {
            body += '\'';
            j += 2;
            continue;
          }
          closed = true;
          break;
        }
        if (src[j] == '\n') break;
        body += src[j++];
      }
      if (!closed) throw SyntaxError(line, col, "unterminated string literal");
      tok.kind = Tok::String;
      tok.text = body;
      advance(j + 1 - i);
    } else if (c == '.' && at(1) == '.') {
      tok.kind = Tok::Punct;
      tok.text = "..";
      advance(2);
    } else if (c == '-' && at(1) == '>') {
      tok.kind = Tok::Punct;
      tok.text = "->";
      advance(2);
    } else if (static_cast<unsigned char>(c) == 0xE2 && at(1) == '\x86' &&
               at(2) == '\x92') {
      tok.kind = Tok::Punct;  // U+2192 RIGHTWARDS ARROW
      tok.text = "->";
      i += 3;
      ++col;
    } else if (std::string_view("()[]{}<>,;:=!.").find(c) !=
               std::string_view::npos) {
      tok.kind = Tok::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw SyntaxError(line, col,
                        std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

std::string spell(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
    case Tok::Punct:
    case Tok::Int:
      return t.text;
    case Tok::String: {
      std::string s = "'";
      for (char c : t.text) {
        s += c;
        if (c == '\'') s += '\'';
      }
      return s + "'";
    }
    case Tok::End:
      return "";
  }
  return "";
}

std::string spell(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (t.kind == Tok::End) continue;
    if (!out.empty()) out += ' ';
    out += spell(t);
  }
  return out;
}

Token ident_token(std::string name) {
  Token t;
  t.kind = Tok::Ident;
  t.text = std::move(name);
  return t;
}

Token punct_token(std::string punct) {
  Token t;
  t.kind = Tok::Punct;
  t.text = std::move(punct);
  return t;
}

Token int_token(std::int64_t value) {
  Token t;
  t.kind = Tok::Int;
  t.value = value;
  t.text = std::to_string(value);
  return t;
}

Token string_token(std::string body) {
  Token t;
  t.kind = Tok::String;
  t.text = std::move(body);
  return t;
}

TokenStream::TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Tok::End) {
    Token end;
    if (!tokens_.empty()) {
      end.line = tokens_.back().line;
      end.column = tokens_.back().column;
    }
    tokens_.push_back(end);
  }
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::is_punct(std::string_view p, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Tok::Punct && t.text == p;
}

bool TokenStream::is_word(std::string_view w, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Tok::Ident && t.text == w;
}

bool TokenStream::accept_punct(std::string_view p) {
  if (!is_punct(p)) return false;
  next();
  return true;
}

bool TokenStream::accept_word(std::string_view w) {
  if (!is_word(w)) return false;
  next();
  return true;
}

void TokenStream::expect_punct(std::string_view p) {
  if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
}

void TokenStream::expect_word(std::string_view w) {
  if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
}

std::string TokenStream::expect_ident(std::string_view what) {
  if (peek().kind != Tok::Ident) fail("expected " + std::string(what));
  return next().text;
}

void TokenStream::expect_end() {
  if (!at_end()) fail("unexpected trailing input");
}

void TokenStream::fail(const std::string& message) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "'" + spell(t) + "'";
  throw SyntaxError(t.line, t.column, message + ", found " + found);
}

}  // namespace ormt::text
