// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_LEXER_HPP_
#define ORMT_LEXER_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ormt::text {

enum class Tok { Ident, Int, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier name, punctuation, or unquoted string body
  std::int64_t value = 0;
  int line = 1;
  int column = 1;

  // Positions are ignored: two tokens are equal when they spell the same thing.
  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text && a.value == b.value;
  }
};

// Identifiers may contain '-' and '.' between identifier characters, so
// "MedalKind.code-1" is one token while "a->b" and "schema." are not.
// A '#' outside a quoted string starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

// Spelling of a token as it would appear in source text.
std::string spell(const Token& token);
std::string spell(const std::vector<Token>& tokens);

Token ident_token(std::string name);
Token punct_token(std::string punct);
Token int_token(std::int64_t value);
Token string_token(std::string body);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Tok::End; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const;
  bool is_word(std::string_view w, std::size_t ahead = 0) const;
  bool accept_punct(std::string_view p);
  bool accept_word(std::string_view w);
  void expect_punct(std::string_view p);
  void expect_word(std::string_view w);
  std::string expect_ident(std::string_view what);
  void expect_end();

  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace ormt::text

#endif  // ORMT_LEXER_HPP_
