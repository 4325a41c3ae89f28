// Copyright 2026 The namecheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NAMECHECK_JAVA_LEXER_HPP
#define NAMECHECK_JAVA_LEXER_HPP

#include <array>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "namecheck/error.hpp"

namespace namecheck::java {

enum class TokenType { Identifier, Number, String, Char, Punct, End };

struct Token {
  TokenType type = TokenType::End;
  std::string_view text;
  std::size_t offset = 0;
  std::size_t line = 0;

  bool is(std::string_view s) const {
    return (type == TokenType::Punct || type == TokenType::Identifier) &&
           text == s;
  }
  bool is_identifier() const { return type == TokenType::Identifier; }
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
inline bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || std::isdigit(c);
}

// Longest first.
inline constexpr std::array<std::string_view, 38> kPunctuators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&",
    "||",   "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",  "(",   ")",  "{",  "}",  "[",  "]",
    ";",    ",",   ".",   "@",   "=",   "?",  ":",  "~"};

}  // namespace detail

/// Tokenizes Java source. Comments and whitespace are dropped. `>>` is never
/// produced as one token so that nested generics close cleanly; the expression
/// parser re-joins adjacent `>` tokens when it needs a shift operator.
/// Views in the returned tokens point into `source`, which must outlive them.
inline std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = source.size();

  auto push = [&](TokenType type, std::size_t begin, std::size_t end,
                  std::size_t begin_line) {
    tokens.push_back(
        Token{type, source.substr(begin, end - begin), begin, begin_line});
  };

  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(source[i]);
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '*') {
      const std::size_t close = source.find("*/", i + 2);
      const std::size_t stop = close == std::string_view::npos ? n : close + 2;
      for (; i < stop; ++i) {
        if (source[i] == '\n') ++line;
      }
      continue;
    }
    const std::size_t begin = i;
    const std::size_t begin_line = line;
    if (detail::is_ident_start(c)) {
      while (i < n && detail::is_ident_part(static_cast<unsigned char>(source[i])))
        ++i;
      push(TokenType::Identifier, begin, i, begin_line);
      continue;
    }
    if (std::isdigit(c) ||
        (c == '.' && i + 1 < n &&
         std::isdigit(static_cast<unsigned char>(source[i + 1])))) {
      while (i < n) {
        const unsigned char d = static_cast<unsigned char>(source[i]);
        if (std::isalnum(d) || d == '_' || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') && i > begin &&
                   (source[i - 1] == 'e' || source[i - 1] == 'E' ||
                    source[i - 1] == 'p' || source[i - 1] == 'P') &&
                   !(source[begin] == '0' && begin + 1 < n &&
                     (source[begin + 1] == 'x' || source[begin + 1] == 'X') &&
                     (source[i - 1] == 'e' || source[i - 1] == 'E'))) {
          ++i;
        } else {
          break;
        }
      }
      push(TokenType::Number, begin, i, begin_line);
      continue;
    }
    if (c == '"') {
      if (source.substr(i, 3) == "\"\"\"") {
        const std::size_t close = source.find("\"\"\"", i + 3);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated text block at line " +
                           std::to_string(begin_line));
        }
        for (std::size_t k = i; k < close + 3; ++k) {
          if (source[k] == '\n') ++line;
        }
        i = close + 3;
        push(TokenType::String, begin, i, begin_line);
        continue;
      }
      ++i;
      while (i < n && source[i] != '"') {
        if (source[i] == '\\') ++i;
        if (i < n && source[i] == '\n') {
          throw ParseError("unterminated string literal at line " +
                           std::to_string(begin_line));
        }
        ++i;
      }
      if (i >= n) {
        throw ParseError("unterminated string literal at line " +
                         std::to_string(begin_line));
      }
      ++i;
      push(TokenType::String, begin, i, begin_line);
      continue;
    }
    if (c == '\'') {
      ++i;
      while (i < n && source[i] != '\'') {
        if (source[i] == '\\') ++i;
        ++i;
      }
      if (i >= n) {
        throw ParseError("unterminated character literal at line " +
                         std::to_string(begin_line));
      }
      ++i;
      push(TokenType::Char, begin, i, begin_line);
      continue;
    }
    bool matched = false;
    for (std::string_view p : detail::kPunctuators) {
      if (source.substr(i, p.size()) == p) {
        // Keep '>' single so generics like List<List<T>> close properly.
        if (p.front() == '>' && p.size() > 1 && p != ">=") continue;
        i += p.size();
        push(TokenType::Punct, begin, i, begin_line);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Remaining single-character operators: + - * / % & | ^ ! < >
    ++i;
    push(TokenType::Punct, begin, i, begin_line);
  }
  tokens.push_back(Token{TokenType::End, std::string_view{}, n, line});
  return tokens;
}

}  // namespace namecheck::java

#endif  // NAMECHECK_JAVA_LEXER_HPP
