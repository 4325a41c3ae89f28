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

#ifndef NAMECHECK_IDENTIFIER_SPLITTER_HPP
#define NAMECHECK_IDENTIFIER_SPLITTER_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace namecheck {

/// Splits an identifier into words at underscores, lower-to-upper case
/// changes and letter/digit changes. A run of capitals stays together until
/// a lowercase letter follows: "testGetSSLProtocol" becomes
/// ["test", "Get", "SSL", "Protocol"].
inline std::vector<std::string> split_identifier(std::string_view name) {
  enum class Cls { Upper, Lower, Digit, Sep };
  auto cls = [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isupper(c)) return Cls::Upper;
    if (std::islower(c)) return Cls::Lower;
    if (std::isdigit(c)) return Cls::Digit;
    if (c >= 0x80) return Cls::Lower;
    return Cls::Sep;
  };
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const Cls c = cls(name[i]);
    if (c == Cls::Sep) {
      flush();
      continue;
    }
    if (!cur.empty()) {
      const Cls prev = cls(cur.back());
      const bool next_lower = i + 1 < name.size() && cls(name[i + 1]) == Cls::Lower;
      const bool boundary =
          (prev == Cls::Lower && c == Cls::Upper) ||
          ((prev == Cls::Digit) != (c == Cls::Digit)) ||
          (prev == Cls::Upper && c == Cls::Upper && next_lower);
      if (boundary) flush();
    }
    cur.push_back(name[i]);
  }
  flush();
  return words;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool is_numeric_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace namecheck

#endif  // NAMECHECK_IDENTIFIER_SPLITTER_HPP
