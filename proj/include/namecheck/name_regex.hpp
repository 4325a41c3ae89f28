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

// Regular-expression sub-patterns for test names. Expressions use
// ECMAScript syntax plus named groups `(?<action>...)`, `(?<predicate>...)`
// and `(?<scenario>...)`, which are rewritten to plain groups before
// compiling with std::regex.

#ifndef NAMECHECK_NAME_REGEX_HPP
#define NAMECHECK_NAME_REGEX_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "namecheck/default_data.hpp"
#include "namecheck/error.hpp"
#include "namecheck/extraction.hpp"

namespace namecheck {

struct TranslatedRegex {
  std::string expression;                 // without group names
  std::map<std::string, std::size_t> groups;  // name -> capture index
};

/// Rewrites `(?<name>` to `(` and records the capture index of every named
/// group. Throws ConfigError on malformed group syntax.
inline TranslatedRegex translate_named_groups(std::string_view pattern) {
  TranslatedRegex out;
  std::size_t capture = 0;
  bool in_class = false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char c = pattern[i];
    if (c == '\\') {
      out.expression.push_back(c);
      if (i + 1 < pattern.size()) out.expression.push_back(pattern[++i]);
      continue;
    }
    if (in_class) {
      if (c == ']') in_class = false;
      out.expression.push_back(c);
      continue;
    }
    if (c == '[') {
      in_class = true;
      out.expression.push_back(c);
      if (i + 1 < pattern.size() && pattern[i + 1] == '^') out.expression.push_back(pattern[++i]);
      if (i + 1 < pattern.size() && pattern[i + 1] == ']') out.expression.push_back(pattern[++i]);
      continue;
    }
    if (c == '(') {
      if (i + 1 < pattern.size() && pattern[i + 1] == '?') {
        if (i + 2 < pattern.size() && pattern[i + 2] == '<' && i + 3 < pattern.size() &&
            pattern[i + 3] != '=' && pattern[i + 3] != '!') {
          const auto close = pattern.find('>', i + 3);
          if (close == std::string_view::npos) {
            throw ConfigError("unterminated group name in '" + std::string(pattern) + "'");
          }
          std::string name(pattern.substr(i + 3, close - i - 3));
          ++capture;
          if (!out.groups.emplace(name, capture).second) {
            throw ConfigError("duplicate group '" + name + "'");
          }
          out.expression.push_back('(');
          i = close;
          continue;
        }
      } else {
        ++capture;
      }
    }
    out.expression.push_back(c);
  }
  return out;
}

/// One compiled name sub-pattern.
class RegexSubPattern {
 public:
  /// Throws ConfigError if the expression does not compile, has no named
  /// group, or names a group other than action, predicate or scenario.
  RegexSubPattern(std::string id, std::string expression)
      : id_(std::move(id)), expression_(std::move(expression)) {
    TranslatedRegex t = translate_named_groups(expression_);
    if (t.groups.empty()) {
      throw ConfigError("sub-pattern '" + id_ + "' has no named capture group");
    }
    for (const auto& [name, index] : t.groups) {
      if (name == "action") {
        action_ = index;
      } else if (name == "predicate") {
        predicate_ = index;
      } else if (name == "scenario") {
        scenario_ = index;
      } else {
        throw ConfigError("sub-pattern '" + id_ + "' has unknown group '" + name + "'");
      }
    }
    try {
      regex_ = std::make_shared<const std::regex>(t.expression, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw ConfigError("sub-pattern '" + id_ + "' does not compile: " + e.what());
    }
  }

  const std::string& id() const { return id_; }
  const std::string& expression() const { return expression_; }

  /// Captured components if the whole name matches.
  std::optional<Extraction> match(const std::string& name) const {
    std::smatch m;
    if (!std::regex_match(name, m, *regex_)) return std::nullopt;
    Extraction e;
    e.source = ExtractionSource::Name;
    auto take = [&](std::optional<std::size_t> idx) -> std::string {
      if (!idx || !m[*idx].matched) return {};
      std::string s = m[*idx].str();
      const auto b = s.find_first_not_of('_');
      if (b == std::string::npos) return {};
      s = s.substr(b, s.find_last_not_of('_') - b + 1);
      if (s == "test" || s == "Test") return {};  // never extractable
      return s;
    };
    e.action = take(action_);
    e.predicate = take(predicate_);
    e.scenario = take(scenario_);
    return e;
  }

 private:
  std::string id_;
  std::string expression_;
  std::optional<std::size_t> action_;
  std::optional<std::size_t> predicate_;
  std::optional<std::size_t> scenario_;
  std::shared_ptr<const std::regex> regex_;
};

/// Parses `id<TAB>expression` lines; blank lines and '#' comments skipped.
inline std::vector<RegexSubPattern> parse_regex_file(std::string_view text) {
  std::vector<RegexSubPattern> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ConfigError("regex file line " + std::to_string(line_no) +
                        ": expected 'id<TAB>expression'");
    }
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

inline const std::vector<RegexSubPattern>& default_name_regexes() {
  static const std::vector<RegexSubPattern> kDefault = parse_regex_file(kDefaultNameRegexes);
  return kDefault;
}

/// 64-bit FNV-1a of the text, as 16 lowercase hex digits.
inline std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace namecheck

#endif  // NAMECHECK_NAME_REGEX_HPP
