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

// Analysis configuration and its JSON file format (docs/configuration.md).

#ifndef NAMECHECK_CONFIG_HPP
#define NAMECHECK_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "namecheck/comparison.hpp"
#include "namecheck/error.hpp"

namespace namecheck {

struct AnalysisConfig {
  std::optional<std::filesystem::path> regex_file;
  std::optional<std::filesystem::path> lexicon_file;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  /// Outcome filter for listed tests. Counts and statistics always cover
  /// every test.
  std::optional<Outcome> only;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses a configuration document. Relative paths resolve against `base`.
/// Throws ConfigError.
inline AnalysisConfig parse_config(const std::string& text,
                                   const std::filesystem::path& base = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  AnalysisConfig cfg;
  auto path_of = [&](const nlohmann::json& v, const char* key) {
    if (!v.is_string()) throw ConfigError(std::string("'") + key + "' must be a string");
    std::filesystem::path p = v.get<std::string>();
    return p.is_relative() ? base / p : p;
  };
  auto globs_of = [&](const nlohmann::json& v, const char* key) {
    std::vector<std::string> out;
    if (!v.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
    for (const auto& g : v) {
      if (!g.is_string()) throw ConfigError(std::string("'") + key + "' entries must be strings");
      out.push_back(g.get<std::string>());
    }
    return out;
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "regexes") {
      cfg.regex_file = path_of(value, "regexes");
    } else if (key == "lexicon") {
      cfg.lexicon_file = path_of(value, "lexicon");
    } else if (key == "include") {
      cfg.include = globs_of(value, "include");
    } else if (key == "exclude") {
      cfg.exclude = globs_of(value, "exclude");
    } else if (key == "only") {
      const auto o = value.is_string() ? outcome_from_string(value.get<std::string>())
                                       : std::nullopt;
      if (!o) {
        throw ConfigError("'only' must be one of descriptive, non-descriptive, unknown");
      }
      cfg.only = o;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

inline AnalysisConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  return parse_config(text, path.parent_path());
}

}  // namespace namecheck

#endif  // NAMECHECK_CONFIG_HPP
