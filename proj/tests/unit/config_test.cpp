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

#include "namecheck/config.hpp"

#include <string>

#include "gtest/gtest.h"
#include "support/temp_dir.hpp"

namespace namecheck {
namespace {

TEST(ParseConfigTest, EmptyObjectGivesDefaults) {
  const AnalysisConfig cfg = parse_config("{}");
  EXPECT_FALSE(cfg.regex_file.has_value());
  EXPECT_FALSE(cfg.lexicon_file.has_value());
  EXPECT_TRUE(cfg.include.empty());
  EXPECT_TRUE(cfg.exclude.empty());
  EXPECT_FALSE(cfg.only.has_value());
}

TEST(ParseConfigTest, AllKeys) {
  const AnalysisConfig cfg = parse_config(
      R"({"regexes": "r.tsv", "lexicon": "/abs/l.tsv", "include": ["*Test.java"],
          "exclude": ["gen/*", "*/old/*"], "only": "non-descriptive"})",
      "/base");
  EXPECT_EQ(cfg.regex_file, std::filesystem::path("/base/r.tsv"));
  EXPECT_EQ(cfg.lexicon_file, std::filesystem::path("/abs/l.tsv"));
  EXPECT_EQ(cfg.include, std::vector<std::string>{"*Test.java"});
  EXPECT_EQ(cfg.exclude, (std::vector<std::string>{"gen/*", "*/old/*"}));
  EXPECT_EQ(cfg.only, Outcome::NonDescriptive);
}

TEST(ParseConfigTest, Errors) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config("[]"), ConfigError);
  EXPECT_THROW(parse_config(R"({"regexes": 42})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"include": "*.java"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"exclude": [1]})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"only": "good"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"only": 1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"colour": "red"})"), ConfigError);
}

TEST(LoadConfigTest, ResolvesAgainstTheConfigDirectory) {
  testing::TempDir dir;
  dir.write("conf/namecheck.json", R"({"lexicon": "lex.tsv"})");
  const AnalysisConfig cfg = load_config(dir.path() / "conf" / "namecheck.json");
  EXPECT_EQ(cfg.lexicon_file, dir.path() / "conf" / "lex.tsv");
}

TEST(LoadConfigTest, MissingFileIsAConfigError) {
  testing::TempDir dir;
  EXPECT_THROW(load_config(dir.path() / "absent.json"), ConfigError);
}

TEST(ReadTextFileTest, ReadsBytesOrThrowsIoError) {
  testing::TempDir dir;
  dir.write("a.txt", "one\r\ntwo");
  EXPECT_EQ(read_text_file(dir.path() / "a.txt"), "one\r\ntwo");
  EXPECT_THROW(read_text_file(dir.path() / "b.txt"), IoError);
}

}  // namespace
}  // namespace namecheck
