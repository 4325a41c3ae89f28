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

#include "namecheck/name_patterns.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace namecheck {
namespace {

struct NameExpect {
  const char* name;
  NamePattern pattern;
  const char* sub_pattern;
  const char* action;
  const char* predicate;
  const char* scenario;
};

class NameFirstMatchTest : public ::testing::TestWithParam<NameExpect> {};

TEST_P(NameFirstMatchTest, PicksPatternAndTriple) {
  const NameExpect& x = GetParam();
  const auto m = match_name(x.name, {});
  ASSERT_TRUE(m.has_value()) << x.name;
  EXPECT_EQ(to_string(m->pattern), to_string(x.pattern)) << x.name;
  EXPECT_EQ(m->sub_pattern, x.sub_pattern);
  EXPECT_EQ(m->extraction.action, x.action);
  EXPECT_EQ(m->extraction.predicate, x.predicate);
  EXPECT_EQ(m->extraction.scenario, x.scenario);
  EXPECT_EQ(m->extraction.source, ExtractionSource::Name);
  EXPECT_FALSE(m->used_context);
}

INSTANTIATE_TEST_SUITE_P(
    Catalog, NameFirstMatchTest,
    ::testing::Values(
        NameExpect{"testAddItemOrderList", NamePattern::VerbWithMultipleNouns, "", "Add", "",
                   "ItemOrderList"},
        NameExpect{"testPushItemPopsItem", NamePattern::DividedDuelVerb, "", "Push", "Pops",
                   "Item"},
        NameExpect{"testIsDeleted", NamePattern::IsAndPastParticiple, "", "Is", "Deleted", ""},
        NameExpect{"isDeleted", NamePattern::IsAndPastParticiple, "", "is", "Deleted", ""},
        NameExpect{"testOpenThrowsIOException", NamePattern::TryCatchName, "trycatch.throws",
                   "Open", "IOException", ""},
        NameExpect{"testLoadDeletesCache", NamePattern::DuelVerb, "", "Load", "Deletes",
                   "Cache"},
        NameExpect{"testEntries", NamePattern::NounPhrase, "", "", "", "Entries"},
        NameExpect{"returnFoo2", NamePattern::VerbPhraseWithoutPrependedTest, "", "return", "",
                   "Foo"},
        NameExpect{"computesTotal", NamePattern::VerbPhraseWithoutPrependedTest, "", "computes",
                   "", "Total"},
        NameExpect{"testExecute_Action", NamePattern::VerbPhraseWithPrependedTest, "",
                   "Execute", "", "Action"},
        NameExpect{"shouldThrowExceptionWhenTokenIsAbsent", NamePattern::RegexMatch,
                   "should-when", "", "ThrowException", "TokenIsAbsent"},
        NameExpect{"givenCartWhenCheckoutThenEmpty", NamePattern::RegexMatch,
                   "given-when-then", "Checkout", "Empty", "Cart"},
        NameExpect{"withdraw_negative_fails", NamePattern::RegexMatch,
                   "method-state-expected", "withdraw", "fails", "negative"}));

TEST(NameMatchTest, UnmatchedNames) {
  EXPECT_FALSE(match_name("test", {}).has_value());
  EXPECT_FALSE(match_name("testParse", {}).has_value());
  EXPECT_FALSE(match_name("testCanParseInput", {}).has_value());
}

TEST(NameMatchTest, SingleEntityNeedsContext) {
  const auto without = match_name("testGetGraphNode", {});
  ASSERT_TRUE(without.has_value());
  EXPECT_EQ(without->pattern, NamePattern::VerbPhraseWithPrependedTest);

  const auto with = match_name("testGetGraphNode", {"setUp", "getGraphNode"});
  ASSERT_TRUE(with.has_value());
  EXPECT_EQ(with->pattern, NamePattern::SingleEntity);
  EXPECT_EQ(with->extraction.action, "GetGraphNode");
  EXPECT_TRUE(with->extraction.predicate.empty());
  EXPECT_TRUE(with->extraction.scenario.empty());
  EXPECT_TRUE(with->used_context);
}

TEST(NameMatchTest, SingleEntityIgnoresUnderscores) {
  const auto m = match_name_pattern(NamePattern::SingleEntity, "testGet_Graph_Node",
                                    {"getGraphNode"});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->extraction.action, "GetGraphNode");
}

TEST(NameMatchTest, FirstMatchAgreesWithPerPatternProbe) {
  const std::vector<std::string> context = {"getGraphNode"};
  for (const char* name : {"testAddItemOrderList", "testPushItemPopsItem", "testGetGraphNode",
                           "testGet_Graph_Node", "returnFoo2", "testEntries"}) {
    std::optional<NamePattern> first;
    for (const auto& info : kNamePatterns) {
      if (match_name_pattern(info.id, name, context)) {
        first = info.id;
        break;
      }
    }
    const auto m = match_name(name, context);
    ASSERT_TRUE(first && m) << name;
    EXPECT_EQ(m->pattern, *first) << name;
  }
}

TEST(NameMatchTest, CustomRegexesReplaceTheDefaults) {
  const std::vector<RegexSubPattern> regexes = {
      RegexSubPattern("spec", "^spec_(?<action>[a-z]+)$")};
  NameMatcherOptions options;
  options.regexes = &regexes;
  const auto m = match_name("spec_parse", {}, options);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pattern, NamePattern::RegexMatch);
  EXPECT_EQ(m->sub_pattern, "spec");
  EXPECT_EQ(m->extraction.action, "parse");
  EXPECT_FALSE(match_name("shouldFailWhenEmpty", {}, options).has_value());
}

TEST(NameMatchTest, CustomLexiconChangesTags) {
  const Lexicon lex = Lexicon::parse("frob\tVerb\nwidget\tNoun\n");
  NameMatcherOptions options;
  options.lexicon = &lex;
  const auto m = match_name("testFrobWidget", {}, options);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pattern, NamePattern::VerbPhraseWithPrependedTest);
  EXPECT_EQ(m->extraction.action, "Frob");
  EXPECT_EQ(m->extraction.scenario, "Widget");
}

TEST(NameCatalogTest, TenUniquePatternsInOrder) {
  EXPECT_EQ(kNamePatterns.size(), 10u);
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < kNamePatterns.size(); ++i) {
    EXPECT_EQ(static_cast<std::size_t>(kNamePatterns[i].id), i);
    EXPECT_EQ(name_pattern_from_string(kNamePatterns[i].name), kNamePatterns[i].id);
    names.insert(kNamePatterns[i].name);
  }
  EXPECT_EQ(names.size(), 10u);
  EXPECT_FALSE(name_pattern_from_string("Nope").has_value());
}

TEST(SplitIdentifierTest, CaseDigitAndUnderscoreBoundaries) {
  using V = std::vector<std::string>;
  EXPECT_EQ(split_identifier("testGetSSLProtocol"), (V{"test", "Get", "SSL", "Protocol"}));
  EXPECT_EQ(split_identifier("returnFoo2"), (V{"return", "Foo", "2"}));
  EXPECT_EQ(split_identifier("test_execute__Action"), (V{"test", "execute", "Action"}));
  EXPECT_EQ(split_identifier("HTTPServer"), (V{"HTTP", "Server"}));
  EXPECT_EQ(split_identifier("abc"), (V{"abc"}));
  EXPECT_TRUE(split_identifier("").empty());
  EXPECT_TRUE(split_identifier("__").empty());
}

TEST(SplitIdentifierTest, WordsConcatenateToTheIdentifierWithoutSeparators) {
  std::mt19937 rng(7);
  const std::string alphabet = "aBc1_Z9xY";
  for (int round = 0; round < 500; ++round) {
    std::string id;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) id.push_back(alphabet[rng() % alphabet.size()]);
    std::string joined;
    for (const auto& w : split_identifier(id)) {
      EXPECT_FALSE(w.empty());
      joined += w;
    }
    std::string expected;
    for (char c : id) {
      if (c != '_') expected.push_back(c);
    }
    EXPECT_EQ(joined, expected) << id;
  }
}

TEST(RegexTranslateTest, NamedGroupsBecomePlainGroups) {
  const TranslatedRegex t = translate_named_groups("^(a)(?<action>x)(?:y)[(?<]*(?<scenario>z)$");
  EXPECT_EQ(t.expression, "^(a)(x)(?:y)[(?<]*(z)$");
  EXPECT_EQ(t.groups.at("action"), 2u);
  EXPECT_EQ(t.groups.at("scenario"), 3u);
}

TEST(RegexTranslateTest, EscapedParenthesesAreNotGroups) {
  const TranslatedRegex t = translate_named_groups("\\((?<predicate>p)\\)");
  EXPECT_EQ(t.groups.at("predicate"), 1u);
}

TEST(RegexTranslateTest, MalformedGroupsThrow) {
  EXPECT_THROW(translate_named_groups("(?<action"), ConfigError);
  EXPECT_THROW(translate_named_groups("(?<a>x)(?<a>y)"), ConfigError);
}

TEST(RegexSubPatternTest, RejectsBadDefinitions) {
  EXPECT_THROW(RegexSubPattern("x", "^abc$"), ConfigError);
  EXPECT_THROW(RegexSubPattern("x", "^(?<verb>abc)$"), ConfigError);
  EXPECT_THROW(RegexSubPattern("x", "^(?<action>abc$"), ConfigError);
}

TEST(RegexSubPatternTest, TrimsUnderscoresAndDropsTest) {
  const RegexSubPattern r("x", "^(?<action>[a-z_]+)_(?<scenario>[a-z_]+)$");
  const auto e = r.match("_run___go_");
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->action, "run");
  EXPECT_EQ(e->scenario, "go");
  const RegexSubPattern t("t", "^(?<action>test)(?<scenario>[A-Z][a-z]+)$");
  const auto f = t.match("testFoo");
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->action.empty());
  EXPECT_EQ(f->scenario, "Foo");
  EXPECT_FALSE(t.match("xtestFoo").has_value());
}

TEST(RegexFileTest, ParsesLinesAndReportsErrors) {
  const auto regexes = parse_regex_file("# c\n\na\t^(?<action>a)$\r\nb\t^(?<scenario>b)$\n");
  ASSERT_EQ(regexes.size(), 2u);
  EXPECT_EQ(regexes[0].id(), "a");
  EXPECT_EQ(regexes[1].expression(), "^(?<scenario>b)$");
  EXPECT_THROW(parse_regex_file("no tab here\n"), ConfigError);
  EXPECT_THROW(parse_regex_file("\t^(?<action>a)$\n"), ConfigError);
  EXPECT_THROW(parse_regex_file("id\t\n"), ConfigError);
}

TEST(RegexFileTest, DefaultSetLoads) {
  const auto& regexes = default_name_regexes();
  ASSERT_FALSE(regexes.empty());
  EXPECT_EQ(regexes.front().id().rfind(kTryCatchPrefix, 0), 0u);
}

TEST(DigestTest, KnownFnv1aValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_NE(fnv1a_hex("ab"), fnv1a_hex("ba"));
}

}  // namespace
}  // namespace namecheck
