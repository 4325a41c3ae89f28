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

#include "namecheck/comparison.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/random_extraction.hpp"

namespace namecheck {
namespace {

Extraction ext(std::string a, std::string p, std::string s,
               ExtractionSource src = ExtractionSource::Body) {
  return Extraction{std::move(a), std::move(p), std::move(s), src};
}

TEST(NormalizeTest, StripsQualifiersArgumentsAndCase) {
  EXPECT_EQ(normalize("config.getSSLProtocol()"), "getsslprotocol");
  EXPECT_EQ(normalize("a.b.setName(x.y)"), "setname");
  EXPECT_EQ(normalize("Token_Is_Absent"), "tokenisabsent");
  EXPECT_EQ(normalize("()"), "");
  EXPECT_EQ(normalize(""), "");
}

TEST(NormalizeTest, NameFragmentDropsLeadingTestWord) {
  EXPECT_EQ(normalize_name_fragment("testParse"), "parse");
  EXPECT_EQ(normalize_name_fragment("test"), "test");
  EXPECT_EQ(normalize_name_fragment("Testing"), "testing");
}

TEST(PiecesMatchTest, EqualityAndContainment) {
  EXPECT_TRUE(pieces_match("get", "get"));
  EXPECT_TRUE(pieces_match("graphnode", "getgraphnode"));
  EXPECT_TRUE(pieces_match("getgraphnode", "graphnode"));
  EXPECT_FALSE(pieces_match("x", "xyz"));
  EXPECT_TRUE(pieces_match("x", "x"));
  EXPECT_FALSE(pieces_match("", ""));
  EXPECT_FALSE(pieces_match("abc", "abd"));
}

TEST(ValuesMatchTest, NameAndBodyForms) {
  EXPECT_TRUE(values_match("GetSSLProtocol", "config.getSSLProtocol()"));
  EXPECT_TRUE(values_match("testParse", "parse(x)"));
  EXPECT_TRUE(values_match("Protocol", "getSSLProtocol"));
  EXPECT_TRUE(values_match("return", "thenReturn()"));
  EXPECT_FALSE(values_match("Execute", "a.run(execute)"));
  EXPECT_FALSE(values_match("Foo", "bar"));
}

TEST(ClassifyTest, UnknownWithoutBothSides) {
  const Extraction body = ext("run", "", "");
  EXPECT_EQ(classify(std::nullopt, body).outcome, Outcome::Unknown);
  EXPECT_EQ(classify(ext("run", "", "", ExtractionSource::Name), std::nullopt).outcome,
            Outcome::Unknown);
  EXPECT_EQ(classify(ext("", "", "", ExtractionSource::Name), body), Classification{});
}

TEST(ClassifyTest, ComponentResults) {
  const auto cls = classify(ext("Get", "Equals", "", ExtractionSource::Name),
                            ext("get", "assertTrue", "node"));
  EXPECT_EQ(cls.get(Component::Action), ComponentResult::Match);
  EXPECT_EQ(cls.get(Component::Predicate), ComponentResult::Mismatch);
  EXPECT_EQ(cls.get(Component::Scenario), ComponentResult::BodyOnly);
  EXPECT_EQ(cls.outcome, Outcome::NonDescriptive);

  const auto only = classify(ext("Get", "", "Node", ExtractionSource::Name), ext("get", "", ""));
  EXPECT_EQ(only.get(Component::Scenario), ComponentResult::NameOnly);
  EXPECT_EQ(only.get(Component::Predicate), ComponentResult::BothAbsent);
  EXPECT_EQ(only.outcome, Outcome::NonDescriptive);

  const auto ok = classify(ext("GetGraphNode", "", "", ExtractionSource::Name),
                           ext("getGraphNode", "assertEquals", ""));
  EXPECT_EQ(ok.outcome, Outcome::Descriptive);
}

TEST(SuggestTest, KindsAndOrder) {
  const Extraction name = ext("return", "Equals", "", ExtractionSource::Name);
  const Extraction body = ext("", "assertTrue", "thenReturn");
  const auto cls = classify(name, body);
  const auto s = suggest(cls, name, body);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (Suggestion{SuggestionKind::Add, Component::Scenario, "", "thenReturn"}));
  EXPECT_EQ(s[1], (Suggestion{SuggestionKind::Remove, Component::Action, "return", ""}));
  EXPECT_EQ(s[2],
            (Suggestion{SuggestionKind::Replace, Component::Predicate, "Equals", "assertTrue"}));
}

TEST(SuggestTest, DescriptiveNamesOnlyGetAdditions) {
  const Extraction name = ext("Get", "", "", ExtractionSource::Name);
  const Extraction body = ext("get", "assertEquals", "");
  const auto s = suggest(classify(name, body), name, body);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].kind, SuggestionKind::Add);
  EXPECT_TRUE(suggest(Classification{}, name, body).empty());
}

// Outcome recomputed from the component definitions.
Outcome oracle_outcome(const Extraction& name, const Extraction& body) {
  if (name.empty() || body.empty()) return Outcome::Unknown;
  for (Component c : kComponents) {
    if (!name.has(c)) continue;
    if (!body.has(c)) return Outcome::NonDescriptive;
    const std::string n1 = normalize(name.get(c));
    const std::string n2 = normalize_name_fragment(name.get(c));
    const std::string b = normalize(body.get(c));
    auto contains = [](const std::string& x, const std::string& y) {
      if (x.empty() || y.empty()) return false;
      if (x == y) return true;
      const std::string& s = x.size() < y.size() ? x : y;
      const std::string& l = x.size() < y.size() ? y : x;
      return s.size() >= 2 && l.find(s) != std::string::npos;
    };
    if (!contains(n1, b) && !contains(n2, b)) return Outcome::NonDescriptive;
  }
  return Outcome::Descriptive;
}

TEST(ClassifyPropertyTest, AgreesWithOracleAndSuggestionsClose) {
  testing::ExtractionGenerator gen(2026);
  int eligible = 0;
  for (int i = 0; i < 3000; ++i) {
    const Extraction name = gen.next(ExtractionSource::Name);
    const Extraction body = gen.next(ExtractionSource::Body);
    const auto cls = classify(name, body);
    ASSERT_EQ(cls.outcome, oracle_outcome(name, body));
    const auto suggestions = suggest(cls, name, body);
    for (const auto& s : suggestions) {
      EXPECT_EQ(s.kind == SuggestionKind::Add, cls.get(s.component) == ComponentResult::BodyOnly);
    }
    if (cls.outcome != Outcome::NonDescriptive) continue;
    ++eligible;
    const Extraction fixed = apply_suggestions(name, suggestions);
    EXPECT_EQ(classify(fixed, body).outcome, Outcome::Descriptive);
    EXPECT_TRUE(suggest(classify(fixed, body), fixed, body).empty());
  }
  EXPECT_GT(eligible, 500);
}

TEST(EnumStringsTest, RoundTrip) {
  for (Outcome o : {Outcome::Descriptive, Outcome::NonDescriptive, Outcome::Unknown}) {
    EXPECT_EQ(outcome_from_string(to_string(o)), o);
  }
  for (ComponentResult r : {ComponentResult::Match, ComponentResult::Mismatch,
                            ComponentResult::NameOnly, ComponentResult::BodyOnly,
                            ComponentResult::BothAbsent}) {
    EXPECT_EQ(component_result_from_string(to_string(r)), r);
  }
  for (SuggestionKind k : {SuggestionKind::Add, SuggestionKind::Remove, SuggestionKind::Replace}) {
    EXPECT_EQ(suggestion_kind_from_string(to_string(k)), k);
  }
  for (Component c : kComponents) EXPECT_EQ(component_from_string(to_string(c)), c);
  EXPECT_FALSE(outcome_from_string("good").has_value());
}

}  // namespace
}  // namespace namecheck
