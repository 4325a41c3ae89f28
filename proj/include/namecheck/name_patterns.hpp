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

// Test name patterns over tagged words and regular-expression sub-patterns.

#ifndef NAMECHECK_NAME_PATTERNS_HPP
#define NAMECHECK_NAME_PATTERNS_HPP

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "namecheck/extraction.hpp"
#include "namecheck/identifier_splitter.hpp"
#include "namecheck/name_regex.hpp"
#include "namecheck/pos_tagger.hpp"

namespace namecheck {

/// Name patterns in matching order.
enum class NamePattern {
  VerbWithMultipleNouns,
  DividedDuelVerb,
  IsAndPastParticiple,
  TryCatchName,
  DuelVerb,
  NounPhrase,
  SingleEntity,
  VerbPhraseWithoutPrependedTest,
  VerbPhraseWithPrependedTest,
  RegexMatch,
};

struct NamePatternInfo {
  NamePattern id;
  std::string_view name;
  std::string_view label;
};

inline constexpr std::array<NamePatternInfo, 10> kNamePatterns = {{
    {NamePattern::VerbWithMultipleNouns, "VerbWithMultipleNouns",
     "Verb With Multiple Nouns Phrase"},
    {NamePattern::DividedDuelVerb, "DividedDuelVerb", "Divided Duel Verb Phrase"},
    {NamePattern::IsAndPastParticiple, "IsAndPastParticiple",
     "Is And Past Participle Phrase"},
    {NamePattern::TryCatchName, "TryCatchName", "Try Catch"},
    {NamePattern::DuelVerb, "DuelVerb", "Duel Verb Phrase"},
    {NamePattern::NounPhrase, "NounPhrase", "Noun Phrase"},
    {NamePattern::SingleEntity, "SingleEntity", "Single Entity"},
    {NamePattern::VerbPhraseWithoutPrependedTest, "VerbPhraseWithoutPrependedTest",
     "Verb Phrase Without Prepended Test"},
    {NamePattern::VerbPhraseWithPrependedTest, "VerbPhraseWithPrependedTest",
     "Verb Phrase With Prepended Test"},
    {NamePattern::RegexMatch, "RegexMatch", "Regex Match"},
}};

inline const NamePatternInfo& name_pattern_info(NamePattern p) {
  return kNamePatterns[static_cast<std::size_t>(p)];
}

inline std::string_view to_string(NamePattern p) { return name_pattern_info(p).name; }

inline std::optional<NamePattern> name_pattern_from_string(std::string_view s) {
  for (const auto& info : kNamePatterns) {
    if (info.name == s) return info.id;
  }
  return std::nullopt;
}

inline constexpr std::string_view kTryCatchPrefix = "trycatch.";

struct NameMatch {
  NamePattern pattern = NamePattern::RegexMatch;
  /// Id of the regular-expression sub-pattern, for TryCatchName/RegexMatch.
  std::string sub_pattern;
  Extraction extraction;
  /// Set when the match relied on the methods-under-test heuristic.
  bool used_context = false;

  friend bool operator==(const NameMatch&, const NameMatch&) = default;
};

struct NameMatcherOptions {
  const Lexicon* lexicon = nullptr;                      // default lexicon if null
  const std::vector<RegexSubPattern>* regexes = nullptr;  // default set if null
};

namespace name_detail {

struct Shape {
  bool has_test = false;
  std::vector<TaggedWord> rest;  // words after the marker, numerics removed
};

inline Shape shape_of(const WordSequence& ws) {
  Shape s;
  std::size_t start = 0;
  if (ws.words.size() > 1 && to_lower(ws.words[0].text) == "test") {
    s.has_test = true;
    start = 1;
  }
  for (std::size_t i = start; i < ws.words.size(); ++i) {
    if (!is_numeric_word(ws.words[i].text)) s.rest.push_back(ws.words[i]);
  }
  return s;
}

inline bool tags_are(const std::vector<TaggedWord>& w,
                     std::initializer_list<PosTag> tags) {
  if (w.size() != tags.size()) return false;
  std::size_t i = 0;
  for (PosTag t : tags) {
    if (w[i++].tag != t) return false;
  }
  return true;
}

inline std::optional<Extraction> verb_phrase(const Shape& s) {
  if (s.rest.size() < 2 || s.rest[0].tag != PosTag::Verb || s.rest[1].tag != PosTag::Noun) {
    return std::nullopt;
  }
  Extraction e;
  e.action = s.rest[0].text;
  e.scenario = s.rest[1].text;
  if (s.rest.size() >= 3 && s.rest[2].tag == PosTag::Verb) e.predicate = s.rest[2].text;
  return e;
}

inline std::optional<NameMatch> regex_family(const std::string& name,
                                             const std::vector<RegexSubPattern>& regexes,
                                             bool trycatch, NamePattern id) {
  for (const auto& r : regexes) {
    const bool is_trycatch = r.id().rfind(kTryCatchPrefix, 0) == 0;
    if (is_trycatch != trycatch) continue;
    if (auto e = r.match(name); e && !e->empty()) {
      NameMatch m;
      m.pattern = id;
      m.sub_pattern = r.id();
      m.extraction = *e;
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace name_detail

/// Tries one pattern on a test name.
inline std::optional<NameMatch> match_name_pattern(
    NamePattern p, const std::string& name, const std::vector<std::string>& context,
    const NameMatcherOptions& options = {}) {
  namespace nd = name_detail;
  const Lexicon& lexicon = options.lexicon ? *options.lexicon : Lexicon::standard();
  const auto& regexes = options.regexes ? *options.regexes : default_name_regexes();
  const WordSequence ws = pos_tag_identifier(name, lexicon);
  const nd::Shape s = nd::shape_of(ws);
  using T = PosTag;

  std::optional<Extraction> e;
  NameMatch match;
  match.pattern = p;
  switch (p) {
    case NamePattern::VerbWithMultipleNouns:
      if (s.has_test && nd::tags_are(s.rest, {T::Verb, T::Noun, T::Noun, T::Noun})) {
        e.emplace();
        e->action = s.rest[0].text;
        e->scenario = s.rest[1].text + s.rest[2].text + s.rest[3].text;
      }
      break;
    case NamePattern::DividedDuelVerb:
      if (s.has_test && nd::tags_are(s.rest, {T::Verb, T::Noun, T::Verb, T::Noun}) &&
          to_lower(s.rest[1].text) == to_lower(s.rest[3].text)) {
        e.emplace();
        e->action = s.rest[0].text;
        e->scenario = s.rest[1].text;
        e->predicate = s.rest[2].text;
      }
      break;
    case NamePattern::IsAndPastParticiple:
      if (nd::tags_are(s.rest, {T::Verb, T::VerbPastParticiple})) {
        e.emplace();
        e->action = s.rest[0].text;
        e->predicate = s.rest[1].text;
      }
      break;
    case NamePattern::TryCatchName:
    case NamePattern::RegexMatch: {
      auto m = nd::regex_family(name, regexes, p == NamePattern::TryCatchName, p);
      if (m) m->extraction.source = ExtractionSource::Name;
      return m;
    }
    case NamePattern::DuelVerb:
      if (nd::tags_are(s.rest, {T::Verb, T::Verb, T::Noun})) {
        e.emplace();
        e->action = s.rest[0].text;
        e->predicate = s.rest[1].text;
        e->scenario = s.rest[2].text;
      }
      break;
    case NamePattern::NounPhrase:
      if (nd::tags_are(s.rest, {T::Noun})) {
        e.emplace();
        e->scenario = s.rest[0].text;
      }
      break;
    case NamePattern::SingleEntity: {
      if (!s.has_test || context.empty()) break;
      std::string remainder;
      for (char c : name.substr(4)) {
        if (c != '_') remainder.push_back(c);
      }
      if (remainder.empty()) break;
      for (const auto& candidate : context) {
        if (to_lower(candidate) == to_lower(remainder)) {
          e.emplace();
          e->action = remainder;
          match.used_context = true;
          break;
        }
      }
      break;
    }
    case NamePattern::VerbPhraseWithoutPrependedTest:
      if (!s.has_test) e = nd::verb_phrase(s);
      break;
    case NamePattern::VerbPhraseWithPrependedTest:
      if (s.has_test) e = nd::verb_phrase(s);
      break;
  }
  if (!e || e->empty()) return std::nullopt;
  e->source = ExtractionSource::Name;
  match.extraction = *e;
  return match;
}

/// First name pattern, in catalog order, that matches.
inline std::optional<NameMatch> match_name(const std::string& name,
                                           const std::vector<std::string>& context,
                                           const NameMatcherOptions& options = {}) {
  for (const auto& info : kNamePatterns) {
    if (auto m = match_name_pattern(info.id, name, context, options)) return m;
  }
  return std::nullopt;
}

}  // namespace namecheck

#endif  // NAMECHECK_NAME_PATTERNS_HPP
