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

#include "namecheck/pos_tagger.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace namecheck {
namespace {

std::vector<PosTag> tags_of(std::string_view name, const Lexicon& lex = Lexicon::standard()) {
  std::vector<PosTag> out;
  for (const auto& w : pos_tag_identifier(name, lex).words) out.push_back(w.tag);
  return out;
}

using T = PosTag;
using Tags = std::vector<PosTag>;

TEST(PosTaggerTest, LeadingTestIsAVerbMarker) {
  EXPECT_EQ(tags_of("testExecuteAction"), (Tags{T::Verb, T::Verb, T::Noun}));
  EXPECT_EQ(tags_of("test"), (Tags{T::Verb}));
}

TEST(PosTaggerTest, ContextPicksAmongLexiconCandidates) {
  // "access" is both a verb and a noun.
  EXPECT_EQ(tags_of("accessAccount"), (Tags{T::Verb, T::Noun}));
  EXPECT_EQ(tags_of("addAccess"), (Tags{T::Verb, T::Noun}));
}

TEST(PosTaggerTest, InflectedForms) {
  EXPECT_EQ(tags_of("testLoadDeletesCache"), (Tags{T::Verb, T::Verb, T::Verb, T::Noun}));
  EXPECT_EQ(tags_of("testIsDeleted"), (Tags{T::Verb, T::Verb, T::VerbPastParticiple}));
  EXPECT_EQ(tags_of("testEntries"), (Tags{T::Verb, T::Noun}));
}

TEST(PosTaggerTest, ModalsAndNumbers) {
  const WordSequence ws = pos_tag_identifier("shouldThrowException2");
  ASSERT_EQ(ws.words.size(), 4u);
  EXPECT_EQ(ws.words[0].tag, T::Other);
  EXPECT_EQ(ws.words[1].tag, T::Verb);
  EXPECT_EQ(ws.words[2].tag, T::Noun);
  EXPECT_EQ(ws.words[3].tag, T::Other);
  EXPECT_EQ(ws.original, "shouldThrowException2");
}

TEST(PosTaggerTest, UnknownWordsUseSuffixes) {
  const Lexicon empty;
  EXPECT_EQ(tags_of("serializer", empty), (Tags{T::Noun}));
  EXPECT_EQ(tags_of("normalizeThing", empty), (Tags{T::Verb, T::Noun}));
  EXPECT_EQ(tags_of("isFrobbed", empty), (Tags{T::Noun, T::VerbPastParticiple}));
}

TEST(LexiconTest, ParseKeepsCandidateOrderAndLowercases) {
  const Lexicon lex = Lexicon::parse("# c\nWalk\tNoun\nwalk\tVerb\nwalk\tNoun\n\n");
  ASSERT_NE(lex.find("walk"), nullptr);
  EXPECT_EQ(*lex.find("walk"), (Tags{T::Noun, T::Verb}));
  EXPECT_EQ(lex.find("Walk"), nullptr);
  EXPECT_EQ(lex.size(), 1u);
}

TEST(LexiconTest, MalformedLinesThrow) {
  EXPECT_THROW(Lexicon::parse("walk\n"), ConfigError);
  EXPECT_THROW(Lexicon::parse("walk\tAdverb\n"), ConfigError);
  EXPECT_THROW(Lexicon::parse("\tVerb\n"), ConfigError);
}

TEST(LexiconTest, StandardLexiconIsLoaded) {
  EXPECT_GT(Lexicon::standard().size(), 300u);
  EXPECT_NE(Lexicon::standard().find("add"), nullptr);
}

TEST(PosTagTest, NamesRoundTrip) {
  for (T t : {T::Verb, T::VerbPastParticiple, T::Noun, T::Adjective, T::Preposition, T::Other}) {
    EXPECT_EQ(pos_tag_from_string(to_string(t)), t);
  }
  EXPECT_FALSE(pos_tag_from_string("Adverb").has_value());
}

}  // namespace
}  // namespace namecheck
