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

// Lexicon-driven part-of-speech tagger for identifier words.
//
// A name is read as the sentence "I <words>". Every word gets an ordered
// list of candidate tags (lexicon, then simple inflection, then suffix
// rules), and the tag of the previous word picks among the candidates:
// a verb is expected after "I", a modal or an auxiliary, a noun after a verb
// or a preposition.

#ifndef NAMECHECK_POS_TAGGER_HPP
#define NAMECHECK_POS_TAGGER_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "namecheck/default_data.hpp"
#include "namecheck/error.hpp"
#include "namecheck/identifier_splitter.hpp"

namespace namecheck {

enum class PosTag { Verb, VerbPastParticiple, Noun, Adjective, Preposition, Other };

inline constexpr std::string_view to_string(PosTag t) {
  switch (t) {
    case PosTag::Verb: return "Verb";
    case PosTag::VerbPastParticiple: return "VerbPastParticiple";
    case PosTag::Noun: return "Noun";
    case PosTag::Adjective: return "Adjective";
    case PosTag::Preposition: return "Preposition";
    case PosTag::Other: return "Other";
  }
  return "Other";
}

inline std::optional<PosTag> pos_tag_from_string(std::string_view s) {
  for (PosTag t : {PosTag::Verb, PosTag::VerbPastParticiple, PosTag::Noun,
                   PosTag::Adjective, PosTag::Preposition, PosTag::Other}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

/// Word to candidate tags, in preference order.
class Lexicon {
 public:
  Lexicon() = default;

  /// Parses `word<TAB>tag` lines; '#' starts a comment line.
  /// Throws ConfigError on malformed lines.
  static Lexicon parse(std::string_view text) {
    Lexicon lex;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      const auto tag = tab == std::string::npos ? std::nullopt
                                                : pos_tag_from_string(line.substr(tab + 1));
      if (tab == 0 || !tag) {
        throw ConfigError("lexicon line " + std::to_string(line_no) +
                          ": expected 'word<TAB>tag'");
      }
      auto& tags = lex.entries_[to_lower(line.substr(0, tab))];
      if (std::find(tags.begin(), tags.end(), *tag) == tags.end()) tags.push_back(*tag);
    }
    return lex;
  }

  static const Lexicon& standard() {
    static const Lexicon kStandard = parse(kDefaultLexicon);
    return kStandard;
  }

  const std::vector<PosTag>* find(std::string_view lower_word) const {
    auto it = entries_.find(std::string(lower_word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<PosTag>> entries_;
};

struct TaggedWord {
  std::string text;
  PosTag tag = PosTag::Other;

  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

struct WordSequence {
  std::string original;
  std::vector<TaggedWord> words;
};

namespace tagger_detail {

inline bool in(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

inline bool is_modal(std::string_view w) {
  return in(w, {"should", "must", "can", "will", "may", "could", "would", "shall",
                "cannot", "might"});
}

inline bool is_auxiliary(std::string_view w) {
  return in(w, {"is", "are", "was", "were", "be", "been", "being", "has", "have",
                "had", "does", "do", "did"});
}

/// Words that do not change what the next word is expected to be.
inline bool is_transparent(std::string_view w) {
  return in(w, {"not", "never", "always", "also", "only", "still", "just"});
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() > suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

/// Candidates derived from a lexicon stem via plural/third-person -s or -ed.
/// `third_person_verb` is set when the stem is primarily a verb.
inline std::vector<PosTag> inflected(const Lexicon& lex, const std::string& w,
                                     bool& third_person_verb) {
  std::vector<std::string> s_stems;
  if (ends_with(w, "ies")) s_stems.push_back(w.substr(0, w.size() - 3) + "y");
  if (ends_with(w, "es")) s_stems.push_back(w.substr(0, w.size() - 2));
  if (ends_with(w, "s") && !ends_with(w, "ss")) s_stems.push_back(w.substr(0, w.size() - 1));
  for (const auto& stem : s_stems) {
    if (const auto* tags = lex.find(stem)) {
      std::vector<PosTag> out;
      for (PosTag t : *tags) {
        if (t == PosTag::Verb || t == PosTag::Noun) out.push_back(t);
      }
      if (out.empty()) continue;
      third_person_verb = out.front() == PosTag::Verb;
      return out;
    }
  }
  if (ends_with(w, "ed")) {
    std::vector<std::string> stems = {w.substr(0, w.size() - 1), w.substr(0, w.size() - 2)};
    if (ends_with(w, "ied")) stems.push_back(w.substr(0, w.size() - 3) + "y");
    if (w.size() > 4 && w[w.size() - 3] == w[w.size() - 4]) {
      stems.push_back(w.substr(0, w.size() - 3));  // stopped -> stop
    }
    for (const auto& stem : stems) {
      const auto* tags = lex.find(stem);
      if (tags && std::find(tags->begin(), tags->end(), PosTag::Verb) != tags->end()) {
        return {PosTag::VerbPastParticiple, PosTag::Adjective};
      }
    }
  }
  return {};
}

inline std::vector<PosTag> by_suffix(const std::string& w) {
  const bool alpha = std::all_of(w.begin(), w.end(), [](unsigned char c) {
    return std::isalpha(c) || c >= 0x80;
  });
  if (!alpha) return {PosTag::Other};
  if (w.size() > 4 && (ends_with(w, "ed") || ends_with(w, "en"))) {
    return {PosTag::VerbPastParticiple, PosTag::Adjective};
  }
  if (w.size() > 3 && ends_with(w, "ly")) return {PosTag::Other};
  for (std::string_view s : {"ing", "tion", "sion", "ment", "ness", "ity", "er", "or",
                             "ist", "ism", "ship", "ance", "ence"}) {
    if (ends_with(w, s) && w.size() > s.size() + 2) return {PosTag::Noun};
  }
  for (std::string_view s : {"ize", "ise", "ify", "ate"}) {
    if (ends_with(w, s) && w.size() > s.size() + 2) return {PosTag::Verb, PosTag::Noun};
  }
  for (std::string_view s : {"able", "ible", "al", "ful", "ous", "ive", "less", "ic"}) {
    if (ends_with(w, s) && w.size() > s.size() + 2) return {PosTag::Adjective, PosTag::Noun};
  }
  return {PosTag::Noun};
}

enum class Context { ExpectVerb, AfterAuxiliary, AfterVerb, AfterNoun, ExpectNoun };

inline PosTag choose(const std::vector<PosTag>& candidates, Context ctx,
                     bool third_person_verb) {
  using T = PosTag;
  std::vector<T> pref;
  switch (ctx) {
    case Context::ExpectVerb:
      pref = {T::Verb, T::Noun, T::Adjective, T::VerbPastParticiple};
      break;
    case Context::AfterAuxiliary:
      pref = {T::VerbPastParticiple, T::Adjective, T::Verb, T::Noun};
      break;
    case Context::AfterVerb:
      pref = {T::Noun, T::Adjective, T::VerbPastParticiple, T::Verb};
      break;
    case Context::AfterNoun:
      pref = third_person_verb ? std::vector<T>{T::Verb, T::Noun}
                               : std::vector<T>{T::Noun, T::Verb};
      break;
    case Context::ExpectNoun:
      pref = {T::Noun, T::Adjective, T::Verb, T::VerbPastParticiple};
      break;
  }
  for (T t : pref) {
    if (std::find(candidates.begin(), candidates.end(), t) != candidates.end()) return t;
  }
  return candidates.front();
}

}  // namespace tagger_detail

/// Tags words as they would read in the sentence "I <words>". A leading
/// "test" is tagged as a verb and acts as a marker: the word after it is
/// read as a verb. Numeric words are tagged Other and do not change context.
inline WordSequence pos_tag(const std::vector<std::string>& words,
                            const Lexicon& lexicon = Lexicon::standard()) {
  namespace td = tagger_detail;
  WordSequence out;
  td::Context ctx = td::Context::ExpectVerb;  // after "I"
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string lower = to_lower(words[i]);
    out.original += words[i];
    if (i == 0 && lower == "test" && words.size() > 1) {
      out.words.push_back({words[i], PosTag::Verb});
      continue;  // marker keeps ExpectVerb
    }
    if (is_numeric_word(lower)) {
      out.words.push_back({words[i], PosTag::Other});
      continue;
    }
    bool third_person_verb = false;
    std::vector<PosTag> candidates;
    if (const auto* tags = lexicon.find(lower)) {
      candidates = *tags;
    } else {
      candidates = td::inflected(lexicon, lower, third_person_verb);
      if (candidates.empty()) candidates = td::by_suffix(lower);
    }
    PosTag tag = td::choose(candidates, ctx, third_person_verb);
    if (td::is_modal(lower)) tag = PosTag::Other;
    out.words.push_back({words[i], tag});

    if (td::is_transparent(lower)) continue;
    if (td::is_modal(lower)) {
      ctx = td::Context::ExpectVerb;
    } else if (td::is_auxiliary(lower)) {
      ctx = td::Context::AfterAuxiliary;
    } else if (tag == PosTag::Verb) {
      ctx = td::Context::AfterVerb;
    } else if (tag == PosTag::Noun) {
      ctx = td::Context::AfterNoun;
    } else {
      ctx = td::Context::ExpectNoun;
    }
  }
  return out;
}

inline WordSequence pos_tag_identifier(std::string_view name,
                                       const Lexicon& lexicon = Lexicon::standard()) {
  WordSequence ws = pos_tag(split_identifier(name), lexicon);
  ws.original = std::string(name);
  return ws;
}

}  // namespace namecheck

#endif  // NAMECHECK_POS_TAGGER_HPP
