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

// Compares name-side and body-side extractions.

#ifndef NAMECHECK_COMPARISON_HPP
#define NAMECHECK_COMPARISON_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "namecheck/extraction.hpp"
#include "namecheck/identifier_splitter.hpp"

namespace namecheck {

enum class Outcome { Descriptive, NonDescriptive, Unknown };

inline constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Descriptive: return "descriptive";
    case Outcome::NonDescriptive: return "non-descriptive";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (Outcome o : {Outcome::Descriptive, Outcome::NonDescriptive, Outcome::Unknown}) {
    if (to_string(o) == s) return o;
  }
  return std::nullopt;
}

enum class ComponentResult { Match, Mismatch, NameOnly, BodyOnly, BothAbsent };

inline constexpr std::string_view to_string(ComponentResult r) {
  switch (r) {
    case ComponentResult::Match: return "match";
    case ComponentResult::Mismatch: return "mismatch";
    case ComponentResult::NameOnly: return "name-only";
    case ComponentResult::BodyOnly: return "body-only";
    case ComponentResult::BothAbsent: return "both-absent";
  }
  return "both-absent";
}

inline std::optional<ComponentResult> component_result_from_string(std::string_view s) {
  for (ComponentResult r : {ComponentResult::Match, ComponentResult::Mismatch,
                            ComponentResult::NameOnly, ComponentResult::BodyOnly,
                            ComponentResult::BothAbsent}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

struct Classification {
  Outcome outcome = Outcome::Unknown;
  /// Indexed by Component. All BothAbsent for Unknown.
  std::array<ComponentResult, 3> components = {
      ComponentResult::BothAbsent, ComponentResult::BothAbsent,
      ComponentResult::BothAbsent};

  ComponentResult get(Component c) const { return components[static_cast<std::size_t>(c)]; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

enum class SuggestionKind { Add, Remove, Replace };

inline constexpr std::string_view to_string(SuggestionKind k) {
  switch (k) {
    case SuggestionKind::Add: return "add";
    case SuggestionKind::Remove: return "remove";
    case SuggestionKind::Replace: return "replace";
  }
  return "add";
}

inline std::optional<SuggestionKind> suggestion_kind_from_string(std::string_view s) {
  for (SuggestionKind k : {SuggestionKind::Add, SuggestionKind::Remove, SuggestionKind::Replace}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

inline std::optional<Component> component_from_string(std::string_view s) {
  for (Component c : kComponents) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

struct Suggestion {
  SuggestionKind kind = SuggestionKind::Add;
  Component component = Component::Action;
  std::string name_value;  // Remove, Replace
  std::string body_value;  // Add, Replace

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

/// Name-side canonical text: like normalize(), but a leading "test" word is
/// dropped when other words follow it.
inline std::string normalize_name_fragment(std::string_view fragment) {
  std::vector<std::string> words = split_identifier(fragment);
  if (words.size() > 1 && to_lower(words[0]) == "test") words.erase(words.begin());
  std::string joined;
  for (const auto& w : words) joined += w;
  return normalize(joined);
}

/// Equal, or one properly contains the other. Containment needs the shorter
/// side to be at least two characters long.
inline bool pieces_match(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty()) return false;
  if (a == b) return true;
  const std::string_view shorter = a.size() < b.size() ? a : b;
  const std::string_view longer = a.size() < b.size() ? b : a;
  return shorter.size() >= 2 && longer.find(shorter) != std::string_view::npos;
}

/// Compares a name-side value with a body-side value.
inline bool values_match(std::string_view name_value, std::string_view body_value) {
  const std::string body = normalize(body_value);
  return pieces_match(normalize_name_fragment(name_value), body) ||
         pieces_match(normalize(name_value), body);
}

inline Classification classify(const std::optional<Extraction>& name_ext,
                               const std::optional<Extraction>& body_ext) {
  Classification out;
  if (!name_ext || !body_ext || name_ext->empty() || body_ext->empty()) return out;
  bool non_descriptive = false;
  for (Component c : kComponents) {
    const bool in_name = name_ext->has(c);
    const bool in_body = body_ext->has(c);
    ComponentResult r = ComponentResult::BothAbsent;
    if (in_name && in_body) {
      r = values_match(name_ext->get(c), body_ext->get(c)) ? ComponentResult::Match
                                                           : ComponentResult::Mismatch;
    } else if (in_name) {
      r = ComponentResult::NameOnly;
    } else if (in_body) {
      r = ComponentResult::BodyOnly;
    }
    if (r == ComponentResult::Mismatch || r == ComponentResult::NameOnly) {
      non_descriptive = true;
    }
    out.components[static_cast<std::size_t>(c)] = r;
  }
  out.outcome = non_descriptive ? Outcome::NonDescriptive : Outcome::Descriptive;
  return out;
}

/// Add for every body-only component; for non-descriptive names also Remove
/// for name-only and Replace for mismatching components.
inline std::vector<Suggestion> suggest(const Classification& cls,
                                       const std::optional<Extraction>& name_ext,
                                       const std::optional<Extraction>& body_ext) {
  std::vector<Suggestion> out;
  if (cls.outcome == Outcome::Unknown || !name_ext || !body_ext) return out;
  for (Component c : kComponents) {
    if (cls.get(c) == ComponentResult::BodyOnly) {
      out.push_back({SuggestionKind::Add, c, "", body_ext->get(c)});
    }
  }
  if (cls.outcome != Outcome::NonDescriptive) return out;
  for (Component c : kComponents) {
    if (cls.get(c) == ComponentResult::NameOnly) {
      out.push_back({SuggestionKind::Remove, c, name_ext->get(c), ""});
    }
  }
  for (Component c : kComponents) {
    if (cls.get(c) == ComponentResult::Mismatch) {
      out.push_back({SuggestionKind::Replace, c, name_ext->get(c), body_ext->get(c)});
    }
  }
  return out;
}

/// The name-side triple after carrying out the suggestions.
inline Extraction apply_suggestions(Extraction name_ext,
                                    const std::vector<Suggestion>& suggestions) {
  for (const auto& s : suggestions) {
    switch (s.kind) {
      case SuggestionKind::Add:
      case SuggestionKind::Replace:
        name_ext.get(s.component) = s.body_value;
        break;
      case SuggestionKind::Remove:
        name_ext.get(s.component).clear();
        break;
    }
  }
  return name_ext;
}

}  // namespace namecheck

#endif  // NAMECHECK_COMPARISON_HPP
