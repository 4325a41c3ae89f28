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

#ifndef NAMECHECK_EXTRACTION_HPP
#define NAMECHECK_EXTRACTION_HPP

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace namecheck {

enum class Component { Action, Predicate, Scenario };

inline constexpr std::array<Component, 3> kComponents = {
    Component::Action, Component::Predicate, Component::Scenario};

inline constexpr std::string_view to_string(Component c) {
  switch (c) {
    case Component::Action: return "action";
    case Component::Predicate: return "predicate";
    case Component::Scenario: return "scenario";
  }
  return "action";
}

enum class ExtractionSource { Name, Body };

/// Action/predicate/scenario triple. Empty strings are absent components.
struct Extraction {
  std::string action;
  std::string predicate;
  std::string scenario;
  ExtractionSource source = ExtractionSource::Body;

  const std::string& get(Component c) const {
    switch (c) {
      case Component::Action: return action;
      case Component::Predicate: return predicate;
      case Component::Scenario: return scenario;
    }
    return action;
  }
  std::string& get(Component c) {
    return const_cast<std::string&>(std::as_const(*this).get(c));
  }
  bool has(Component c) const { return !get(c).empty(); }
  bool empty() const { return action.empty() && predicate.empty() && scenario.empty(); }

  friend bool operator==(const Extraction&, const Extraction&) = default;
};

/// Whether a pattern must, may or never does produce a component.
enum class Presence { Required, Optional, Never };

struct PresenceRule {
  Presence action;
  Presence predicate;
  Presence scenario;

  Presence get(Component c) const {
    switch (c) {
      case Component::Action: return action;
      case Component::Predicate: return predicate;
      case Component::Scenario: return scenario;
    }
    return action;
  }

  /// True if `e` satisfies the rule.
  bool admits(const Extraction& e) const {
    for (Component c : kComponents) {
      const Presence p = get(c);
      if (p == Presence::Required && !e.has(c)) return false;
      if (p == Presence::Never && e.has(c)) return false;
    }
    return true;
  }
};

/// Canonical comparison text: drops an argument list and anything after it,
/// keeps the part after the last '.', removes non-alphanumerics and
/// lowercases. "config.getSSLProtocol()" becomes "getsslprotocol".
inline std::string normalize(std::string_view fragment) {
  const auto paren = fragment.find('(');
  if (paren != std::string_view::npos) fragment = fragment.substr(0, paren);
  const auto dot = fragment.rfind('.');
  if (dot != std::string_view::npos) fragment = fragment.substr(dot + 1);
  std::string out;
  for (char ch : fragment) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

}  // namespace namecheck

#endif  // NAMECHECK_EXTRACTION_HPP
