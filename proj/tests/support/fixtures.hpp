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

// Loaders for the checked-in fixtures.

#ifndef NAMECHECK_TESTS_SUPPORT_FIXTURES_HPP
#define NAMECHECK_TESTS_SUPPORT_FIXTURES_HPP

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "namecheck/abstraction.hpp"
#include "namecheck/config.hpp"
#include "namecheck/sequence_miner.hpp"
#include "namecheck/source_scanner.hpp"

namespace namecheck::testing {

inline std::filesystem::path fixture_dir() { return NAMECHECK_FIXTURE_DIR; }
inline std::filesystem::path figures_dir() { return fixture_dir() / "figures"; }

/// Tests of the figure fixtures, keyed by method name.
inline std::map<std::string, TestCase> figure_tests() {
  std::map<std::string, TestCase> out;
  for (auto& t : scan_directory(figures_dir()).tests) out.emplace(t.name, std::move(t));
  return out;
}

struct ClaspFixture {
  SequenceDatabase database;
  std::vector<ClosedPattern<int>> candidates;  // support 0 when unknown
};

inline ClaspFixture load_clasp_fixture() {
  const std::string text = read_text_file(fixture_dir() / "clasp_examples.txt");
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::string sequences;
  ClaspFixture out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '[') {
      section = line;
    } else if (section == "[sequences]") {
      sequences += line + "\n";
    } else if (section == "[candidates]") {
      const auto tab = line.find('\t');
      ClosedPattern<int> p;
      p.items = parse_skeleton(line.substr(0, tab));
      const std::string support = line.substr(tab + 1);
      p.support = support == "?" ? 0 : std::stoul(support);
      out.candidates.push_back(p);
    }
  }
  std::istringstream seq(sequences);
  out.database = read_sequence_database(seq);
  return out;
}

}  // namespace namecheck::testing

#endif  // NAMECHECK_TESTS_SUPPORT_FIXTURES_HPP
