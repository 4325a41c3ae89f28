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

// Project analysis: runs both pattern engines over every test, classifies
// the names and aggregates the results into a report.

#ifndef NAMECHECK_REPORT_HPP
#define NAMECHECK_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "namecheck/abstraction.hpp"
#include "namecheck/body_patterns.hpp"
#include "namecheck/comparison.hpp"
#include "namecheck/config.hpp"
#include "namecheck/error.hpp"
#include "namecheck/name_patterns.hpp"
#include "namecheck/name_regex.hpp"
#include "namecheck/pos_tagger.hpp"
#include "namecheck/source_scanner.hpp"
#include "namecheck/version.hpp"

namespace namecheck {

inline constexpr std::string_view kContextNote =
    "name match relies on the methods-under-test heuristic";

struct TestReport {
  std::string class_name;
  std::string name;
  SourceLocation location;
  std::vector<std::string> methods_under_test;
  std::optional<NameMatch> name_match;
  std::optional<BodyMatch> body_match;
  Classification classification;
  std::vector<Suggestion> suggestions;
  std::vector<std::string> notes;

  friend bool operator==(const TestReport&, const TestReport&) = default;
};

struct PatternCount {
  std::string pattern;  // serialized id, family label or "Overall"
  std::string label;
  std::size_t matches = 0;
  double percent = 0.0;

  friend bool operator==(const PatternCount&, const PatternCount&) = default;
};

struct MatchStats {
  std::size_t total_tests = 0;
  std::vector<PatternCount> name_patterns;  // catalog order
  PatternCount name_overall;
  std::vector<PatternCount> body_patterns;  // catalog order
  std::vector<PatternCount> body_families;  // summary order
  PatternCount body_overall;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

struct OutcomeCounts {
  std::size_t total = 0;
  std::size_t descriptive = 0;
  std::size_t non_descriptive = 0;
  std::size_t unknown = 0;

  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

struct ProjectReport {
  std::string schema_version = std::string(kReportSchemaVersion);
  std::string tool_version = std::string(kToolVersion);
  std::string catalog_version = std::string(kCatalogVersion);
  std::string alphabet_version = CodeAlphabet::standard().version();
  std::string regex_digest;
  std::string lexicon_digest;
  std::size_t files_scanned = 0;
  OutcomeCounts counts;
  MatchStats stats;
  std::vector<TestReport> tests;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const ProjectReport&, const ProjectReport&) = default;
};

/// Lexicon and regular expressions used by an analysis, with digests of
/// their source text for the report header.
class Analyzer {
 public:
  Analyzer()
      : lexicon_(Lexicon::standard()),
        regexes_(default_name_regexes()),
        lexicon_digest_(fnv1a_hex(kDefaultLexicon)),
        regex_digest_(fnv1a_hex(kDefaultNameRegexes)) {}

  /// Loads the lexicon and regex files named in the config, if any.
  explicit Analyzer(const AnalysisConfig& config) : Analyzer() {
    if (config.lexicon_file) {
      const std::string text = read_text_file(*config.lexicon_file);
      lexicon_ = Lexicon::parse(text);
      lexicon_digest_ = fnv1a_hex(text);
    }
    if (config.regex_file) {
      const std::string text = read_text_file(*config.regex_file);
      regexes_ = parse_regex_file(text);
      regex_digest_ = fnv1a_hex(text);
    }
  }

  Analyzer(Lexicon lexicon, std::vector<RegexSubPattern> regexes,
           std::string lexicon_digest, std::string regex_digest)
      : lexicon_(std::move(lexicon)),
        regexes_(std::move(regexes)),
        lexicon_digest_(std::move(lexicon_digest)),
        regex_digest_(std::move(regex_digest)) {}

  TestReport analyze(const TestCase& test) const {
    TestReport r;
    r.class_name = test.class_name;
    r.name = test.name;
    r.location = test.location;
    r.methods_under_test = test.methods_under_test;
    NameMatcherOptions options;
    options.lexicon = &lexicon_;
    options.regexes = &regexes_;
    r.name_match = match_name(test.name, test.methods_under_test, options);
    r.body_match = match_body(test);
    std::optional<Extraction> name_ext;
    std::optional<Extraction> body_ext;
    if (r.name_match) name_ext = r.name_match->extraction;
    if (r.body_match) body_ext = r.body_match->extraction;
    r.classification = classify(name_ext, body_ext);
    r.suggestions = suggest(r.classification, name_ext, body_ext);
    if (r.name_match && r.name_match->used_context) r.notes.emplace_back(kContextNote);
    return r;
  }

  const std::string& lexicon_digest() const { return lexicon_digest_; }
  const std::string& regex_digest() const { return regex_digest_; }

 private:
  Lexicon lexicon_;
  std::vector<RegexSubPattern> regexes_;
  std::string lexicon_digest_;
  std::string regex_digest_;
};

inline double percent_of(std::size_t part, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

/// Per-pattern match counts and percentages over all tests.
inline MatchStats compute_match_stats(const std::vector<TestReport>& reports) {
  MatchStats s;
  s.total_tests = reports.size();
  std::map<NamePattern, std::size_t> name_counts;
  std::map<BodyPattern, std::size_t> body_counts;
  std::map<std::string_view, std::size_t> family_counts;
  std::size_t name_total = 0;
  std::size_t body_total = 0;
  for (const auto& r : reports) {
    if (r.name_match) {
      ++name_counts[r.name_match->pattern];
      ++name_total;
    }
    if (r.body_match) {
      ++body_counts[r.body_match->pattern];
      ++family_counts[body_pattern_info(r.body_match->pattern).family];
      ++body_total;
    }
  }
  auto row = [&](std::string_view id, std::string_view label, std::size_t n) {
    return PatternCount{std::string(id), std::string(label), n, percent_of(n, s.total_tests)};
  };
  for (const auto& info : kNamePatterns) {
    s.name_patterns.push_back(row(info.name, info.label, name_counts[info.id]));
  }
  for (const auto& info : kBodyPatterns) {
    s.body_patterns.push_back(row(info.name, info.label, body_counts[info.id]));
  }
  for (std::string_view family : kBodyFamilies) {
    s.body_families.push_back(row(family, family, family_counts[family]));
  }
  s.name_overall = row("Overall", "Overall", name_total);
  s.body_overall = row("Overall", "Overall", body_total);
  return s;
}

inline OutcomeCounts count_outcomes(const std::vector<TestReport>& reports) {
  OutcomeCounts c;
  c.total = reports.size();
  for (const auto& r : reports) {
    switch (r.classification.outcome) {
      case Outcome::Descriptive: ++c.descriptive; break;
      case Outcome::NonDescriptive: ++c.non_descriptive; break;
      case Outcome::Unknown: ++c.unknown; break;
    }
  }
  return c;
}

/// Analyzes already-parsed tests.
inline ProjectReport analyze_tests(const std::vector<TestCase>& tests,
                                   const Analyzer& analyzer = Analyzer()) {
  ProjectReport report;
  report.regex_digest = analyzer.regex_digest();
  report.lexicon_digest = analyzer.lexicon_digest();
  report.tests.reserve(tests.size());
  for (const auto& t : tests) report.tests.push_back(analyzer.analyze(t));
  report.counts = count_outcomes(report.tests);
  report.stats = compute_match_stats(report.tests);
  return report;
}

/// Scans `root` and analyzes every test found. Throws IoError for an
/// unreadable root and ConfigError for bad lexicon/regex files.
inline ProjectReport analyze_project(const std::filesystem::path& root,
                                     const AnalysisConfig& config = {}) {
  const Analyzer analyzer(config);
  ScanOptions options;
  options.include = config.include;
  options.exclude = config.exclude;
  ScanResult scan = scan_directory(root, options);
  ProjectReport report = analyze_tests(scan.tests, analyzer);
  report.files_scanned = scan.files_scanned;
  report.diagnostics = std::move(scan.diagnostics);
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

enum class ReportFormat { Text, Records };

inline ReportFormat report_format_from_string(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "records") return ReportFormat::Records;
  throw UnknownFormat("unknown report format '" + std::string(s) +
                      "' (expected text or records)");
}

struct RenderOptions {
  /// Tests to list. Text output lists non-descriptive tests by default.
  std::optional<Outcome> only;
  bool stats = false;
};

namespace report_detail {

using nlohmann::json;

inline json to_json(const Extraction& e) {
  return {{"action", e.action}, {"predicate", e.predicate}, {"scenario", e.scenario}};
}

inline Extraction extraction_from_json(const json& j, ExtractionSource source) {
  Extraction e;
  e.action = j.at("action").get<std::string>();
  e.predicate = j.at("predicate").get<std::string>();
  e.scenario = j.at("scenario").get<std::string>();
  e.source = source;
  return e;
}

inline json to_json(const PatternCount& c) {
  return {{"pattern", c.pattern},
          {"label", c.label},
          {"matches", c.matches},
          {"percent", c.percent}};
}

inline PatternCount count_from_json(const json& j) {
  return {j.at("pattern").get<std::string>(), j.at("label").get<std::string>(),
          j.at("matches").get<std::size_t>(), j.at("percent").get<double>()};
}

inline json to_json(const TestReport& r) {
  json t;
  t["class"] = r.class_name;
  t["name"] = r.name;
  t["path"] = r.location.path;
  t["begin_line"] = r.location.begin_line;
  t["end_line"] = r.location.end_line;
  t["methods_under_test"] = r.methods_under_test;
  if (r.name_match) {
    t["name_match"] = {{"pattern", to_string(r.name_match->pattern)},
                       {"sub_pattern", r.name_match->sub_pattern},
                       {"used_context", r.name_match->used_context},
                       {"extraction", to_json(r.name_match->extraction)}};
  } else {
    t["name_match"] = nullptr;
  }
  if (r.body_match) {
    t["body_match"] = {{"pattern", to_string(r.body_match->pattern)},
                       {"diagnostics", r.body_match->diagnostics},
                       {"extraction", to_json(r.body_match->extraction)}};
  } else {
    t["body_match"] = nullptr;
  }
  t["outcome"] = to_string(r.classification.outcome);
  json comps = json::object();
  for (Component c : kComponents) {
    comps[std::string(to_string(c))] = to_string(r.classification.get(c));
  }
  t["components"] = comps;
  json sugg = json::array();
  for (const auto& s : r.suggestions) {
    sugg.push_back({{"kind", to_string(s.kind)},
                    {"component", to_string(s.component)},
                    {"name_value", s.name_value},
                    {"body_value", s.body_value}});
  }
  t["suggestions"] = sugg;
  t["notes"] = r.notes;
  return t;
}

template <typename T>
T require(std::optional<T> v, const std::string& what) {
  if (!v) throw ParseError("records: bad " + what);
  return *v;
}

inline TestReport test_from_json(const json& t) {
  TestReport r;
  r.class_name = t.at("class").get<std::string>();
  r.name = t.at("name").get<std::string>();
  r.location.path = t.at("path").get<std::string>();
  r.location.begin_line = t.at("begin_line").get<std::size_t>();
  r.location.end_line = t.at("end_line").get<std::size_t>();
  r.methods_under_test = t.at("methods_under_test").get<std::vector<std::string>>();
  if (const auto& n = t.at("name_match"); !n.is_null()) {
    NameMatch m;
    m.pattern = require(name_pattern_from_string(n.at("pattern").get<std::string>()),
                        "name pattern");
    m.sub_pattern = n.at("sub_pattern").get<std::string>();
    m.used_context = n.at("used_context").get<bool>();
    m.extraction = extraction_from_json(n.at("extraction"), ExtractionSource::Name);
    r.name_match = m;
  }
  if (const auto& b = t.at("body_match"); !b.is_null()) {
    BodyMatch m;
    m.pattern = require(body_pattern_from_string(b.at("pattern").get<std::string>()),
                        "body pattern");
    m.diagnostics = b.at("diagnostics").get<std::vector<std::string>>();
    m.extraction = extraction_from_json(b.at("extraction"), ExtractionSource::Body);
    r.body_match = m;
  }
  r.classification.outcome =
      require(outcome_from_string(t.at("outcome").get<std::string>()), "outcome");
  for (Component c : kComponents) {
    r.classification.components[static_cast<std::size_t>(c)] = require(
        component_result_from_string(
            t.at("components").at(std::string(to_string(c))).get<std::string>()),
        "component result");
  }
  for (const auto& s : t.at("suggestions")) {
    Suggestion sg;
    sg.kind = require(suggestion_kind_from_string(s.at("kind").get<std::string>()),
                      "suggestion kind");
    sg.component = require(component_from_string(s.at("component").get<std::string>()),
                           "suggestion component");
    sg.name_value = s.at("name_value").get<std::string>();
    sg.body_value = s.at("body_value").get<std::string>();
    r.suggestions.push_back(sg);
  }
  r.notes = t.at("notes").get<std::vector<std::string>>();
  return r;
}

inline bool listed(const TestReport& r, const std::optional<Outcome>& only) {
  return !only || r.classification.outcome == *only;
}

inline std::string dash(const std::string& s) { return s.empty() ? "-" : s; }

inline std::string triple(const Extraction& e) {
  return "(" + dash(e.action) + ", " + dash(e.predicate) + ", " + dash(e.scenario) + ")";
}

inline std::string format_percent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", p);
  return buf;
}

inline void table(std::ostringstream& out, const std::string& title,
                  const std::vector<PatternCount>& rows, const PatternCount& overall) {
  std::size_t width = title.size();
  for (const auto& r : rows) width = std::max(width, r.label.size());
  auto line = [&](const std::string& label, const std::string& n, const std::string& pct) {
    out << "  " << label << std::string(width - label.size() + 2, ' ');
    out << std::string(n.size() < 9 ? 9 - n.size() : 0, ' ') << n;
    out << std::string(pct.size() < 9 ? 9 - pct.size() : 0, ' ') << pct << '\n';
  };
  line(title, "matches", "%");
  for (const auto& r : rows) {
    line(r.label, std::to_string(r.matches), format_percent(r.percent));
  }
  line(overall.label, std::to_string(overall.matches), format_percent(overall.percent));
}

}  // namespace report_detail

/// Machine-readable report: one JSON document with sorted keys.
/// Tests not selected by `options.only` are left out of the `tests` array.
inline std::string render_records(const ProjectReport& report,
                                  const RenderOptions& options = {}) {
  using report_detail::json;
  using report_detail::to_json;
  json doc;
  doc["schema_version"] = report.schema_version;
  doc["tool_version"] = report.tool_version;
  doc["catalog_version"] = report.catalog_version;
  doc["alphabet_version"] = report.alphabet_version;
  doc["regex_digest"] = report.regex_digest;
  doc["lexicon_digest"] = report.lexicon_digest;
  doc["files_scanned"] = report.files_scanned;
  doc["counts"] = {{"total", report.counts.total},
                   {"descriptive", report.counts.descriptive},
                   {"non-descriptive", report.counts.non_descriptive},
                   {"unknown", report.counts.unknown}};
  json stats;
  stats["total_tests"] = report.stats.total_tests;
  stats["name_patterns"] = json::array();
  for (const auto& c : report.stats.name_patterns) stats["name_patterns"].push_back(to_json(c));
  stats["name_overall"] = to_json(report.stats.name_overall);
  stats["body_patterns"] = json::array();
  for (const auto& c : report.stats.body_patterns) stats["body_patterns"].push_back(to_json(c));
  stats["body_families"] = json::array();
  for (const auto& c : report.stats.body_families) stats["body_families"].push_back(to_json(c));
  stats["body_overall"] = to_json(report.stats.body_overall);
  doc["stats"] = stats;
  doc["diagnostics"] = json::array();
  for (const auto& d : report.diagnostics) {
    doc["diagnostics"].push_back({{"path", d.path}, {"line", d.line}, {"message", d.message}});
  }
  doc["filter"] = options.only ? json(std::string(to_string(*options.only))) : json(nullptr);
  doc["tests"] = json::array();
  for (const auto& t : report.tests) {
    if (report_detail::listed(t, options.only)) doc["tests"].push_back(to_json(t));
  }
  return doc.dump(2) + "\n";
}

/// Inverse of render_records. Throws ParseError.
inline ProjectReport parse_records(std::string_view text) {
  using report_detail::json;
  try {
    const json doc = json::parse(text);
    ProjectReport r;
    r.schema_version = doc.at("schema_version").get<std::string>();
    if (r.schema_version != kReportSchemaVersion) {
      throw ParseError("records: unsupported schema version " + r.schema_version);
    }
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.catalog_version = doc.at("catalog_version").get<std::string>();
    r.alphabet_version = doc.at("alphabet_version").get<std::string>();
    r.regex_digest = doc.at("regex_digest").get<std::string>();
    r.lexicon_digest = doc.at("lexicon_digest").get<std::string>();
    r.files_scanned = doc.at("files_scanned").get<std::size_t>();
    const auto& c = doc.at("counts");
    r.counts = {c.at("total").get<std::size_t>(), c.at("descriptive").get<std::size_t>(),
                c.at("non-descriptive").get<std::size_t>(), c.at("unknown").get<std::size_t>()};
    const auto& s = doc.at("stats");
    r.stats.total_tests = s.at("total_tests").get<std::size_t>();
    for (const auto& x : s.at("name_patterns")) {
      r.stats.name_patterns.push_back(report_detail::count_from_json(x));
    }
    r.stats.name_overall = report_detail::count_from_json(s.at("name_overall"));
    for (const auto& x : s.at("body_patterns")) {
      r.stats.body_patterns.push_back(report_detail::count_from_json(x));
    }
    for (const auto& x : s.at("body_families")) {
      r.stats.body_families.push_back(report_detail::count_from_json(x));
    }
    r.stats.body_overall = report_detail::count_from_json(s.at("body_overall"));
    for (const auto& d : doc.at("diagnostics")) {
      r.diagnostics.push_back({d.at("path").get<std::string>(), d.at("line").get<std::size_t>(),
                               d.at("message").get<std::string>()});
    }
    for (const auto& t : doc.at("tests")) r.tests.push_back(report_detail::test_from_json(t));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("records: ") + e.what());
  }
}

/// Human-readable report. Each listed test shows the body and name triples
/// as (action, predicate, scenario) followed by the suggestions.
inline std::string render_text(const ProjectReport& report, const RenderOptions& options = {}) {
  using namespace report_detail;
  std::ostringstream out;
  const Outcome shown = options.only.value_or(Outcome::NonDescriptive);
  out << "namecheck " << report.tool_version << ": " << report.counts.total << " tests in "
      << report.files_scanned << " files, " << report.counts.descriptive << " descriptive, "
      << report.counts.non_descriptive << " non-descriptive, " << report.counts.unknown
      << " unknown\n";
  for (const auto& t : report.tests) {
    if (t.classification.outcome != shown) continue;
    out << '\n'
        << t.location.path << ':' << t.location.begin_line << ": " << t.class_name << '.'
        << t.name << " [" << to_string(t.classification.outcome) << "]\n";
    out << "  body(action, predicate, scenario) = ";
    if (t.body_match) {
      out << triple(t.body_match->extraction) << "  " << to_string(t.body_match->pattern);
    } else {
      out << "no match";
    }
    out << '\n';
    out << "  name(action, predicate, scenario) = ";
    if (t.name_match) {
      out << triple(t.name_match->extraction) << "  " << to_string(t.name_match->pattern);
      if (!t.name_match->sub_pattern.empty()) out << '/' << t.name_match->sub_pattern;
    } else {
      out << "no match";
    }
    out << '\n';
    for (const auto& s : t.suggestions) {
      out << "  " << to_string(s.kind) << ' ' << to_string(s.component) << ' ';
      switch (s.kind) {
        case SuggestionKind::Add: out << '"' << s.body_value << '"'; break;
        case SuggestionKind::Remove: out << '"' << s.name_value << '"'; break;
        case SuggestionKind::Replace:
          out << '"' << s.name_value << "\" with \"" << s.body_value << '"';
          break;
      }
      out << '\n';
    }
    for (const auto& n : t.notes) out << "  note: " << n << '\n';
  }
  if (options.stats) {
    out << "\nName patterns (" << report.stats.total_tests << " tests)\n";
    table(out, "Name Pattern", report.stats.name_patterns, report.stats.name_overall);
    out << "\nBody patterns\n";
    table(out, "Body Pattern", report.stats.body_patterns, report.stats.body_overall);
    out << "\nBody pattern families\n";
    table(out, "Body Pattern", report.stats.body_families, report.stats.body_overall);
  }
  for (const auto& d : report.diagnostics) {
    out << "\nwarning: " << d.path;
    if (d.line) out << ':' << d.line;
    out << ": " << d.message;
  }
  if (!report.diagnostics.empty()) out << '\n';
  return out.str();
}

inline std::string render_report(const ProjectReport& report, ReportFormat format,
                                 const RenderOptions& options = {}) {
  return format == ReportFormat::Records ? render_records(report, options)
                                         : render_text(report, options);
}

inline std::string render_report(const ProjectReport& report, std::string_view format,
                                 const RenderOptions& options = {}) {
  return render_report(report, report_format_from_string(format), options);
}

}  // namespace namecheck

#endif  // NAMECHECK_REPORT_HPP
