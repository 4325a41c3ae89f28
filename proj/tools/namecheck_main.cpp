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

// Command-line entry point.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "namecheck/namecheck.hpp"

namespace {

enum ExitCode { kOk = 0, kNonDescriptive = 1, kUsage = 2, kFatal = 3 };

struct AnalyzeArgs {
  std::string root;
  std::string format = "text";
  std::string config;
  std::string regexes;
  std::string lexicon;
  std::string only;
  bool stats = false;
};

struct MineArgs {
  std::string input;
  std::string min_support;
  std::size_t max_length = 0;
  bool spanning_only = false;
  bool group = false;
  std::string format = "text";
};

struct AbstractArgs {
  std::string root;
  std::string config;
  std::string output;
};

namecheck::AnalysisConfig build_config(const std::string& config_path,
                                       const std::string& regexes,
                                       const std::string& lexicon) {
  namecheck::AnalysisConfig cfg;
  if (!config_path.empty()) cfg = namecheck::load_config(config_path);
  if (!regexes.empty()) cfg.regex_file = regexes;
  if (!lexicon.empty()) cfg.lexicon_file = lexicon;
  for (const auto& file : {cfg.regex_file, cfg.lexicon_file}) {
    if (file && !std::filesystem::is_regular_file(*file)) {
      throw namecheck::ConfigError("cannot read " + file->string());
    }
  }
  return cfg;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw namecheck::IoError("cannot write " + path);
  out << text;
}

int run_analyze(const AnalyzeArgs& args) {
  namecheck::AnalysisConfig cfg = build_config(args.config, args.regexes, args.lexicon);
  if (!args.only.empty()) cfg.only = namecheck::outcome_from_string(args.only);
  const auto format = namecheck::report_format_from_string(args.format);
  const namecheck::ProjectReport report = namecheck::analyze_project(args.root, cfg);
  namecheck::RenderOptions options;
  options.only = cfg.only;
  options.stats = args.stats;
  std::cout << namecheck::render_report(report, format, options);
  return report.counts.non_descriptive > 0 ? kNonDescriptive : kOk;
}

std::string codes_text(const std::vector<int>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(codes[i]);
  }
  return out;
}

int run_mine(const MineArgs& args) {
  if (args.format != "text" && args.format != "records") {
    throw namecheck::UnknownFormat("unknown mine format '" + args.format + "'");
  }
  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw namecheck::IoError("cannot read " + args.input);
  const namecheck::SequenceDatabase db = namecheck::read_sequence_database(in);
  namecheck::MinerConfig cfg;
  cfg.min_support = namecheck::MinSupport::parse(args.min_support);
  cfg.max_length = args.max_length;
  auto patterns = namecheck::mine_closed(db, cfg);
  if (args.spanning_only) patterns = namecheck::filter_spanning(patterns, db.alphabet);

  std::ostringstream out;
  if (args.format == "records") {
    for (const auto& p : patterns) out << codes_text(p.items) << '\t' << p.support << '\n';
    std::cout << out.str();
    return kOk;
  }
  auto row = [&](const namecheck::ClosedPattern<int>& p) {
    char support[16];
    std::snprintf(support, sizeof support, "%7zu", p.support);
    out << support << "  " << namecheck::reconstruct(p.items, db.alphabet) << '\n';
  };
  out << db.sequences.size() << " sequences, min support "
      << cfg.min_support.resolve(db.sequences.size()) << ", " << patterns.size()
      << " closed patterns\n";
  if (args.group) {
    const auto grouped = namecheck::group_protopatterns(patterns, db.alphabet);
    for (const auto& g : grouped.by_control_flow) {
      out << "\n[" << g.key << "] " << g.patterns.size() << " patterns, total support "
          << g.total_support() << '\n';
      for (const auto& p : g.patterns) row(p);
    }
  } else {
    out << "support  pattern\n";
    for (const auto& p : patterns) row(p);
  }
  std::cout << out.str();
  return kOk;
}

int run_abstract(const AbstractArgs& args) {
  const namecheck::AnalysisConfig cfg = build_config(args.config, "", "");
  namecheck::ScanOptions options;
  options.include = cfg.include;
  options.exclude = cfg.exclude;
  const namecheck::ScanResult scan = namecheck::scan_directory(args.root, options);
  namecheck::SequenceDatabase db;
  for (const auto& t : scan.tests) db.sequences.push_back(namecheck::abstract(t).codes);
  std::ostringstream out;
  namecheck::write_sequence_database(out, db);
  write_output(out.str(), args.output);
  for (const auto& d : scan.diagnostics) {
    std::cerr << "warning: " << d.path << ':' << d.line << ": " << d.message << '\n';
  }
  return kOk;
}

std::string version_text() {
  std::ostringstream out;
  out << "namecheck " << namecheck::kToolVersion << '\n'
      << "pattern catalog " << namecheck::kCatalogVersion << '\n'
      << "report schema " << namecheck::kReportSchemaVersion << '\n'
      << "statement alphabet " << namecheck::CodeAlphabet::standard().version() << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks whether JUnit test names describe what the test bodies do."};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print tool, catalog and schema versions");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the tests under a source tree");
  analyze_cmd->add_option("root", analyze.root, "Project root")->required();
  analyze_cmd->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  analyze_cmd->add_option("--config", analyze.config, "JSON configuration file");
  analyze_cmd->add_option("--regexes", analyze.regexes, "Name regex sub-pattern file");
  analyze_cmd->add_option("--lexicon", analyze.lexicon, "Part-of-speech lexicon file");
  analyze_cmd->add_option("--only", analyze.only, "Outcome of the tests to list")
      ->check(CLI::IsMember({"descriptive", "non-descriptive", "unknown"}));
  analyze_cmd->add_flag("--stats", analyze.stats, "Append match-rate tables");

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine closed statement patterns");
  mine_cmd->add_option("--input", mine.input, "Sequence database file")->required();
  mine_cmd->add_option("--min-support", mine.min_support,
                       "Count (e.g. 3) or fraction of sequences (e.g. 0.25)")
      ->required();
  mine_cmd->add_option("--max-length", mine.max_length, "Longest pattern to report (0 = any)");
  mine_cmd->add_flag("--spanning-only", mine.spanning_only,
                     "Keep only patterns from start{ to }end");
  mine_cmd->add_flag("--group", mine.group, "Group patterns by control flow");
  mine_cmd->add_option("--format", mine.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));

  AbstractArgs abstract;
  auto* abstract_cmd =
      app.add_subcommand("abstract", "Write the statement sequences of every test");
  abstract_cmd->add_option("root", abstract.root, "Project root")->required();
  abstract_cmd->add_option("--config", abstract.config, "JSON configuration file");
  abstract_cmd->add_option("-o,--output", abstract.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (show_version) {
      std::cout << version_text();
      return kOk;
    }
    if (*analyze_cmd) return run_analyze(analyze);
    if (*mine_cmd) return run_mine(mine);
    if (*abstract_cmd) return run_abstract(abstract);
    std::cerr << app.help();
    return kUsage;
  } catch (const namecheck::ConfigError& e) {
    std::cerr << "namecheck: " << e.what() << '\n';
    return kUsage;
  } catch (const namecheck::UnknownFormat& e) {
    std::cerr << "namecheck: " << e.what() << '\n';
    return kUsage;
  } catch (const namecheck::SupportOutOfRange& e) {
    std::cerr << "namecheck: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "namecheck: " << e.what() << '\n';
    return kFatal;
  }
}
