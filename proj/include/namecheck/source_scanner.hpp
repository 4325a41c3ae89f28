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

// Collects JUnit test methods from a source tree.

#ifndef NAMECHECK_SOURCE_SCANNER_HPP
#define NAMECHECK_SOURCE_SCANNER_HPP

#include <fnmatch.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namecheck/error.hpp"
#include "namecheck/java_parser.hpp"
#include "namecheck/source_model.hpp"

namespace namecheck {

struct ScanOptions {
  /// fnmatch-style globs over the path relative to the root. When non-empty a
  /// file must match at least one include glob.
  std::vector<std::string> include;
  std::vector<std::string> exclude;
};

struct ScanResult {
  std::vector<TestCase> tests;
  std::vector<Diagnostic> diagnostics;
  std::size_t files_scanned = 0;
};

/// An in-memory source file: path (as reported) and contents.
struct SourceFile {
  std::string path;
  std::string content;
};

inline bool glob_match(const std::string& pattern, const std::string& path) {
  return ::fnmatch(pattern.c_str(), path.c_str(), 0) == 0;
}

inline bool path_selected(const std::string& rel, const ScanOptions& options) {
  if (!options.include.empty() &&
      std::none_of(options.include.begin(), options.include.end(),
                   [&](const std::string& g) { return glob_match(g, rel); })) {
    return false;
  }
  return std::none_of(options.exclude.begin(), options.exclude.end(),
                      [&](const std::string& g) { return glob_match(g, rel); });
}

namespace detail {

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

inline bool icontains(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (iequals(haystack.substr(i, needle.size()), needle)) return true;
  }
  return false;
}

struct ParsedFile {
  std::string path;
  java::CompilationUnit unit;
};

inline std::vector<std::string> production_class_names(const std::string& test_class) {
  std::vector<std::string> out;
  for (std::string_view suffix : {"Tests", "Test"}) {
    if (test_class.size() > suffix.size() &&
        test_class.compare(test_class.size() - suffix.size(), suffix.size(),
                           suffix) == 0) {
      out.push_back(test_class.substr(0, test_class.size() - suffix.size()));
      break;
    }
  }
  if (test_class.size() > 4 && test_class.compare(0, 4, "Test") == 0 &&
      std::isupper(static_cast<unsigned char>(test_class[4]))) {
    out.push_back(test_class.substr(4));
  }
  return out;
}

inline bool visible_from(const java::CompilationUnit& from,
                         const std::string& package, const std::string& name) {
  if (from.package == package) return true;
  const std::string qualified = package.empty() ? name : package + "." + name;
  for (const std::string& imp : from.imports) {
    if (imp == qualified) return true;
    if (!package.empty() && imp == package + ".*") return true;
  }
  return false;
}

}  // namespace detail

/// JUnit 4/5 annotated method, or JUnit 3 public void no-arg `test*` method
/// in a class whose superclass name contains "Test".
inline bool is_test_method(const java::MethodDecl& m, const java::ClassDecl& cls) {
  if (!m.has_body) return false;
  if (m.has_annotation("Test") || m.has_annotation("ParameterizedTest") ||
      m.has_annotation("RepeatedTest")) {
    return true;
  }
  return m.has_modifier("public") && !m.has_modifier("static") &&
         m.return_type == "void" && m.parameter_count == 0 &&
         m.name.size() > 4 && m.name.compare(0, 4, "test") == 0 &&
         cls.extends.find("Test") != std::string::npos;
}

/// Candidate tested-method names for one test class: invoked methods whose
/// names occur (case-insensitively) in a test name of the class, plus the
/// public methods of the production class the test class is named after.
/// `unit` is the compilation unit holding the class; `files` is every
/// scanned file, used to resolve the production class.
inline std::vector<std::string> extract_methods_under_test(
    const java::ClassDecl& test_class, const java::CompilationUnit& unit,
    const std::vector<detail::ParsedFile>& files) {
  std::set<std::string> out;
  std::vector<std::string> test_names;
  for (const auto& m : test_class.methods) {
    if (is_test_method(m, test_class)) test_names.push_back(m.name);
  }
  for (const auto& m : test_class.methods) {
    if (!is_test_method(m, test_class)) continue;
    visit_statements(m.body, [&](const Statement& s) {
      if (!s.expression) return;
      for (const Expression* call : collect_calls(*s.expression)) {
        if (is_assertion_name(call->callee_name)) continue;
        for (const auto& name : test_names) {
          if (detail::icontains(name, call->callee_name)) {
            out.insert(call->callee_name);
            break;
          }
        }
      }
    });
  }
  for (const std::string& target : detail::production_class_names(test_class.name)) {
    for (const auto& file : files) {
      for (const auto& cls : file.unit.classes) {
        if (cls.name != target ||
            !detail::visible_from(unit, file.unit.package, cls.name)) {
          continue;
        }
        for (const auto& m : cls.methods) {
          if (m.name == cls.name) continue;  // constructor
          if (m.has_modifier("public") ||
              (cls.kind == "interface" && !m.has_modifier("private"))) {
            out.insert(m.name);
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

/// Parses the given files and returns their test methods, sorted by path and
/// line. Files that fail to parse become diagnostics.
inline ScanResult scan_sources(std::vector<SourceFile> sources) {
  std::sort(sources.begin(), sources.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  ScanResult result;
  std::vector<detail::ParsedFile> files;
  for (auto& src : sources) {
    ++result.files_scanned;
    try {
      files.push_back({src.path, java::parse_compilation_unit(src.content, src.path)});
      for (auto& d : files.back().unit.diagnostics) result.diagnostics.push_back(d);
    } catch (const ParseError& e) {
      result.diagnostics.push_back({src.path, 0, e.what()});
    }
  }
  for (const auto& file : files) {
    for (const auto& cls : file.unit.classes) {
      if (cls.is_abstract()) continue;
      bool has_tests = false;
      for (const auto& m : cls.methods) {
        if (is_test_method(m, cls) && !m.body_error) has_tests = true;
      }
      if (!has_tests) continue;
      const auto context = extract_methods_under_test(cls, file.unit, files);
      for (const auto& m : cls.methods) {
        if (!is_test_method(m, cls) || m.body_error) continue;
        TestCase t;
        t.name = m.name;
        t.statements = m.body;
        t.class_name = cls.name;
        t.methods_under_test = context;
        t.location = {file.path, m.begin_line, m.end_line};
        result.tests.push_back(std::move(t));
      }
    }
  }
  std::stable_sort(result.tests.begin(), result.tests.end(),
                   [](const TestCase& a, const TestCase& b) {
                     return std::tie(a.location.path, a.location.begin_line) <
                            std::tie(b.location.path, b.location.begin_line);
                   });
  return result;
}

/// Reads every `.java` file under `root` (recursively) and scans it.
/// Throws IoError if the root is missing or unreadable.
inline ScanResult scan_directory(const std::filesystem::path& root,
                                 const ScanOptions& options = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(root, ec) || ec) {
    throw IoError("source root does not exist: " + root.string());
  }
  std::vector<SourceFile> sources;
  std::vector<Diagnostic> unreadable;
  auto add = [&](const fs::path& p, const std::string& rel) {
    if (!path_selected(rel, options)) return;
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      unreadable.push_back({rel, 0, "cannot read file"});
      return;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.push_back({rel, buf.str()});
  };
  if (fs::is_regular_file(root, ec)) {
    add(root, root.filename().generic_string());
  } else {
    fs::recursive_directory_iterator it(
        root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw IoError("cannot read source root: " + root.string());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) break;
      const fs::path& p = it->path();
      if (!it->is_regular_file(ec) || p.extension() != ".java") continue;
      add(p, fs::relative(p, root, ec).generic_string());
    }
  }
  ScanResult result = scan_sources(std::move(sources));
  result.files_scanned += unreadable.size();
  result.diagnostics.insert(result.diagnostics.end(), unreadable.begin(),
                            unreadable.end());
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.path, a.line) < std::tie(b.path, b.line);
                   });
  return result;
}

/// Convenience wrapper returning only the tests.
inline std::vector<TestCase> parse_test_classes(const std::filesystem::path& root) {
  return scan_directory(root).tests;
}

}  // namespace namecheck

#endif  // NAMECHECK_SOURCE_SCANNER_HPP
