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

// Maps test bodies to integer code sequences and back to text skeletons.

#ifndef NAMECHECK_ABSTRACTION_HPP
#define NAMECHECK_ABSTRACTION_HPP

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namecheck/error.hpp"
#include "namecheck/source_model.hpp"

namespace namecheck {

/// Every symbol a body can be abstracted to: simple statement kinds, the
/// Start/End markers, and open/close markers of compound statements.
enum class Symbol {
  Start,
  Declaration,
  MethodInvocation,
  End,
  Assertion,
  Fail,
  Return,
  TryOpen,
  CatchOpen,
  NewObject,
  CatchClose,
  TryClose,
  Other,
  IfOpen,
  IfClose,
  ElseOpen,
  ElseClose,
  LoopOpen,
  LoopClose,
  FinallyOpen,
  FinallyClose,
};

inline constexpr std::size_t kSymbolCount = 21;

struct SymbolInfo {
  Symbol symbol;
  std::string_view name;   // stable identifier used in files
  std::string_view token;  // skeleton text
};

inline constexpr std::array<SymbolInfo, kSymbolCount> kSymbols = {{
    {Symbol::Start, "Start", "start{"},
    {Symbol::Declaration, "Declaration", "declaration"},
    {Symbol::MethodInvocation, "MethodInvocation", "methodCall"},
    {Symbol::End, "End", "}end"},
    {Symbol::Assertion, "Assertion", "assertion"},
    {Symbol::Fail, "Fail", "fail"},
    {Symbol::Return, "Return", "return"},
    {Symbol::TryOpen, "TryOpen", "try{"},
    {Symbol::CatchOpen, "CatchOpen", "catch{"},
    {Symbol::NewObject, "NewObject", "newObject"},
    {Symbol::CatchClose, "CatchClose", "}catch"},
    {Symbol::TryClose, "TryClose", "}try"},
    {Symbol::Other, "Other", "other"},
    {Symbol::IfOpen, "IfOpen", "if{"},
    {Symbol::IfClose, "IfClose", "}if"},
    {Symbol::ElseOpen, "ElseOpen", "else{"},
    {Symbol::ElseClose, "ElseClose", "}else"},
    {Symbol::LoopOpen, "LoopOpen", "loop{"},
    {Symbol::LoopClose, "LoopClose", "}loop"},
    {Symbol::FinallyOpen, "FinallyOpen", "finally{"},
    {Symbol::FinallyClose, "FinallyClose", "}finally"},
}};

inline const SymbolInfo& symbol_info(Symbol s) {
  return kSymbols[static_cast<std::size_t>(s)];
}

inline std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (const auto& info : kSymbols) {
    if (info.name == name) return info.symbol;
  }
  return std::nullopt;
}

/// Bijective, versioned mapping between symbols and small integers.
class CodeAlphabet {
 public:
  CodeAlphabet() = default;
  CodeAlphabet(std::string version, std::vector<std::pair<Symbol, int>> entries)
      : version_(std::move(version)) {
    for (const auto& [symbol, code] : entries) add(symbol, code);
  }

  /// The default alphabet, version "1": codes 0..20 in Symbol order, so
  /// Start=0, Declaration=1, MethodInvocation=2, End=3.
  static const CodeAlphabet& standard() {
    static const CodeAlphabet kStandard = [] {
      CodeAlphabet a;
      a.version_ = "1";
      for (std::size_t i = 0; i < kSymbolCount; ++i) {
        a.add(kSymbols[i].symbol, static_cast<int>(i));
      }
      return a;
    }();
    return kStandard;
  }

  void add(Symbol symbol, int code) {
    if (code < 0) throw Error("alphabet codes must be non-negative");
    if (to_code_.count(symbol) || to_symbol_.count(code)) {
      throw Error("alphabet entry for '" + std::string(symbol_info(symbol).name) +
                  "' or code " + std::to_string(code) + " is duplicated");
    }
    to_code_[symbol] = code;
    to_symbol_[code] = symbol;
  }

  int encode(Symbol s) const {
    auto it = to_code_.find(s);
    if (it == to_code_.end()) {
      throw UnknownKind("alphabet " + version_ + " has no code for '" +
                        std::string(symbol_info(s).name) + "'");
    }
    return it->second;
  }

  Symbol decode(int code) const {
    auto it = to_symbol_.find(code);
    if (it == to_symbol_.end()) {
      throw UnknownCode("alphabet " + version_ + " has no symbol for code " +
                        std::to_string(code));
    }
    return it->second;
  }

  bool contains(int code) const { return to_symbol_.count(code) != 0; }
  const std::string& version() const { return version_; }
  std::size_t size() const { return to_code_.size(); }

  /// Entries ordered by code.
  std::vector<std::pair<int, Symbol>> entries() const {
    return {to_symbol_.begin(), to_symbol_.end()};
  }

  friend bool operator==(const CodeAlphabet& a, const CodeAlphabet& b) {
    return a.version_ == b.version_ && a.to_code_ == b.to_code_;
  }

 private:
  std::string version_;
  std::map<Symbol, int> to_code_;
  std::map<int, Symbol> to_symbol_;
};

struct AbstractedSequence {
  std::vector<int> codes;
  const TestCase* origin = nullptr;
};

namespace detail {

inline Symbol simple_symbol(StatementKind kind) {
  switch (kind) {
    case StatementKind::Declaration: return Symbol::Declaration;
    case StatementKind::MethodInvocation: return Symbol::MethodInvocation;
    case StatementKind::Assertion: return Symbol::Assertion;
    case StatementKind::Fail: return Symbol::Fail;
    case StatementKind::Return: return Symbol::Return;
    case StatementKind::NewObject: return Symbol::NewObject;
    default: return Symbol::Other;
  }
}

inline void emit(const std::vector<Statement>& stmts, const CodeAlphabet& alphabet,
                 std::vector<int>& out) {
  for (const auto& s : stmts) {
    switch (s.kind) {
      case StatementKind::IfElse:
        out.push_back(alphabet.encode(Symbol::IfOpen));
        emit(s.children, alphabet, out);
        out.push_back(alphabet.encode(Symbol::IfClose));
        if (s.alternative) {
          out.push_back(alphabet.encode(Symbol::ElseOpen));
          emit(*s.alternative, alphabet, out);
          out.push_back(alphabet.encode(Symbol::ElseClose));
        }
        break;
      case StatementKind::Loop:
        out.push_back(alphabet.encode(Symbol::LoopOpen));
        emit(s.children, alphabet, out);
        out.push_back(alphabet.encode(Symbol::LoopClose));
        break;
      case StatementKind::TryCatch:
        out.push_back(alphabet.encode(Symbol::TryOpen));
        emit(s.children, alphabet, out);
        for (const auto& handler : s.handlers) {
          out.push_back(alphabet.encode(Symbol::CatchOpen));
          emit(handler, alphabet, out);
          out.push_back(alphabet.encode(Symbol::CatchClose));
        }
        if (s.finalizer) {
          out.push_back(alphabet.encode(Symbol::FinallyOpen));
          emit(*s.finalizer, alphabet, out);
          out.push_back(alphabet.encode(Symbol::FinallyClose));
        }
        out.push_back(alphabet.encode(Symbol::TryClose));
        break;
      default:
        out.push_back(alphabet.encode(simple_symbol(s.kind)));
        break;
    }
  }
}

}  // namespace detail

/// Codes for a statement list wrapped in Start/End. Compound statements emit
/// an open code, their nested statements and a close code. A try statement
/// nests its catch and finally blocks before its own close code:
/// `try{ .. catch{ .. }catch finally{ .. }finally }try`.
inline std::vector<int> abstract_statements(const std::vector<Statement>& stmts,
                                            const CodeAlphabet& alphabet =
                                                CodeAlphabet::standard()) {
  std::vector<int> out;
  out.push_back(alphabet.encode(Symbol::Start));
  detail::emit(stmts, alphabet, out);
  out.push_back(alphabet.encode(Symbol::End));
  return out;
}

inline AbstractedSequence abstract(const TestCase& test,
                                   const CodeAlphabet& alphabet =
                                       CodeAlphabet::standard()) {
  return {abstract_statements(test.statements, alphabet), &test};
}

/// Skeleton text with `*` wildcard gaps, e.g. "start{ * try{ * }try * }end".
inline std::string reconstruct(const std::vector<int>& codes,
                               const CodeAlphabet& alphabet =
                                   CodeAlphabet::standard()) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) out += " * ";
    out += symbol_info(alphabet.decode(codes[i])).token;
  }
  return out;
}

/// Inverse of reconstruct. Throws ParseError on an unknown token.
inline std::vector<int> parse_skeleton(std::string_view skeleton,
                                       const CodeAlphabet& alphabet =
                                           CodeAlphabet::standard()) {
  std::vector<int> out;
  std::istringstream in{std::string(skeleton)};
  std::string tok;
  while (in >> tok) {
    if (tok == "*") continue;
    auto it = std::find_if(kSymbols.begin(), kSymbols.end(),
                           [&](const SymbolInfo& s) { return s.token == tok; });
    if (it == kSymbols.end()) throw ParseError("unknown skeleton token '" + tok + "'");
    out.push_back(alphabet.encode(it->symbol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequence database files.
//
//   @alphabet 1 0=Start 1=Declaration 2=MethodInvocation ...
//   0 1 2 4 3
//   0 7 8 10 11 3
//
// The header line is optional and must precede the sequences; without it the
// standard alphabet applies. Every code must belong to the alphabet. Sequences
// may also use the SPMF layout, where every item is followed by -1 and each
// sequence ends with -2.

struct SequenceDatabase {
  CodeAlphabet alphabet = CodeAlphabet::standard();
  std::vector<std::vector<int>> sequences;
};

inline void write_sequence_database(std::ostream& out, const SequenceDatabase& db) {
  out << "@alphabet " << db.alphabet.version();
  for (const auto& [code, symbol] : db.alphabet.entries()) {
    out << ' ' << code << '=' << symbol_info(symbol).name;
  }
  out << '\n';
  for (const auto& seq : db.sequences) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) out << ' ';
      out << seq[i];
    }
    out << '\n';
  }
}

inline SequenceDatabase read_sequence_database(std::istream& in) {
  SequenceDatabase db;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    if (line[first] == '@') {
      std::string tag;
      std::string version;
      fields >> tag >> version;
      if (tag != "@alphabet" || version.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad header");
      }
      std::vector<std::pair<Symbol, int>> entries;
      std::string entry;
      while (fields >> entry) {
        const auto eq = entry.find('=');
        std::optional<Symbol> sym =
            eq == std::string::npos ? std::nullopt : symbol_from_name(entry.substr(eq + 1));
        if (!sym) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": bad alphabet entry '" + entry + "'");
        }
        try {
          entries.emplace_back(*sym, std::stoi(entry.substr(0, eq)));
        } catch (const std::logic_error&) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": bad alphabet code in '" + entry + "'");
        }
      }
      try {
        db.alphabet = CodeAlphabet(version, entries);
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      continue;
    }
    std::vector<int> seq;
    std::string tok;
    while (fields >> tok) {
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad code '" + tok + "'");
      }
      if (value == -1 || value == -2) continue;
      if (value < 0 || !db.alphabet.contains(value)) {
        throw ParseError("line " + std::to_string(line_no) + ": code " + tok +
                         " is not in alphabet " + db.alphabet.version());
      }
      seq.push_back(value);
    }
    db.sequences.push_back(std::move(seq));
  }
  return db;
}

}  // namespace namecheck

#endif  // NAMECHECK_ABSTRACTION_HPP
