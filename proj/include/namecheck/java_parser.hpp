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

// Tolerant recursive-descent parser for the subset of Java needed to model
// test methods: type and member structure, full statement structure inside
// method bodies, and expressions down to calls, receivers and arguments.
// Generic type arguments, lambdas and anonymous class bodies are skipped.

#ifndef NAMECHECK_JAVA_PARSER_HPP
#define NAMECHECK_JAVA_PARSER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namecheck/error.hpp"
#include "namecheck/java_lexer.hpp"
#include "namecheck/source_model.hpp"

namespace namecheck {

/// Matches `assert[A-Z].*` or exactly `fail`.
inline bool is_assertion_name(std::string_view name) {
  if (name == "fail") return true;
  return name.size() > 6 && name.substr(0, 6) == "assert" && name[6] >= 'A' &&
         name[6] <= 'Z';
}

/// True if the call itself or any call in its receiver chain is an assertion
/// (covers `Assert.assertEquals(..)` and fluent `assertThat(x).isEqualTo(y)`).
inline bool is_assertion_call(const Expression& expr) {
  for (const Expression* cur = &expr; cur != nullptr; cur = cur->receiver.get()) {
    if (cur->is_call() && is_assertion_name(cur->callee_name)) return true;
  }
  return false;
}

/// A per-file problem found while scanning sources. Never fatal to a scan.
struct Diagnostic {
  std::string path;
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

namespace java {

struct Annotation {
  std::string name;  // simple name, e.g. "Test"
  std::string arguments;
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> modifiers;
  std::vector<Annotation> annotations;
  std::string return_type;
  std::size_t parameter_count = 0;
  bool has_body = false;
  std::vector<Statement> body;
  std::size_t begin_line = 0;
  std::size_t end_line = 0;
  std::optional<Diagnostic> body_error;

  bool has_modifier(std::string_view m) const {
    return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end();
  }
  bool has_annotation(std::string_view a) const {
    return std::any_of(annotations.begin(), annotations.end(),
                       [&](const Annotation& x) { return x.name == a; });
  }
};

struct ClassDecl {
  std::string name;
  std::string kind;  // class, interface, enum, record, annotation
  std::string extends;
  std::vector<std::string> modifiers;
  std::vector<MethodDecl> methods;
  std::size_t line = 0;

  bool is_abstract() const {
    return kind == "interface" ||
           std::find(modifiers.begin(), modifiers.end(), "abstract") !=
               modifiers.end();
  }
};

/// Parsed file. Nested and local-to-file classes are flattened into
/// `classes` in declaration order.
struct CompilationUnit {
  std::string path;
  std::string package;
  std::vector<std::string> imports;
  std::vector<ClassDecl> classes;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline constexpr std::array<std::string_view, 8> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double"};

inline bool is_primitive(std::string_view s) {
  return std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), s) !=
             kPrimitiveTypes.end() ||
         s == "void";
}

inline constexpr std::array<std::string_view, 12> kModifiers = {
    "public",   "protected", "private",   "static", "final",
    "abstract", "native",    "synchronized", "transient", "volatile",
    "strictfp", "default"};

inline bool is_modifier(std::string_view s) {
  return std::find(kModifiers.begin(), kModifiers.end(), s) != kModifiers.end() ||
         s == "sealed" || s == "non-sealed";
}

inline constexpr std::array<std::string_view, 24> kStatementKeywords = {
    "if",     "else",   "for",      "while",   "do",       "try",
    "catch",  "finally", "switch",  "case",    "return",   "throw",
    "break",  "continue", "new",    "class",   "interface", "enum",
    "instanceof", "synchronized", "assert", "import", "package", "goto"};

inline bool is_reserved(std::string_view s) {
  return std::find(kStatementKeywords.begin(), kStatementKeywords.end(), s) !=
         kStatementKeywords.end();
}

inline bool is_assignment_op(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
         op == "%=" || op == "&=" || op == "|=" || op == "^=" || op == "<<=" ||
         op == ">>=" || op == ">>>=";
}

inline int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof")
    return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

class Parser {
 public:
  Parser(std::string_view source, std::string path)
      : source_(source), tokens_(tokenize(source)), path_(std::move(path)) {
    compute_matches();
  }

  CompilationUnit parse_unit() {
    CompilationUnit unit;
    unit.path = path_;
    skip_annotations();
    if (peek().is("package")) {
      advance();
      unit.package = parse_qualified_name();
      expect(";");
    }
    while (peek().is("import")) {
      advance();
      std::string name;
      if (peek().is("static")) {
        advance();
        name = "static ";
      }
      name += parse_qualified_name();
      if (peek().is(".") && peek(1).is("*")) {
        advance();
        advance();
        name += ".*";
      }
      expect(";");
      unit.imports.push_back(std::move(name));
    }
    while (peek().type != TokenType::End) {
      if (peek().is(";")) {
        advance();
        continue;
      }
      auto [mods, annos] = parse_modifiers();
      if (!parse_type_declaration(mods, unit.classes)) {
        fail("expected a type declaration");
      }
    }
    unit.diagnostics = std::move(diagnostics_);
    return unit;
  }

 private:
  // ---------------------------------------------------------------- tokens
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[idx];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(std::string_view s) {
    if (peek().is(s)) {
      advance();
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!accept(s)) {
      fail("expected '" + std::string(s) + "' but found '" +
           std::string(peek().text) + "'");
    }
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_ + ":" + std::to_string(peek().line) + ": " + message);
  }
  std::string expect_identifier() {
    if (!peek().is_identifier()) {
      fail("expected identifier but found '" + std::string(peek().text) + "'");
    }
    return std::string(advance().text);
  }
  std::size_t end_of_previous() const {
    if (pos_ == 0) return 0;
    const Token& t = tokens_[pos_ - 1];
    return t.offset + t.text.size();
  }
  std::string slice(std::size_t begin, std::size_t end) const {
    if (end < begin) return {};
    return std::string(source_.substr(begin, end - begin));
  }

  /// Pairs every ( [ { with its closer. Unbalanced input is a file error.
  void compute_matches() {
    match_.assign(tokens_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.type != TokenType::Punct) continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") {
        stack.push_back(i);
      } else if (t.text == ")" || t.text == "]" || t.text == "}") {
        const char open = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
        if (stack.empty() || tokens_[stack.back()].text[0] != open) {
          throw ParseError(path_ + ":" + std::to_string(t.line) +
                           ": unbalanced '" + std::string(t.text) + "'");
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      throw ParseError(path_ + ":" + std::to_string(tokens_[stack.back()].line) +
                       ": unclosed '" +
                       std::string(tokens_[stack.back()].text) + "'");
    }
  }

  /// Skips a bracketed group starting at the current token.
  void skip_balanced() {
    pos_ = match_[pos_];
    advance();
  }

  bool range_contains_assertion(std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i + 1 < end; ++i) {
      if (tokens_[i].is_identifier() && is_assertion_name(tokens_[i].text) &&
          tokens_[i + 1].is("(")) {
        return true;
      }
    }
    return false;
  }

  // ---------------------------------------------------------- declarations
  std::string parse_qualified_name() {
    std::string name = expect_identifier();
    while (peek().is(".") && peek(1).is_identifier()) {
      advance();
      name += ".";
      name += advance().text;
    }
    return name;
  }

  Annotation parse_annotation() {
    expect("@");
    std::string name = parse_qualified_name();
    Annotation a;
    const auto dot = name.rfind('.');
    a.name = dot == std::string::npos ? name : name.substr(dot + 1);
    if (peek().is("(")) {
      const std::size_t begin = peek().offset + 1;
      const std::size_t close = match_[pos_];
      a.arguments = slice(begin, tokens_[close].offset);
      skip_balanced();
    }
    return a;
  }

  void skip_annotations() {
    while (peek().is("@") && !peek(1).is("interface")) parse_annotation();
  }

  std::pair<std::vector<std::string>, std::vector<Annotation>> parse_modifiers() {
    std::vector<std::string> mods;
    std::vector<Annotation> annos;
    while (true) {
      if (peek().is("@") && !peek(1).is("interface")) {
        annos.push_back(parse_annotation());
      } else if (peek().is_identifier() && is_modifier(peek().text) &&
                 !(peek().text == "synchronized" && peek(1).is("("))) {
        mods.emplace_back(advance().text);
      } else if (peek().is("non") && peek(1).is("-") && peek(2).is("sealed")) {
        advance();
        advance();
        advance();
        mods.emplace_back("non-sealed");
      } else {
        break;
      }
    }
    return {std::move(mods), std::move(annos)};
  }

  void skip_type_parameters() {
    if (!peek().is("<")) return;
    int depth = 0;
    do {
      if (peek().is("<")) ++depth;
      if (peek().is(">")) --depth;
      if (peek().type == TokenType::End) fail("unterminated type parameters");
      advance();
    } while (depth > 0);
  }

  /// Parses a type declaration if one starts here. Appends the type and all
  /// nested types to `out`.
  bool parse_type_declaration(const std::vector<std::string>& mods,
                              std::vector<ClassDecl>& out) {
    std::string kind;
    if (peek().is("class") || peek().is("interface") || peek().is("enum")) {
      kind = std::string(advance().text);
    } else if (peek().is("record") && peek(1).is_identifier() &&
               (peek(2).is("(") || peek(2).is("<"))) {
      advance();
      kind = "record";
    } else if (peek().is("@") && peek(1).is("interface")) {
      advance();
      advance();
      kind = "annotation";
    } else {
      return false;
    }
    ClassDecl decl;
    decl.kind = kind;
    decl.modifiers = mods;
    decl.line = peek().line;
    decl.name = expect_identifier();
    skip_type_parameters();
    if (kind == "record" && peek().is("(")) skip_balanced();
    while (!peek().is("{")) {
      if (peek().type == TokenType::End) fail("expected class body");
      if (peek().is("extends") && decl.extends.empty()) {
        advance();
        skip_annotations();
        std::string base = parse_qualified_name();
        const auto dot = base.rfind('.');
        decl.extends = dot == std::string::npos ? base : base.substr(dot + 1);
        skip_type_parameters();
        continue;
      }
      if (peek().is("(")) {
        skip_balanced();
        continue;
      }
      advance();
    }
    const std::size_t index = out.size();
    out.push_back(std::move(decl));
    std::vector<MethodDecl> methods;
    parse_class_body(kind, methods, out);
    out[index].methods = std::move(methods);
    return true;
  }

  void parse_class_body(const std::string& kind, std::vector<MethodDecl>& methods,
                        std::vector<ClassDecl>& out) {
    const std::size_t close = match_[pos_];
    expect("{");
    if (kind == "enum") {
      // Constants run to the first top-level ';' (or the closing brace).
      while (pos_ < close && !peek().is(";")) {
        if (peek().is("(") || peek().is("{") || peek().is("[")) {
          skip_balanced();
        } else {
          advance();
        }
      }
      accept(";");
    }
    while (pos_ < close) {
      if (accept(";")) continue;
      const std::size_t member_begin = pos_;
      auto [mods, annos] = parse_modifiers();
      if (peek().is("{")) {
        skip_balanced();
        continue;
      }
      if (parse_type_declaration(mods, out)) continue;
      skip_type_parameters();
      MethodDecl method;
      method.modifiers = std::move(mods);
      method.annotations = std::move(annos);
      method.begin_line = tokens_[member_begin].line;
      if (peek().is_identifier() && peek(1).is("(")) {
        method.name = std::string(advance().text);  // constructor
      } else {
        const std::size_t type_begin = peek().offset;
        if (!try_parse_type()) fail("expected member declaration");
        method.return_type = slice(type_begin, end_of_previous());
        if (!peek().is_identifier()) fail("expected member name");
        method.name = std::string(advance().text);
        if (!peek().is("(")) {
          skip_field_rest(close);
          continue;
        }
      }
      method.parameter_count = count_parameters();
      skip_balanced();
      while (peek().is("[")) skip_balanced();
      while (pos_ < close && !peek().is("{") && !peek().is(";") &&
             !peek().is("default")) {
        advance();  // throws clause
      }
      if (peek().is("default")) {
        while (pos_ < close && !peek().is(";")) {
          if (peek().is("(") || peek().is("{") || peek().is("[")) {
            skip_balanced();
          } else {
            advance();
          }
        }
      }
      if (accept(";")) {
        method.end_line = tokens_[pos_ - 1].line;
        methods.push_back(std::move(method));
        continue;
      }
      if (!peek().is("{")) fail("expected method body");
      const std::size_t body_close = match_[pos_];
      method.has_body = true;
      method.end_line = tokens_[body_close].line;
      try {
        try_context_.clear();
        method.body = parse_block();
      } catch (const ParseError& e) {
        method.body.clear();
        method.body_error =
            Diagnostic{path_, method.begin_line,
                       "could not parse body of '" + method.name + "': " + e.what()};
        diagnostics_.push_back(*method.body_error);
        pos_ = body_close;
        advance();
      }
      methods.push_back(std::move(method));
    }
    expect("}");
  }

  std::size_t count_parameters() const {
    const std::size_t close = match_[pos_];
    if (close == pos_ + 1) return 0;
    std::size_t count = 1;
    int angle = 0;
    for (std::size_t i = pos_ + 1; i < close; ++i) {
      const Token& t = tokens_[i];
      if (t.is("(") || t.is("[") || t.is("{")) {
        i = match_[i];
        continue;
      }
      if (t.is("<")) ++angle;
      if (t.is(">")) --angle;
      if (t.is(",") && angle == 0) ++count;
    }
    return count;
  }

  void skip_field_rest(std::size_t limit) {
    while (pos_ < limit && !peek().is(";")) {
      if (peek().is("(") || peek().is("{") || peek().is("[")) {
        skip_balanced();
      } else {
        advance();
      }
    }
    accept(";");
  }

  // ----------------------------------------------------------------- types
  /// Consumes a type (annotations, qualified name, type arguments, array
  /// dimensions). Restores the position and returns false if no type is here.
  bool try_parse_type() {
    const std::size_t start = pos_;
    skip_annotations();
    if (!peek().is_identifier() || is_reserved(peek().text)) {
      pos_ = start;
      return false;
    }
    advance();
    if (!try_skip_type_arguments()) {
      pos_ = start;
      return false;
    }
    while (peek().is(".") && peek(1).is_identifier() &&
           !is_reserved(peek(1).text) && !peek(1).is("class") &&
           !peek(1).is("this")) {
      advance();
      advance();
      if (!try_skip_type_arguments()) {
        pos_ = start;
        return false;
      }
    }
    while (peek().is("[") && peek(1).is("]")) {
      advance();
      advance();
    }
    if (peek().is("...")) advance();
    return true;
  }

  bool try_skip_type_arguments() {
    if (!peek().is("<")) return true;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.is("<")) {
        ++depth;
      } else if (t.is(">")) {
        --depth;
      } else if (!(t.is_identifier() || t.is(".") || t.is(",") || t.is("?") ||
                   t.is("[") || t.is("]") || t.is("&") || t.is("@"))) {
        return false;
      }
      advance();
      if (depth == 0) return true;
    }
  }

  // ------------------------------------------------------------ statements
  std::vector<Statement> parse_block() {
    const std::size_t close = match_[pos_];
    expect("{");
    std::vector<Statement> out;
    while (pos_ < close) {
      if (auto stmt = parse_statement()) out.push_back(std::move(*stmt));
    }
    expect("}");
    return out;
  }

  /// Body of if/loop: a block, or a single statement.
  std::vector<Statement> parse_nested_body() {
    if (peek().is("{")) return parse_block();
    std::vector<Statement> out;
    if (auto stmt = parse_statement()) out.push_back(std::move(*stmt));
    return out;
  }

  bool in_try_block() const {
    return !try_context_.empty() && try_context_.back();
  }

  Statement begin_statement() const {
    Statement s;
    s.begin_offset = peek().offset;
    s.line = peek().line;
    return s;
  }

  void finish(Statement& s) const {
    s.raw_text = slice(s.begin_offset, end_of_previous());
  }

  std::optional<Statement> parse_statement() {
    if (accept(";")) return std::nullopt;
    Statement s = begin_statement();
    const Token& t = peek();

    if (t.is("{")) {
      const std::size_t open = pos_;
      s.contains_assertion = range_contains_assertion(open, match_[open]);
      skip_balanced();
      s.kind = StatementKind::Other;
      finish(s);
      return s;
    }
    if (t.is_identifier() && peek(1).is(":") && !is_reserved(t.text) &&
        !t.is("default")) {
      advance();
      advance();
      return parse_statement();  // labeled statement
    }
    if (t.is("if")) return parse_if(std::move(s));
    if (t.is("for")) return parse_for(std::move(s));
    if (t.is("while")) {
      advance();
      s.kind = StatementKind::Loop;
      s.expression = parse_parenthesized();
      s.children = parse_nested_body();
      finish(s);
      return s;
    }
    if (t.is("do")) {
      advance();
      s.kind = StatementKind::Loop;
      s.children = parse_nested_body();
      expect("while");
      s.expression = parse_parenthesized();
      expect(";");
      finish(s);
      return s;
    }
    if (t.is("try")) return parse_try(std::move(s));
    if (t.is("switch") || (t.is("synchronized") && peek(1).is("("))) {
      advance();
      s.kind = StatementKind::Other;
      s.expression = parse_parenthesized();
      if (!peek().is("{")) fail("expected block");
      s.contains_assertion = range_contains_assertion(pos_, match_[pos_]);
      skip_balanced();
      accept(";");
      finish(s);
      return s;
    }
    if (t.is("return")) {
      advance();
      s.kind = StatementKind::Return;
      if (!accept(";")) {
        s.expression = parse_expression();
        expect(";");
      }
      finish(s);
      return s;
    }
    if (t.is("throw") || (t.is("yield") && !peek(1).is("=") && !peek(1).is("("))) {
      advance();
      s.kind = StatementKind::Other;
      s.expression = parse_expression();
      expect(";");
      finish(s);
      return s;
    }
    if (t.is("break") || t.is("continue")) {
      advance();
      if (peek().is_identifier()) advance();
      expect(";");
      s.kind = StatementKind::Other;
      finish(s);
      return s;
    }
    if (t.is("assert")) {
      advance();
      s.kind = StatementKind::Other;
      s.expression = parse_expression();
      if (accept(":")) parse_expression();
      expect(";");
      finish(s);
      return s;
    }

    // Local declarations, possibly with modifiers.
    const std::size_t start = pos_;
    auto [mods, annos] = parse_modifiers();
    if (peek().is("class") || peek().is("interface") || peek().is("enum") ||
        (peek().is("record") && peek(1).is_identifier())) {
      while (!peek().is("{")) {
        if (peek().type == TokenType::End) fail("expected local class body");
        if (peek().is("(")) {
          skip_balanced();
        } else {
          advance();
        }
      }
      skip_balanced();
      s.kind = StatementKind::Other;
      finish(s);
      return s;
    }
    if (looks_like_declaration()) {
      parse_declaration_rest(s);
      expect(";");
      finish(s);
      return s;
    }
    pos_ = start;

    Expression expr = parse_expression();
    expect(";");
    classify_expression_statement(s, std::move(expr));
    finish(s);
    return s;
  }

  /// At a type followed by a variable name and one of `= ; , [ :`.
  bool looks_like_declaration() {
    const std::size_t start = pos_;
    bool result = false;
    if (try_parse_type() && peek().is_identifier() && !is_reserved(peek().text) &&
        !peek().is("instanceof")) {
      const Token& after = peek(1);
      result = after.is("=") || after.is(";") || after.is(",") ||
               after.is("[") || after.is(":");
    }
    pos_ = start;
    return result;
  }

  /// Parses `Type name [= init] (, name [= init])*` without the terminator.
  void parse_declaration_rest(Statement& s) {
    if (!try_parse_type()) fail("expected type");
    s.kind = StatementKind::Declaration;
    bool first = true;
    while (true) {
      std::string name = expect_identifier();
      while (peek().is("[")) skip_balanced();
      std::optional<Expression> init;
      if (accept("=")) {
        init = peek().is("{") ? parse_array_initializer() : parse_expression();
      }
      if (first) {
        s.target = std::move(name);
        if (init) {
          s.expression = std::move(*init);
        } else {
          Expression placeholder;
          placeholder.form = ExpressionForm::Other;
          placeholder.op = "uninitialized";
          s.expression = std::move(placeholder);
        }
        first = false;
      }
      if (!accept(",")) break;
    }
  }

  void classify_expression_statement(Statement& s, Expression expr) {
    if (expr.form == ExpressionForm::Other && is_assignment_op(expr.op) &&
        expr.arguments.size() == 2) {
      s.kind = StatementKind::Other;
      const Expression& lhs = expr.arguments[0];
      s.target = lhs.form == ExpressionForm::ObjectRef ? lhs.identifier : lhs.text;
      s.expression = std::move(expr.arguments[1]);
      return;
    }
    if (expr.is_call()) {
      if (is_assertion_call(expr)) {
        s.kind = expr.callee_name == "fail" && in_try_block()
                     ? StatementKind::Fail
                     : StatementKind::Assertion;
      } else if (chain_root(expr).form == ExpressionForm::NewInstance) {
        s.kind = StatementKind::NewObject;
      } else {
        s.kind = StatementKind::MethodInvocation;
      }
    } else if (expr.form == ExpressionForm::NewInstance) {
      s.kind = StatementKind::NewObject;
    } else {
      s.kind = StatementKind::Other;
    }
    s.expression = std::move(expr);
  }

  Statement parse_if(Statement s) {
    expect("if");
    s.kind = StatementKind::IfElse;
    s.expression = parse_parenthesized();
    s.children = parse_nested_body();
    if (accept("else")) s.alternative = parse_nested_body();
    finish(s);
    return s;
  }

  Statement parse_for(Statement s) {
    expect("for");
    s.kind = StatementKind::Loop;
    if (!peek().is("(")) fail("expected '(' after for");
    const std::size_t close = match_[pos_];
    bool foreach = false;
    int pending_ternary = 0;
    for (std::size_t i = pos_ + 1; i < close; ++i) {
      const Token& t = tokens_[i];
      if (t.is("(") || t.is("[") || t.is("{")) {
        i = match_[i];
        continue;
      }
      if (t.is("?")) ++pending_ternary;
      if (t.is(";")) break;
      if (t.is(":")) {
        if (pending_ternary > 0) {
          --pending_ternary;
          continue;
        }
        foreach = true;
        break;
      }
    }
    advance();  // (
    if (foreach) {
      parse_modifiers();
      if (!try_parse_type()) fail("expected for-each variable type");
      s.target = expect_identifier();
      expect(":");
      s.expression = parse_expression();
    } else {
      if (!peek().is(";")) {
        const std::size_t start = pos_;
        parse_modifiers();
        if (looks_like_declaration()) {
          Statement init;
          parse_declaration_rest(init);
        } else {
          pos_ = start;
          parse_expression();
          while (accept(",")) parse_expression();
        }
      }
      expect(";");
      if (!peek().is(";")) s.expression = parse_expression();
      expect(";");
      if (!peek().is(")")) {
        parse_expression();
        while (accept(",")) parse_expression();
      }
    }
    expect(")");
    s.children = parse_nested_body();
    finish(s);
    return s;
  }

  Statement parse_try(Statement s) {
    expect("try");
    s.kind = StatementKind::TryCatch;
    if (peek().is("(")) skip_balanced();  // resources
    if (!peek().is("{")) fail("expected try block");
    try_context_.push_back(true);
    s.children = parse_block();
    try_context_.pop_back();
    while (accept("catch")) {
      if (!peek().is("(")) fail("expected catch parameter");
      skip_balanced();
      if (!peek().is("{")) fail("expected catch block");
      try_context_.push_back(false);
      s.handlers.push_back(parse_block());
      try_context_.pop_back();
    }
    if (accept("finally")) {
      if (!peek().is("{")) fail("expected finally block");
      try_context_.push_back(false);
      s.finalizer = parse_block();
      try_context_.pop_back();
    }
    finish(s);
    return s;
  }

  Expression parse_parenthesized() {
    expect("(");
    Expression e = parse_expression();
    expect(")");
    return e;
  }

  // ----------------------------------------------------------- expressions
  Expression make(ExpressionForm form, std::size_t begin) const {
    Expression e;
    e.form = form;
    e.text = slice(begin, end_of_previous());
    return e;
  }

  void set_text(Expression& e, std::size_t begin) const {
    e.text = slice(begin, end_of_previous());
  }

  Expression parse_expression() { return parse_assignment(); }

  /// Reads an assignment operator at the current position, joining the split
  /// `>` tokens of `>>=` and `>>>=`.
  std::optional<std::string> peek_assignment_op() const {
    const Token& t = peek();
    if (t.type != TokenType::Punct) return std::nullopt;
    if (is_assignment_op(t.text)) return std::string(t.text);
    if (t.is(">") && adjacent(0) && peek(1).is(">=")) return ">>=";
    if (t.is(">") && adjacent(0) && peek(1).is(">") && adjacent(1) &&
        peek(2).is(">="))
      return ">>>=";
    return std::nullopt;
  }

  bool adjacent(std::size_t ahead) const {
    const Token& a = peek(ahead);
    const Token& b = peek(ahead + 1);
    return a.offset + a.text.size() == b.offset;
  }

  void consume_operator(const std::string& op) {
    std::size_t consumed = 0;
    while (consumed < op.size()) {
      consumed += advance().text.size();
    }
  }

  Expression parse_assignment() {
    const std::size_t begin = peek().offset;
    Expression lhs = parse_ternary();
    if (auto op = peek_assignment_op()) {
      consume_operator(*op);
      Expression rhs = peek().is("{") ? parse_array_initializer() : parse_assignment();
      Expression e;
      e.form = ExpressionForm::Other;
      e.op = *op;
      e.arguments.push_back(std::move(lhs));
      e.arguments.push_back(std::move(rhs));
      set_text(e, begin);
      return e;
    }
    return lhs;
  }

  Expression parse_ternary() {
    const std::size_t begin = peek().offset;
    Expression cond = parse_binary(1);
    if (!peek().is("?")) return cond;
    advance();
    Expression then_arm = parse_ternary_arm();
    expect(":");
    Expression else_arm = parse_ternary_arm();
    Expression e;
    e.form = ExpressionForm::Other;
    e.op = "?:";
    e.arguments.push_back(std::move(cond));
    e.arguments.push_back(std::move(then_arm));
    e.arguments.push_back(std::move(else_arm));
    set_text(e, begin);
    return e;
  }

  Expression parse_ternary_arm() {
    if (is_lambda_start()) return parse_lambda();
    return parse_ternary();
  }

  /// Reads a binary operator, joining split `>` tokens into shifts.
  std::optional<std::string> peek_binary_op() const {
    const Token& t = peek();
    if (t.is("instanceof")) return "instanceof";
    if (t.type != TokenType::Punct) return std::nullopt;
    if (t.is(">")) {
      if (adjacent(0) && peek(1).is(">")) {
        if (adjacent(1) && peek(2).is(">")) {
          if (adjacent(2) && peek(3).is(">=")) return std::nullopt;
          return ">>>";
        }
        if (adjacent(1) && peek(2).is(">=")) return std::nullopt;
        return ">>";
      }
      if (adjacent(0) && peek(1).is(">=")) return std::nullopt;
    }
    if (binary_precedence(t.text) > 0) return std::string(t.text);
    return std::nullopt;
  }

  Expression parse_binary(int min_prec) {
    const std::size_t begin = peek().offset;
    Expression lhs = parse_unary();
    while (true) {
      auto op = peek_binary_op();
      if (!op) break;
      const int prec = binary_precedence(*op);
      if (prec < min_prec) break;
      consume_operator(*op);
      Expression rhs;
      if (*op == "instanceof") {
        const std::size_t type_begin = peek().offset;
        accept("final");
        if (!try_parse_type()) fail("expected type after instanceof");
        rhs = make(ExpressionForm::Literal, type_begin);
        rhs.identifier = rhs.text;
        if (peek().is_identifier() && !is_reserved(peek().text)) advance();
      } else {
        rhs = parse_binary(prec + 1);
      }
      Expression e;
      e.form = ExpressionForm::Other;
      e.op = *op;
      e.arguments.push_back(std::move(lhs));
      e.arguments.push_back(std::move(rhs));
      set_text(e, begin);
      lhs = std::move(e);
    }
    return lhs;
  }

  Expression parse_unary() {
    const std::size_t begin = peek().offset;
    const Token& t = peek();
    if (t.is("+") || t.is("-") || t.is("!") || t.is("~") || t.is("++") ||
        t.is("--")) {
      std::string op(advance().text);
      Expression operand = parse_unary();
      Expression e;
      e.form = ExpressionForm::Other;
      e.op = op;
      e.arguments.push_back(std::move(operand));
      set_text(e, begin);
      return e;
    }
    if (t.is("(") && is_cast()) {
      skip_balanced();
      Expression operand = is_lambda_start() ? parse_lambda() : parse_unary();
      Expression e;
      e.form = ExpressionForm::Other;
      e.op = "cast";
      e.arguments.push_back(std::move(operand));
      set_text(e, begin);
      return e;
    }
    return parse_postfix();
  }

  bool is_cast() {
    const std::size_t close = match_[pos_];
    const Token& after = tokens_[close + 1 < tokens_.size() ? close + 1 : close];
    const std::size_t start = pos_;
    advance();
    const bool primitive = peek().is_identifier() && is_primitive(peek().text);
    const bool type_ok = try_parse_type() && pos_ == close;
    // Intersection casts: (A & B) x
    bool intersection = false;
    if (!type_ok) {
      pos_ = start + 1;
      while (try_parse_type()) {
        if (pos_ == close) {
          intersection = true;
          break;
        }
        if (!accept("&")) break;
      }
    }
    pos_ = start;
    if (!type_ok && !intersection) return false;
    if (primitive) return true;
    // A reference-type cast must be followed by something that can start a
    // unary-not-plus-minus expression.
    if (after.type == TokenType::Identifier) {
      return !is_reserved(after.text) || after.is("new") || after.is("switch");
    }
    return after.type == TokenType::Number || after.type == TokenType::String ||
           after.type == TokenType::Char || after.is("(") || after.is("!") ||
           after.is("~");
  }

  bool is_lambda_start() const {
    if (peek().is_identifier() && peek(1).is("->")) return true;
    if (peek().is("(")) {
      const std::size_t close = match_[pos_];
      return close + 1 < tokens_.size() && tokens_[close + 1].is("->");
    }
    return false;
  }

  Expression parse_lambda() {
    const std::size_t begin = peek().offset;
    if (peek().is("(")) {
      skip_balanced();
    } else {
      advance();
    }
    expect("->");
    if (peek().is("{")) {
      skip_balanced();
    } else {
      parse_expression();
    }
    Expression e = make(ExpressionForm::Other, begin);
    e.op = "lambda";
    return e;
  }

  std::vector<Expression> parse_arguments() {
    std::vector<Expression> args;
    expect("(");
    if (accept(")")) return args;
    while (true) {
      args.push_back(is_lambda_start() ? parse_lambda() : parse_expression());
      if (accept(")")) break;
      expect(",");
    }
    return args;
  }

  Expression parse_array_initializer() {
    const std::size_t begin = peek().offset;
    expect("{");
    Expression e;
    e.form = ExpressionForm::Other;
    e.op = "{}";
    while (!peek().is("}")) {
      e.arguments.push_back(peek().is("{") ? parse_array_initializer()
                                           : parse_expression());
      if (!accept(",")) break;
    }
    expect("}");
    set_text(e, begin);
    return e;
  }

  Expression parse_creator(std::size_t begin, std::optional<Expression> outer) {
    expect("new");
    if (peek().is("<")) skip_type_parameters();
    skip_annotations();
    std::string type_name = expect_identifier();
    while (true) {
      if (!try_skip_type_arguments()) fail("bad type arguments");
      if (peek().is(".") && peek(1).is_identifier()) {
        advance();
        type_name = std::string(advance().text);
        continue;
      }
      break;
    }
    if (peek().is("[")) {
      while (peek().is("[")) skip_balanced();
      Expression e;
      e.form = ExpressionForm::Other;
      e.op = "new[]";
      e.callee_name = type_name;
      if (peek().is("{")) e.arguments.push_back(parse_array_initializer());
      set_text(e, begin);
      return e;
    }
    Expression e;
    e.form = ExpressionForm::NewInstance;
    e.callee_name = type_name;
    e.arguments = parse_arguments();
    if (peek().is("{")) skip_balanced();  // anonymous class body
    if (outer) e.receiver = Box<Expression>(std::move(*outer));
    set_text(e, begin);
    return e;
  }

  Expression parse_primary() {
    const std::size_t begin = peek().offset;
    const Token& t = peek();
    switch (t.type) {
      case TokenType::Number:
      case TokenType::String:
      case TokenType::Char: {
        advance();
        Expression e = make(ExpressionForm::Literal, begin);
        e.identifier = e.text;
        return e;
      }
      case TokenType::End:
        fail("unexpected end of input in expression");
      default:
        break;
    }
    if (is_lambda_start()) return parse_lambda();
    if (t.is("(")) {
      advance();
      Expression inner = parse_expression();
      expect(")");
      return inner;
    }
    if (t.is("{")) return parse_array_initializer();
    if (t.is("new")) return parse_creator(begin, std::nullopt);
    if (t.is("switch")) {
      advance();
      if (!peek().is("(")) fail("expected switch selector");
      skip_balanced();
      if (!peek().is("{")) fail("expected switch body");
      skip_balanced();
      Expression e = make(ExpressionForm::Other, begin);
      e.op = "switch";
      return e;
    }
    if (t.is("@")) {
      parse_annotation();
      return parse_primary();
    }
    if (t.is_identifier()) {
      if (t.is("true") || t.is("false") || t.is("null")) {
        advance();
        Expression e = make(ExpressionForm::Literal, begin);
        e.identifier = e.text;
        return e;
      }
      if (is_reserved(t.text) && !t.is("new")) {
        fail("unexpected keyword '" + std::string(t.text) + "' in expression");
      }
      std::string name(advance().text);
      if (peek().is("(")) {
        Expression e;
        e.form = ExpressionForm::MethodCall;
        e.callee_name = std::move(name);
        e.arguments = parse_arguments();
        set_text(e, begin);
        return e;
      }
      // Array type class literals and method references: int[].class, T[]::new
      if (peek().is("[") && peek(1).is("]")) {
        while (peek().is("[") && peek(1).is("]")) {
          advance();
          advance();
        }
      }
      Expression e = make(ExpressionForm::ObjectRef, begin);
      e.identifier = std::move(name);
      return e;
    }
    fail("unexpected token '" + std::string(t.text) + "' in expression");
  }

  Expression parse_postfix() {
    const std::size_t begin = peek().offset;
    Expression cur = parse_primary();
    while (true) {
      if (peek().is(".")) {
        advance();
        if (peek().is("new")) {
          cur = parse_creator(begin, std::move(cur));
          continue;
        }
        if (peek().is("<")) skip_type_parameters();
        if (peek().is("class")) {
          advance();
          Expression e = make(ExpressionForm::Literal, begin);
          e.identifier = e.text;
          cur = std::move(e);
          continue;
        }
        std::string name = expect_identifier();
        if (peek().is("(")) {
          Expression e;
          e.form = ExpressionForm::MethodCall;
          e.callee_name = std::move(name);
          e.receiver = Box<Expression>(std::move(cur));
          e.arguments = parse_arguments();
          set_text(e, begin);
          cur = std::move(e);
        } else {
          Expression e;
          e.form = ExpressionForm::ObjectRef;
          e.identifier = std::move(name);
          e.receiver = Box<Expression>(std::move(cur));
          set_text(e, begin);
          cur = std::move(e);
        }
        continue;
      }
      if (peek().is("[")) {
        advance();
        Expression index = parse_expression();
        expect("]");
        Expression e;
        e.form = ExpressionForm::Other;
        e.op = "[]";
        e.arguments.push_back(std::move(cur));
        e.arguments.push_back(std::move(index));
        set_text(e, begin);
        cur = std::move(e);
        continue;
      }
      if (peek().is("::")) {
        advance();
        if (peek().is("<")) skip_type_parameters();
        advance();  // method name or `new`
        Expression e = make(ExpressionForm::Other, begin);
        e.op = "::";
        cur = std::move(e);
        continue;
      }
      if (peek().is("<") && cur.form == ExpressionForm::ObjectRef) {
        // Generic type used as a method reference qualifier: List<String>::new
        const std::size_t save = pos_;
        if (try_skip_type_arguments() && peek().is("::")) continue;
        pos_ = save;
      }
      if (peek().is("++") || peek().is("--")) {
        std::string op(advance().text);
        Expression e;
        e.form = ExpressionForm::Other;
        e.op = "post" + op;
        e.arguments.push_back(std::move(cur));
        set_text(e, begin);
        cur = std::move(e);
        continue;
      }
      break;
    }
    return cur;
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> match_;
  std::string path_;
  std::size_t pos_ = 0;
  std::vector<bool> try_context_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace detail

/// Parses one Java source file. Throws ParseError when the file structure
/// itself cannot be recovered (unbalanced brackets, garbage at type level);
/// an unparseable method body is reported in `diagnostics` instead.
inline CompilationUnit parse_compilation_unit(std::string_view source,
                                              std::string path) {
  detail::Parser parser(source, std::move(path));
  return parser.parse_unit();
}

/// Parses a statement list as if it were a method body (without braces).
/// Convenient for tests and for tooling that works on snippets.
inline std::vector<Statement> parse_statements(std::string_view body) {
  std::string wrapped = "class Snippet { void snippet() {\n";
  wrapped += body;
  wrapped += "\n} }";
  const CompilationUnit unit = parse_compilation_unit(wrapped, "<snippet>");
  if (!unit.diagnostics.empty()) throw ParseError(unit.diagnostics.front().message);
  std::vector<Statement> stmts = unit.classes.at(0).methods.at(0).body;
  // Offsets and raw text refer to the wrapped buffer; rebase onto `body`.
  const std::size_t shift = std::string_view("class Snippet { void snippet() {\n").size();
  std::function<void(std::vector<Statement>&)> rebase = [&](std::vector<Statement>& v) {
    for (auto& s : v) {
      s.begin_offset -= shift;
      s.line -= 1;
      rebase(s.children);
      if (s.alternative) rebase(*s.alternative);
      for (auto& h : s.handlers) rebase(h);
      if (s.finalizer) rebase(*s.finalizer);
    }
  };
  rebase(stmts);
  return stmts;
}

}  // namespace java
}  // namespace namecheck

#endif  // NAMECHECK_JAVA_PARSER_HPP
