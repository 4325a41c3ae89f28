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

// Language-neutral statement model of a unit test. Everything downstream of
// the Java parser (abstraction, pattern engines) consumes these types only.

#ifndef NAMECHECK_SOURCE_MODEL_HPP
#define NAMECHECK_SOURCE_MODEL_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namecheck {

/// Owning, deep-copying pointer with value semantics. Used for the
/// recursive receiver slot of Expression.
template <typename T>
class Box {
 public:
  Box() = default;
  explicit Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other)
      : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) {
      ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    }
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  explicit operator bool() const { return ptr_ != nullptr; }
  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return !a.ptr_ && !b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

enum class ExpressionForm { MethodCall, ObjectRef, NewInstance, Literal, Other };

/// Expression tree, reduced to the shape the patterns care about.
///
/// - MethodCall:  callee_name is the simple method name, receiver is the
///   qualifier (absent for unqualified calls), arguments in source order.
/// - ObjectRef:   identifier holds the simple name; a field access such as
///   `this.items` keeps the qualifier in receiver.
/// - NewInstance: callee_name is the constructed simple type name.
/// - Literal:     identifier holds the literal text.
/// - Other:       op names the construct ("==", "?:", "cast", "lambda", ...)
///   and arguments holds its operands. Lambdas and anonymous class bodies are
///   opaque and have no operands.
struct Expression {
  ExpressionForm form = ExpressionForm::Other;
  Box<Expression> receiver;
  std::string callee_name;
  std::string identifier;
  std::string op;
  std::vector<Expression> arguments;
  std::string text;

  bool is_call() const { return form == ExpressionForm::MethodCall; }
  bool is_string_literal() const {
    return form == ExpressionForm::Literal && !identifier.empty() &&
           identifier.front() == '"';
  }

  friend bool operator==(const Expression&, const Expression&) = default;
};

enum class StatementKind {
  Declaration,
  MethodInvocation,
  Assertion,
  Fail,
  Return,
  IfElse,
  Loop,
  TryCatch,
  NewObject,
  Other,
};

inline constexpr std::string_view to_string(StatementKind kind) {
  switch (kind) {
    case StatementKind::Declaration: return "Declaration";
    case StatementKind::MethodInvocation: return "MethodInvocation";
    case StatementKind::Assertion: return "Assertion";
    case StatementKind::Fail: return "Fail";
    case StatementKind::Return: return "Return";
    case StatementKind::IfElse: return "IfElse";
    case StatementKind::Loop: return "Loop";
    case StatementKind::TryCatch: return "TryCatch";
    case StatementKind::NewObject: return "NewObject";
    case StatementKind::Other: return "Other";
  }
  return "Other";
}

inline constexpr bool is_compound(StatementKind kind) {
  return kind == StatementKind::IfElse || kind == StatementKind::Loop ||
         kind == StatementKind::TryCatch;
}

/// One statement of a test body.
///
/// Compound statements keep their nested statements: `children` is the
/// then-part, the loop body or the try block. If/else keeps the else-part in
/// `alternative` (present iff an else clause exists), try/catch keeps one
/// list per catch clause in `handlers` and the finally block in `finalizer`.
///
/// `expression` is the initializer of a declaration, the called expression of
/// an invocation, assertion or fail, the returned value, the if/loop
/// condition (the iterable for for-each loops). `target` is the declared
/// variable (declarations, for-each variables) or the assigned variable.
struct Statement {
  StatementKind kind = StatementKind::Other;
  std::vector<Statement> children;
  std::optional<std::vector<Statement>> alternative;
  std::vector<std::vector<Statement>> handlers;
  std::optional<std::vector<Statement>> finalizer;
  std::optional<Expression> expression;
  std::string target;
  std::string raw_text;
  std::size_t begin_offset = 0;
  std::size_t line = 0;
  /// Set for opaque statements (bare blocks, switch, synchronized) that
  /// contain an assertion call somewhere inside.
  bool contains_assertion = false;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct SourceLocation {
  std::string path;
  std::size_t begin_line = 0;
  std::size_t end_line = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// A JUnit test method. Immutable after construction.
struct TestCase {
  std::string name;
  std::vector<Statement> statements;
  std::string class_name;
  std::vector<std::string> methods_under_test;
  SourceLocation location;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

// ---------------------------------------------------------------------------
// Traversal helpers shared by the engines.

/// Pre-order walk over an expression tree (node, receiver, arguments).
inline void visit_expression(const Expression& expr,
                             const std::function<void(const Expression&)>& fn) {
  fn(expr);
  if (expr.receiver) visit_expression(*expr.receiver, fn);
  for (const auto& arg : expr.arguments) visit_expression(arg, fn);
}

/// Pre-order walk over statements at every nesting depth.
inline void visit_statements(const std::vector<Statement>& stmts,
                             const std::function<void(const Statement&)>& fn) {
  for (const auto& stmt : stmts) {
    fn(stmt);
    visit_statements(stmt.children, fn);
    if (stmt.alternative) visit_statements(*stmt.alternative, fn);
    for (const auto& handler : stmt.handlers) visit_statements(handler, fn);
    if (stmt.finalizer) visit_statements(*stmt.finalizer, fn);
  }
}

/// All method calls in an expression, pre-order (outer call before its
/// receiver chain and arguments).
inline std::vector<const Expression*> collect_calls(const Expression& expr) {
  std::vector<const Expression*> out;
  visit_expression(expr, [&](const Expression& e) {
    if (e.is_call()) out.push_back(&e);
  });
  return out;
}

/// First method call in pre-order, or nullptr.
inline const Expression* first_call(const Expression& expr) {
  if (expr.is_call()) return &expr;
  if (expr.receiver) {
    if (const auto* c = first_call(*expr.receiver)) return c;
  }
  for (const auto& arg : expr.arguments) {
    if (const auto* c = first_call(arg)) return c;
  }
  return nullptr;
}

/// The innermost element of a receiver chain: for `a.b().c()` this is `a`.
inline const Expression& chain_root(const Expression& expr) {
  const Expression* cur = &expr;
  while (cur->receiver) cur = cur->receiver.get();
  return *cur;
}

}  // namespace namecheck

#endif  // NAMECHECK_SOURCE_MODEL_HPP
