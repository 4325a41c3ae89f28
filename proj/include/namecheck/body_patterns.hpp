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

// Test body patterns. Each pattern is a structural requirement on the
// statement list plus rules that pull the action, predicate and scenario out
// of the matched statements.

#ifndef NAMECHECK_BODY_PATTERNS_HPP
#define NAMECHECK_BODY_PATTERNS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namecheck/extraction.hpp"
#include "namecheck/java_parser.hpp"
#include "namecheck/source_model.hpp"

namespace namecheck {

/// Body patterns in matching order.
enum class BodyPattern {
  IfElse,
  Loop,
  AllAssertionSingle,
  AllAssertionMultiple,
  NoAssertionSoleMethod,
  NoAssertionSingleDeclaration,
  NoAssertionSingleMethodInvocation,
  NoAssertionSingleNewObject,
  NoAssertion,
  NoAssertionGeneralized,
  NoAssertionMultipleDeclarations,
  NoAssertionMultipleMethodInvocations,
  TryCatchRestricted,
  TryCatch,
  TryCatchGeneralized,
  NormalRestricted,
  NormalGeneralized,
};

struct BodyPatternInfo {
  BodyPattern id;
  std::string_view name;    // serialized id
  std::string_view label;   // human-readable
  std::string_view family;  // summary table row
  PresenceRule presence;
};

namespace body_detail {
inline constexpr Presence R = Presence::Required;
inline constexpr Presence O = Presence::Optional;
inline constexpr Presence N = Presence::Never;
}  // namespace body_detail

inline constexpr std::array<BodyPatternInfo, 17> kBodyPatterns = {{
    {BodyPattern::IfElse, "IfElse", "If Else", "If Else",
     {body_detail::R, body_detail::O, body_detail::R}},
    {BodyPattern::Loop, "Loop", "Loop", "Loop",
     {body_detail::O, body_detail::O, body_detail::O}},
    {BodyPattern::AllAssertionSingle, "AllAssertionSingle", "All Assertion (Single)",
     "All Assertion", {body_detail::R, body_detail::R, body_detail::R}},
    {BodyPattern::AllAssertionMultiple, "AllAssertionMultiple",
     "All Assertion (Multiple)", "All Assertion",
     {body_detail::O, body_detail::O, body_detail::O}},
    {BodyPattern::NoAssertionSoleMethod, "NoAssertionSoleMethod",
     "No Assertion (Sole method)", "No Assertion",
     {body_detail::R, body_detail::N, body_detail::O}},
    {BodyPattern::NoAssertionSingleDeclaration, "NoAssertionSingleDeclaration",
     "No Assertion (Single declaration)", "No Assertion",
     {body_detail::R, body_detail::N, body_detail::R}},
    {BodyPattern::NoAssertionSingleMethodInvocation,
     "NoAssertionSingleMethodInvocation", "No Assertion (Single method invocation)",
     "No Assertion", {body_detail::R, body_detail::O, body_detail::O}},
    {BodyPattern::NoAssertionSingleNewObject, "NoAssertionSingleNewObject",
     "No Assertion (Single new object)", "No Assertion",
     {body_detail::R, body_detail::R, body_detail::R}},
    {BodyPattern::NoAssertion, "NoAssertion", "No Assertion", "No Assertion",
     {body_detail::R, body_detail::O, body_detail::R}},
    {BodyPattern::NoAssertionGeneralized, "NoAssertionGeneralized",
     "No Assertion (Generalized)", "No Assertion",
     {body_detail::R, body_detail::N, body_detail::R}},
    {BodyPattern::NoAssertionMultipleDeclarations, "NoAssertionMultipleDeclarations",
     "No Assertion (Multiple declarations)", "No Assertion",
     {body_detail::R, body_detail::N, body_detail::R}},
    {BodyPattern::NoAssertionMultipleMethodInvocations,
     "NoAssertionMultipleMethodInvocations",
     "No Assertion (Multiple method invocations)", "No Assertion",
     {body_detail::R, body_detail::O, body_detail::N}},
    {BodyPattern::TryCatchRestricted, "TryCatchRestricted", "Try Catch (Restricted)",
     "Try Catch", {body_detail::R, body_detail::O, body_detail::O}},
    {BodyPattern::TryCatch, "TryCatch", "Try Catch", "Try Catch",
     {body_detail::R, body_detail::O, body_detail::R}},
    {BodyPattern::TryCatchGeneralized, "TryCatchGeneralized",
     "Try Catch (Generalized)", "Try Catch",
     {body_detail::R, body_detail::O, body_detail::O}},
    {BodyPattern::NormalRestricted, "NormalRestricted", "Normal (Restricted)",
     "Normal (Restricted)", {body_detail::O, body_detail::R, body_detail::O}},
    {BodyPattern::NormalGeneralized, "NormalGeneralized", "Normal (Generalized)",
     "Normal (Generalized)", {body_detail::O, body_detail::R, body_detail::O}},
}};

/// Summary-table families in display order.
inline constexpr std::array<std::string_view, 7> kBodyFamilies = {
    "If Else",   "Loop",
    "All Assertion", "No Assertion",
    "Try Catch", "Normal (Restricted)",
    "Normal (Generalized)"};

inline const BodyPatternInfo& body_pattern_info(BodyPattern p) {
  return kBodyPatterns[static_cast<std::size_t>(p)];
}

inline std::string_view to_string(BodyPattern p) { return body_pattern_info(p).name; }

inline std::optional<BodyPattern> body_pattern_from_string(std::string_view s) {
  for (const auto& info : kBodyPatterns) {
    if (info.name == s) return info.id;
  }
  return std::nullopt;
}

struct BodyMatch {
  BodyPattern pattern = BodyPattern::NormalGeneralized;
  Extraction extraction;
  /// Notes about the match, e.g. components on which multiple assertions
  /// disagree.
  std::vector<std::string> diagnostics;

  friend bool operator==(const BodyMatch&, const BodyMatch&) = default;
};

namespace body_detail {

using Stmts = std::vector<Statement>;

inline bool is_assertion_stmt(const Statement& s) {
  return s.kind == StatementKind::Assertion || s.kind == StatementKind::Fail;
}

/// Any assertion or fail at any depth, including inside opaque blocks.
inline bool has_assertion_deep(const Stmts& stmts) {
  bool found = false;
  visit_statements(stmts, [&](const Statement& s) {
    if (is_assertion_stmt(s) || s.contains_assertion) found = true;
  });
  return found;
}

inline bool is_simple(const Statement& s) {
  return !is_compound(s.kind) && !is_assertion_stmt(s) && !s.contains_assertion;
}

/// The call a simple statement performs: the expression itself when it is a
/// call, else the first call inside it.
inline const Expression* statement_call(const Statement& s) {
  if (!s.expression) return nullptr;
  return first_call(*s.expression);
}

inline std::string callee(const Expression* call) {
  return call ? call->callee_name : std::string();
}

/// Name of the object an expression denotes: a variable, the result of a
/// call (its method name) or a constructed type.
inline std::string object_name(const Expression& e) {
  switch (e.form) {
    case ExpressionForm::ObjectRef: return e.identifier;
    case ExpressionForm::MethodCall:
    case ExpressionForm::NewInstance: return e.callee_name;
    case ExpressionForm::Literal: return {};
    case ExpressionForm::Other:
      if (e.op == "cast" && !e.arguments.empty()) return object_name(e.arguments[0]);
      return {};
  }
  return {};
}

inline std::string receiver_object(const Expression* call) {
  if (!call || !call->receiver) return {};
  return object_name(*call->receiver);
}

/// Scenario of an invocation statement: the receiver variable, or for a
/// fluent chain (`when(..).thenReturn(..)`) the outermost method name.
inline std::string invoked_scenario(const Expression* call) {
  if (!call || !call->receiver) return {};
  if (call->receiver->form == ExpressionForm::ObjectRef) return call->receiver->identifier;
  return call->callee_name;
}

inline bool is_single_valued_assertion(std::string_view name) {
  return name == "assertTrue" || name == "assertFalse" || name == "assertNull" ||
         name == "assertNotNull" || name == "fail";
}

/// Hamcrest matchers whose first argument is the expected value.
inline bool is_wrapping_matcher(std::string_view name) {
  static constexpr std::array<std::string_view, 10> kMatchers = {
      "is", "equalTo", "not", "sameInstance", "theInstance", "is_", "comparesEqualTo",
      "closeTo", "samePropertyValuesAs", "equalToIgnoringCase"};
  return std::find(kMatchers.begin(), kMatchers.end(), name) != kMatchers.end();
}

/// `is(equalTo(x))` -> `x`. Matchers without arguments are kept.
inline const Expression* unwrap_matcher(const Expression* e) {
  while (e && e->is_call() && !e->receiver && is_wrapping_matcher(e->callee_name) &&
         !e->arguments.empty()) {
    e = &e->arguments[0];
  }
  return e;
}

struct AssertionParts {
  std::string name;  // the assertion method
  const Expression* expected = nullptr;
  const Expression* actual = nullptr;
};

/// Splits an assertion call into its expected and actual arguments.
/// JUnit order (expected, actual) with an optional leading message; Hamcrest
/// `assertThat(actual, matcher)` with wrapping matchers peeled off; fluent
/// `assertThat(actual).isX(expected)`.
inline AssertionParts assertion_parts(const Expression& expr) {
  AssertionParts parts;
  const Expression* assertion = nullptr;
  for (const Expression* cur = &expr; cur; cur = cur->receiver.get()) {
    if (cur->is_call() && is_assertion_name(cur->callee_name)) {
      assertion = cur;
      break;
    }
  }
  if (!assertion) return parts;
  parts.name = assertion->callee_name;
  if (assertion != &expr) {
    if (!assertion->arguments.empty()) parts.actual = &assertion->arguments[0];
    if (!expr.arguments.empty()) parts.expected = &expr.arguments[0];
    return parts;
  }
  std::vector<const Expression*> args;
  for (const auto& a : assertion->arguments) args.push_back(&a);
  if (!args.empty() && args[0]->is_string_literal() &&
      (args.size() >= 3 ||
       (args.size() == 2 && is_single_valued_assertion(parts.name)))) {
    args.erase(args.begin());
  }
  if (args.size() >= 2) {
    if (parts.name == "assertThat") {
      parts.actual = args[0];
      parts.expected = unwrap_matcher(args[1]);
    } else {
      parts.expected = args[0];
      parts.actual = args[1];
    }
  } else if (args.size() == 1) {
    parts.actual = args[0];
  }
  return parts;
}

inline std::string invocation_in(const Expression* e) {
  return e ? callee(first_call(*e)) : std::string();
}

/// The method invocation an assertion checks: the actual argument's call,
/// falling back to the expected argument's call.
inline std::string assertion_invocation(const AssertionParts& parts) {
  std::string out = invocation_in(parts.actual);
  if (out.empty()) out = invocation_in(parts.expected);
  return out;
}

inline std::string assertion_invocation(const Statement& s) {
  if (!s.expression) return {};
  return assertion_invocation(assertion_parts(*s.expression));
}

inline std::string assertion_name(const Statement& s) {
  if (!s.expression) return {};
  return assertion_parts(*s.expression).name;
}

/// First assertion statement (not fail) at any depth.
inline const Statement* first_assertion(const Stmts& stmts) {
  const Statement* found = nullptr;
  visit_statements(stmts, [&](const Statement& s) {
    if (!found && s.kind == StatementKind::Assertion) found = &s;
  });
  return found;
}

inline const Statement* first_assertion(const std::vector<Stmts>& blocks) {
  for (const auto& b : blocks) {
    if (const auto* s = first_assertion(b)) return s;
  }
  return nullptr;
}

inline std::string leading_declared(const Stmts& body) {
  if (!body.empty() && body[0].kind == StatementKind::Declaration) return body[0].target;
  return {};
}

/// Triple read off a single assertion: expected call as predicate, actual
/// call as action with its receiver as scenario. With a single argument the
/// predicate is the assertion itself.
inline Extraction assertion_triple(const Statement& s, bool nested_predicate) {
  Extraction e;
  if (!s.expression) return e;
  const AssertionParts parts = assertion_parts(*s.expression);
  const Expression* actual_call = parts.actual ? first_call(*parts.actual) : nullptr;
  if (actual_call) {
    e.action = actual_call->callee_name;
    e.scenario = receiver_object(actual_call);
  }
  if (parts.expected) {
    e.predicate = invocation_in(parts.expected);
    if (e.predicate.empty() && nested_predicate && actual_call) {
      for (const auto& arg : actual_call->arguments) {
        if (const auto* inner = first_call(arg)) {
          e.predicate = inner->callee_name;
          break;
        }
      }
    }
  } else if (parts.actual) {
    e.predicate = parts.name;
  }
  return e;
}

/// Ternary `c ? a() : b()` inside a simple statement.
inline const Expression* find_conditional(const Statement& s) {
  if (!s.expression) return nullptr;
  const Expression* found = nullptr;
  visit_expression(*s.expression, [&](const Expression& e) {
    if (!found && e.form == ExpressionForm::Other && e.op == "?:" &&
        e.arguments.size() == 3) {
      found = &e;
    }
  });
  return found;
}

// ----------------------------------------------------------------- patterns

inline std::optional<Extraction> if_else(const Stmts& body) {
  if (body.size() == 2 && body[0].kind == StatementKind::Declaration &&
      body[1].kind == StatementKind::IfElse && body[1].alternative) {
    const Statement& branch = body[1];
    if (branch.children.empty() || !has_assertion_deep(*branch.alternative)) {
      return std::nullopt;
    }
    const Expression* call = statement_call(branch.children[0]);
    if (!call || is_assertion_stmt(branch.children[0])) return std::nullopt;
    Extraction e;
    e.action = call->callee_name;
    e.scenario = body[0].target;
    for (const auto& s : *branch.alternative) {
      if (s.kind == StatementKind::Assertion) {
        e.predicate = assertion_invocation(s);
        break;
      }
    }
    return e;
  }
  // Conditional-expression form.
  for (const auto& s : body) {
    if (!is_simple(s) && s.kind != StatementKind::Assertion) continue;
    const Expression* cond = find_conditional(s);
    if (!cond) continue;
    const Expression* then_call = first_call(cond->arguments[1]);
    if (!then_call) return std::nullopt;
    Extraction e;
    e.action = then_call->callee_name;
    e.predicate = callee(first_call(cond->arguments[2]));
    e.scenario = leading_declared(body);
    if (e.scenario.empty()) e.scenario = receiver_object(then_call);
    return e;
  }
  return std::nullopt;
}

inline std::optional<Extraction> loop(const Stmts& body) {
  const Statement* the_loop = nullptr;
  for (const auto& s : body) {
    if (s.kind != StatementKind::Loop) continue;
    if (the_loop) return std::nullopt;
    the_loop = &s;
  }
  if (!the_loop || !has_assertion_deep(the_loop->children)) return std::nullopt;
  Extraction e;
  visit_statements(the_loop->children, [&](const Statement& s) {
    if (!e.action.empty() || !s.expression) return;
    for (const Expression* call : collect_calls(*s.expression)) {
      if (!is_assertion_name(call->callee_name)) {
        e.action = call->callee_name;
        return;
      }
    }
  });
  if (const Statement* a = first_assertion(the_loop->children)) {
    e.predicate = assertion_invocation(*a);
  }
  if (the_loop->expression) {
    const Expression& cond = *the_loop->expression;
    if (!the_loop->target.empty()) {
      // for-each: the iterated collection.
      const Expression& root = chain_root(cond);
      e.scenario = root.form == ExpressionForm::ObjectRef ? root.identifier
                                                          : object_name(cond);
    } else {
      for (const Expression* call : collect_calls(cond)) {
        if (call->receiver) {
          e.scenario = object_name(*call->receiver);
          break;
        }
      }
      if (e.scenario.empty()) {
        visit_expression(cond, [&](const Expression& x) {
          if (e.scenario.empty() && x.form == ExpressionForm::ObjectRef) {
            e.scenario = x.identifier;
          }
        });
      }
    }
  }
  return e;
}

inline std::optional<Extraction> all_assertion_single(const Stmts& body) {
  if (body.size() != 1 || body[0].kind != StatementKind::Assertion) return std::nullopt;
  const Statement& s = body[0];
  const AssertionParts parts = assertion_parts(*s.expression);
  const Expression* actual_call = parts.actual ? first_call(*parts.actual) : nullptr;
  if (!actual_call || !actual_call->receiver) return std::nullopt;
  return assertion_triple(s, false);
}

inline std::optional<Extraction> all_assertion_multiple(
    const Stmts& body, std::vector<std::string>* diagnostics) {
  if (body.size() < 2) return std::nullopt;
  for (const auto& s : body) {
    if (s.kind != StatementKind::Assertion) return std::nullopt;
  }
  std::vector<Extraction> triples;
  for (const auto& s : body) triples.push_back(assertion_triple(s, true));
  bool agreement = false;
  for (Component c : kComponents) {
    bool all_present = true;
    bool all_equal = true;
    bool any_present = false;
    for (const auto& t : triples) {
      if (!t.has(c)) {
        all_present = false;
        continue;
      }
      any_present = true;
      if (normalize(t.get(c)) != normalize(triples[0].get(c))) all_equal = false;
    }
    if (all_present && all_equal) {
      agreement = true;
    } else if (any_present && diagnostics) {
      diagnostics->push_back(std::string(to_string(c)) + " differs across assertions");
    }
  }
  if (!agreement) return std::nullopt;
  return triples[0];
}

inline std::optional<Extraction> no_assertion_sole_method(const Stmts& body) {
  std::vector<const Expression*> calls;
  visit_statements(body, [&](const Statement& s) {
    if (!s.expression) return;
    for (const Expression* c : collect_calls(*s.expression)) calls.push_back(c);
  });
  if (calls.size() != 1) return std::nullopt;
  const Expression* call = calls[0];
  Extraction e;
  e.action = call->callee_name;
  bool in_leading_initializer = false;
  if (!body.empty() && body[0].kind == StatementKind::Declaration && body[0].expression) {
    visit_expression(*body[0].expression, [&](const Expression& x) {
      if (&x == call) in_leading_initializer = true;
    });
  }
  const std::string declared = leading_declared(body);
  if (!declared.empty() && !in_leading_initializer) {
    e.scenario = declared;
  } else {
    e.scenario = receiver_object(call);
    if (e.scenario.empty()) e.scenario = declared;
  }
  return e;
}

inline std::optional<Extraction> no_assertion_single_declaration(const Stmts& body) {
  if (body.size() != 1 || body[0].kind != StatementKind::Declaration) return std::nullopt;
  const Expression* call = statement_call(body[0]);
  if (!call) return std::nullopt;
  Extraction e;
  e.action = call->callee_name;
  e.scenario = body[0].target;
  return e;
}

inline std::optional<Extraction> no_assertion_single_method_invocation(const Stmts& body) {
  if (body.size() != 1 || body[0].kind != StatementKind::MethodInvocation) {
    return std::nullopt;
  }
  const Expression& call = *body[0].expression;
  Extraction e;
  e.action = call.callee_name;
  for (const auto& arg : call.arguments) {
    if (const auto* inner = first_call(arg)) {
      e.predicate = inner->callee_name;
      break;
    }
  }
  if (call.receiver && call.receiver->form == ExpressionForm::ObjectRef) {
    e.scenario = call.receiver->identifier;
  }
  return e;
}

inline std::optional<Extraction> no_assertion_single_new_object(const Stmts& body) {
  if (body.size() != 1 || body[0].kind != StatementKind::NewObject) return std::nullopt;
  const Expression& outer = *body[0].expression;
  std::vector<const Expression*> chain;
  for (const Expression* cur = &outer; cur; cur = cur->receiver.get()) {
    if (cur->is_call()) chain.push_back(cur);
  }
  const Expression& root = chain_root(outer);
  if (chain.size() < 2 || root.form != ExpressionForm::NewInstance) return std::nullopt;
  Extraction e;
  e.action = chain.front()->callee_name;
  e.predicate = chain.back()->callee_name;
  e.scenario = root.callee_name;
  return e;
}

inline bool rooted_at(const Expression& call, const std::string& var) {
  if (!call.receiver) return false;
  const Expression& root = chain_root(call);
  return root.form == ExpressionForm::ObjectRef && root.identifier == var;
}

inline std::optional<Extraction> no_assertion(const Stmts& body) {
  if (body.size() < 3 || body[0].kind != StatementKind::Declaration) return std::nullopt;
  const std::string& var = body[0].target;
  Extraction e;
  e.scenario = var;
  std::size_t action_index = 0;
  if (const Expression* init = statement_call(body[0])) {
    e.action = init->callee_name;
  } else {
    for (std::size_t i = 1; i < body.size() && e.action.empty(); ++i) {
      if (!body[i].expression) continue;
      for (const Expression* call : collect_calls(*body[i].expression)) {
        if (rooted_at(*call, var)) {
          e.action = call->callee_name;
          action_index = i;
          break;
        }
      }
    }
  }
  if (e.action.empty()) return std::nullopt;
  for (std::size_t i = action_index + 1; i < body.size(); ++i) {
    if (!is_simple(body[i])) continue;
    if (const Expression* call = statement_call(body[i])) {
      e.predicate = call->callee_name;
      break;
    }
  }
  return e;
}

inline std::optional<Extraction> no_assertion_generalized(const Stmts& body) {
  if (body.size() < 2 || body[0].kind != StatementKind::Declaration) return std::nullopt;
  Extraction e;
  e.scenario = body[0].target;
  for (std::size_t i = 1; i < body.size() && e.action.empty(); ++i) {
    e.action = callee(statement_call(body[i]));
  }
  return e;
}

inline std::optional<Extraction> no_assertion_multiple_declarations(const Stmts& body) {
  std::vector<std::string> declared;
  for (const auto& s : body) {
    if (s.kind == StatementKind::Declaration) declared.push_back(s.target);
  }
  if (declared.size() < 2) return std::nullopt;
  std::map<std::string, std::size_t> refs;
  visit_statements(body, [&](const Statement& s) {
    if (!s.expression) return;
    visit_expression(*s.expression, [&](const Expression& x) {
      if (x.form == ExpressionForm::ObjectRef && !x.receiver) ++refs[x.identifier];
    });
  });
  std::string best;
  std::size_t best_count = 0;
  for (const auto& v : declared) {
    if (best.empty() || refs[v] > best_count) {
      best = v;
      best_count = refs[v];
    }
  }
  std::vector<const Expression*> calls;
  visit_statements(body, [&](const Statement& s) {
    if (!s.expression) return;
    for (const Expression* c : collect_calls(*s.expression)) calls.push_back(c);
  });
  Extraction e;
  e.scenario = best;
  for (const Expression* c : calls) {
    for (const auto& arg : c->arguments) {
      if (arg.form == ExpressionForm::ObjectRef && !arg.receiver && arg.identifier == best) {
        e.action = c->callee_name;
        break;
      }
    }
    if (!e.action.empty()) break;
  }
  if (e.action.empty()) {
    for (const Expression* c : calls) {
      if (rooted_at(*c, best)) {
        e.action = c->callee_name;
        break;
      }
    }
  }
  return e;
}

inline std::optional<Extraction> no_assertion_multiple_method_invocations(
    const Stmts& body) {
  std::vector<const Expression*> calls;
  for (const auto& s : body) {
    if (s.kind == StatementKind::MethodInvocation) calls.push_back(&*s.expression);
  }
  if (calls.size() < 2) return std::nullopt;
  std::map<std::string, std::size_t> freq;
  for (const auto* c : calls) ++freq[c->callee_name];
  const Expression* best = nullptr;
  for (const auto* c : calls) {
    if (!best || freq[c->callee_name] > freq[best->callee_name]) best = c;
  }
  Extraction e;
  e.action = best->callee_name;
  for (const auto& arg : best->arguments) {
    if (const auto* inner = first_call(arg)) {
      e.predicate = inner->callee_name;
      break;
    }
  }
  return e;
}

inline std::string catch_predicate(const Statement& t) {
  if (const Statement* a = first_assertion(t.handlers)) return assertion_invocation(*a);
  return {};
}

inline std::optional<Extraction> try_catch_restricted(const Stmts& body) {
  if (body.size() != 1 || body[0].kind != StatementKind::TryCatch) return std::nullopt;
  const Statement& t = body[0];
  if (t.children.size() != 2 || t.children[0].kind != StatementKind::MethodInvocation ||
      t.children[1].kind != StatementKind::Fail) {
    return std::nullopt;
  }
  const Expression& call = *t.children[0].expression;
  Extraction e;
  e.action = call.callee_name;
  e.scenario = receiver_object(&call);
  e.predicate = catch_predicate(t);
  return e;
}

inline std::optional<Extraction> try_catch(const Stmts& body) {
  std::size_t i = 0;
  if (body.size() == 2 && body[0].kind == StatementKind::Declaration) i = 1;
  if (body.size() != i + 1 || body[i].kind != StatementKind::TryCatch) return std::nullopt;
  const Statement& t = body[i];
  if (t.children.size() != 2 || t.children[1].kind != StatementKind::Fail ||
      !is_simple(t.children[0])) {
    return std::nullopt;
  }
  const Expression* call = statement_call(t.children[0]);
  if (!call) return std::nullopt;
  Extraction e;
  e.action = call->callee_name;
  e.scenario = receiver_object(call);
  if (e.scenario.empty()) e.scenario = leading_declared(body);
  e.predicate = catch_predicate(t);
  return e;
}

inline std::optional<Extraction> try_catch_generalized(const Stmts& body) {
  const Statement* t = nullptr;
  std::size_t index = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i].kind == StatementKind::TryCatch) {
      if (t) return std::nullopt;
      t = &body[i];
      index = i;
    } else if (is_compound(body[i].kind)) {
      return std::nullopt;
    }
  }
  if (!t) return std::nullopt;
  const Expression* action = nullptr;
  for (const auto& s : t->children) {
    if (s.kind == StatementKind::Fail) break;
    if (!is_simple(s)) continue;
    if (const Expression* call = statement_call(s)) action = call;
  }
  if (!action) return std::nullopt;
  Extraction e;
  e.action = action->callee_name;
  e.scenario = receiver_object(action);
  e.predicate = catch_predicate(*t);
  if (e.predicate.empty()) {
    for (std::size_t i = index + 1; i < body.size(); ++i) {
      if (body[i].kind == StatementKind::Assertion) {
        e.predicate = assertion_invocation(body[i]);
        break;
      }
    }
  }
  return e;
}

inline std::optional<Extraction> normal_restricted(const Stmts& body) {
  if (body.size() < 2 || body.size() > 3) return std::nullopt;
  const Statement& last = body.back();
  if (last.kind != StatementKind::Assertion) return std::nullopt;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (!is_simple(body[i])) return std::nullopt;
  }
  Extraction e;
  if (body[0].kind == StatementKind::Declaration) e.action = callee(statement_call(body[0]));
  if (e.action.empty()) e.action = assertion_invocation(last);
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (body[i].kind == StatementKind::MethodInvocation) {
      e.scenario = invoked_scenario(&*body[i].expression);
      break;
    }
  }
  if (e.scenario.empty()) e.scenario = leading_declared(body);
  e.predicate = assertion_name(last);
  return e;
}

inline std::optional<Extraction> normal_generalized(const Stmts& body) {
  std::size_t first_assert = body.size();
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i].kind == StatementKind::Assertion) {
      first_assert = i;
      break;
    }
    if (!is_simple(body[i])) return std::nullopt;
  }
  if (first_assert == 0 || first_assert == body.size()) return std::nullopt;
  for (std::size_t i = first_assert; i < body.size(); ++i) {
    if (body[i].kind != StatementKind::Assertion) return std::nullopt;
  }
  Extraction e;
  if (body[0].kind == StatementKind::Declaration) e.action = callee(statement_call(body[0]));
  if (e.action.empty()) e.action = assertion_invocation(body[first_assert]);
  for (std::size_t i = 0; i < first_assert; ++i) {
    if (body[i].kind == StatementKind::MethodInvocation) {
      e.scenario = invoked_scenario(&*body[i].expression);
      break;
    }
  }
  e.predicate = assertion_name(body[first_assert]);
  return e;
}

}  // namespace body_detail

/// Tries a single pattern. Returns the extraction only if the body meets the
/// pattern's structural requirements and its presence rule.
inline std::optional<BodyMatch> match_body_pattern(BodyPattern p, const TestCase& test) {
  namespace d = body_detail;
  const auto& body = test.statements;
  if (body.empty()) return std::nullopt;
  BodyMatch match;
  match.pattern = p;
  std::optional<Extraction> e;
  const bool no_asserts = !d::has_assertion_deep(body);
  switch (p) {
    case BodyPattern::IfElse: e = d::if_else(body); break;
    case BodyPattern::Loop: e = d::loop(body); break;
    case BodyPattern::AllAssertionSingle: e = d::all_assertion_single(body); break;
    case BodyPattern::AllAssertionMultiple:
      e = d::all_assertion_multiple(body, &match.diagnostics);
      break;
    case BodyPattern::NoAssertionSoleMethod:
      if (no_asserts) e = d::no_assertion_sole_method(body);
      break;
    case BodyPattern::NoAssertionSingleDeclaration:
      if (no_asserts) e = d::no_assertion_single_declaration(body);
      break;
    case BodyPattern::NoAssertionSingleMethodInvocation:
      if (no_asserts) e = d::no_assertion_single_method_invocation(body);
      break;
    case BodyPattern::NoAssertionSingleNewObject:
      if (no_asserts) e = d::no_assertion_single_new_object(body);
      break;
    case BodyPattern::NoAssertion:
      if (no_asserts) e = d::no_assertion(body);
      break;
    case BodyPattern::NoAssertionGeneralized:
      if (no_asserts) e = d::no_assertion_generalized(body);
      break;
    case BodyPattern::NoAssertionMultipleDeclarations:
      if (no_asserts) e = d::no_assertion_multiple_declarations(body);
      break;
    case BodyPattern::NoAssertionMultipleMethodInvocations:
      if (no_asserts) e = d::no_assertion_multiple_method_invocations(body);
      break;
    case BodyPattern::TryCatchRestricted: e = d::try_catch_restricted(body); break;
    case BodyPattern::TryCatch: e = d::try_catch(body); break;
    case BodyPattern::TryCatchGeneralized: e = d::try_catch_generalized(body); break;
    case BodyPattern::NormalRestricted: e = d::normal_restricted(body); break;
    case BodyPattern::NormalGeneralized: e = d::normal_generalized(body); break;
  }
  if (!e) return std::nullopt;
  const PresenceRule& rule = body_pattern_info(p).presence;
  for (Component c : kComponents) {
    if (rule.get(c) == Presence::Never) e->get(c).clear();
  }
  if (e->empty() || !rule.admits(*e)) return std::nullopt;
  e->source = ExtractionSource::Body;
  match.extraction = std::move(*e);
  return match;
}

/// First pattern in catalog order that matches the body.
inline std::optional<BodyMatch> match_body(const TestCase& test) {
  for (const auto& info : kBodyPatterns) {
    if (auto m = match_body_pattern(info.id, test)) return m;
  }
  return std::nullopt;
}

namespace body_detail {
inline std::optional<std::pair<BodyPattern, Extraction>> first_of(
    const TestCase& test, std::initializer_list<BodyPattern> ids) {
  for (BodyPattern p : ids) {
    if (auto m = match_body_pattern(p, test)) return std::make_pair(p, m->extraction);
  }
  return std::nullopt;
}
}  // namespace body_detail

inline std::optional<Extraction> match_if_else(const TestCase& test) {
  auto m = match_body_pattern(BodyPattern::IfElse, test);
  return m ? std::optional<Extraction>(m->extraction) : std::nullopt;
}

inline std::optional<Extraction> match_loop(const TestCase& test) {
  auto m = match_body_pattern(BodyPattern::Loop, test);
  return m ? std::optional<Extraction>(m->extraction) : std::nullopt;
}

inline std::optional<std::pair<BodyPattern, Extraction>> match_try_catch_family(
    const TestCase& test) {
  return body_detail::first_of(test, {BodyPattern::TryCatchRestricted,
                                      BodyPattern::TryCatch,
                                      BodyPattern::TryCatchGeneralized});
}

inline std::optional<std::pair<BodyPattern, Extraction>> match_all_assertion(
    const TestCase& test) {
  return body_detail::first_of(
      test, {BodyPattern::AllAssertionSingle, BodyPattern::AllAssertionMultiple});
}

inline std::optional<std::pair<BodyPattern, Extraction>> match_normal(
    const TestCase& test) {
  return body_detail::first_of(
      test, {BodyPattern::NormalRestricted, BodyPattern::NormalGeneralized});
}

inline std::optional<std::pair<BodyPattern, Extraction>> match_no_assertion_family(
    const TestCase& test) {
  return body_detail::first_of(
      test, {BodyPattern::NoAssertionSoleMethod, BodyPattern::NoAssertionSingleDeclaration,
             BodyPattern::NoAssertionSingleMethodInvocation,
             BodyPattern::NoAssertionSingleNewObject, BodyPattern::NoAssertion,
             BodyPattern::NoAssertionGeneralized,
             BodyPattern::NoAssertionMultipleDeclarations,
             BodyPattern::NoAssertionMultipleMethodInvocations});
}

}  // namespace namecheck

#endif  // NAMECHECK_BODY_PATTERNS_HPP
