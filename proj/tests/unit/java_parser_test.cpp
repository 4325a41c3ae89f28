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

#include "namecheck/java_parser.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "namecheck/error.hpp"
#include "namecheck/java_lexer.hpp"

namespace namecheck {
namespace {

using java::parse_statements;

std::vector<StatementKind> kinds(const std::vector<Statement>& stmts) {
  std::vector<StatementKind> out;
  for (const auto& s : stmts) out.push_back(s.kind);
  return out;
}

TEST(JavaLexerTest, DropsCommentsAndTracksLines) {
  const auto tokens = java::tokenize("a /* x\ny */ b // z\nc");
  ASSERT_EQ(tokens.size(), 4u);  // a b c End
  EXPECT_EQ(tokens[0].text, "a");
  EXPECT_EQ(tokens[1].text, "b");
  EXPECT_EQ(tokens[1].line, 2u);
  EXPECT_EQ(tokens[2].line, 3u);
  EXPECT_EQ(tokens[3].type, java::TokenType::End);
}

TEST(JavaLexerTest, NeverJoinsClosingAngleBrackets) {
  const auto tokens = java::tokenize("List<List<String>> x; y >= 1;");
  int closers = 0;
  for (const auto& t : tokens) {
    EXPECT_NE(t.text, ">>");
    if (t.text == ">") ++closers;
  }
  EXPECT_EQ(closers, 2);
  bool has_ge = false;
  for (const auto& t : tokens) has_ge = has_ge || t.text == ">=";
  EXPECT_TRUE(has_ge);
}

TEST(JavaLexerTest, StringsKeepEscapedQuotes) {
  const auto tokens = java::tokenize(R"(f("a\"b", 'c');)");
  ASSERT_GE(tokens.size(), 3u);
  EXPECT_EQ(tokens[2].type, java::TokenType::String);
  EXPECT_EQ(tokens[2].text, R"("a\"b")");
}

TEST(AssertionNameTest, RecognizesJUnitStyleNames) {
  EXPECT_TRUE(is_assertion_name("assertEquals"));
  EXPECT_TRUE(is_assertion_name("assertThat"));
  EXPECT_TRUE(is_assertion_name("fail"));
  EXPECT_FALSE(is_assertion_name("assert"));
  EXPECT_FALSE(is_assertion_name("assertion"));
  EXPECT_FALSE(is_assertion_name("failed"));
}

TEST(ParseStatementsTest, ClassifiesSimpleStatements) {
  const auto s = parse_statements(R"(
      int x = compute();
      list.add(x);
      assertEquals(1, x);
      return;
      new Foo().bar();
      x++;
  )");
  EXPECT_EQ(kinds(s), (std::vector<StatementKind>{
                          StatementKind::Declaration, StatementKind::MethodInvocation,
                          StatementKind::Assertion, StatementKind::Return,
                          StatementKind::NewObject, StatementKind::Other}));
  EXPECT_EQ(s[0].target, "x");
  ASSERT_TRUE(s[1].expression);
  EXPECT_EQ(s[1].expression->callee_name, "add");
  EXPECT_EQ(s[1].expression->receiver->identifier, "list");
}

TEST(ParseStatementsTest, QualifiedAndFluentAssertions) {
  const auto s = parse_statements(
      "Assert.assertTrue(ok); assertThat(value).isEqualTo(3); "
      "org.junit.Assert.assertNull(x);");
  EXPECT_EQ(kinds(s), std::vector<StatementKind>(3, StatementKind::Assertion));
}

TEST(ParseStatementsTest, FailIsFailOnlyInsideTry) {
  const auto outside = parse_statements("fail(\"boom\");");
  EXPECT_EQ(outside[0].kind, StatementKind::Assertion);
  const auto inside = parse_statements("try { run(); fail(); } catch (Exception e) { }");
  ASSERT_EQ(inside[0].kind, StatementKind::TryCatch);
  EXPECT_EQ(kinds(inside[0].children),
            (std::vector<StatementKind>{StatementKind::MethodInvocation, StatementKind::Fail}));
  EXPECT_EQ(inside[0].handlers.size(), 1u);
  EXPECT_FALSE(inside[0].finalizer.has_value());
}

TEST(ParseStatementsTest, CompoundStatements) {
  const auto s = parse_statements(R"(
      if (a) { x(); } else if (b) { y(); } else { z(); }
      for (int i = 0; i < 3; i++) { step(i); }
      for (String e : items) step(e);
      while (more()) { next(); }
      do { next(); } while (more());
      try (Reader r = open()) { r.read(); } catch (A | B e) { } finally { close(); }
  )");
  EXPECT_EQ(kinds(s), (std::vector<StatementKind>{
                          StatementKind::IfElse, StatementKind::Loop, StatementKind::Loop,
                          StatementKind::Loop, StatementKind::Loop, StatementKind::TryCatch}));
  ASSERT_TRUE(s[0].alternative.has_value());
  ASSERT_EQ(s[0].alternative->size(), 1u);
  EXPECT_EQ((*s[0].alternative)[0].kind, StatementKind::IfElse);
  EXPECT_EQ(s[2].children.size(), 1u);
  EXPECT_TRUE(s[5].finalizer.has_value());
}

TEST(ParseStatementsTest, HandlesModernExpressions) {
  const auto s = parse_statements(R"(
      Map<String, List<Integer>> m = new HashMap<>();
      Runnable r = () -> { call(); };
      Function<String, Integer> f = String::length;
      int shifted = a >> 2 >>> 1;
      Object o = flag ? first() : second();
      if (o instanceof String str) { use(str); }
      int[] arr = {1, 2, 3};
      String t = (String) o;
      label: for (;;) { break label; }
  )");
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s[0].kind, StatementKind::Declaration);
  EXPECT_EQ(s[1].kind, StatementKind::Declaration);
  EXPECT_EQ(s[3].target, "shifted");
}

TEST(ParseStatementsTest, RecordsLines) {
  const auto s = parse_statements("a();\n\nb();");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].line, 1u);
  EXPECT_EQ(s[1].line, 3u);
}

TEST(ParseStatementsTest, OpaqueBlockRemembersAssertions) {
  const auto s = parse_statements("synchronized (lock) { assertTrue(ok); }");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].kind, StatementKind::Other);
  EXPECT_TRUE(s[0].contains_assertion);
}

TEST(ParseStatementsTest, MalformedBodyThrows) {
  EXPECT_THROW(parse_statements("int = ;"), ParseError);
}

TEST(ParseCompilationUnitTest, ReadsPackageImportsAndClasses) {
  const auto unit = java::parse_compilation_unit(R"(
      package org.example;
      import java.util.List;
      import static org.junit.Assert.*;
      import org.example.other.*;
      @RunWith(JUnit4.class)
      public class FooTest extends BaseTest {
        @Test public void testBar() { bar(); }
        static class Inner { void helper() {} }
        private abstract int abs();
      }
      interface Service { String call(); }
  )",
                                               "FooTest.java");
  EXPECT_EQ(unit.package, "org.example");
  EXPECT_EQ(unit.imports, (std::vector<std::string>{"java.util.List",
                                                    "static org.junit.Assert.*",
                                                    "org.example.other.*"}));
  ASSERT_EQ(unit.classes.size(), 3u);
  EXPECT_EQ(unit.classes[0].name, "FooTest");
  EXPECT_EQ(unit.classes[0].extends, "BaseTest");
  ASSERT_EQ(unit.classes[0].methods.size(), 2u);
  EXPECT_TRUE(unit.classes[0].methods[0].has_annotation("Test"));
  EXPECT_TRUE(unit.classes[0].methods[0].has_modifier("public"));
  EXPECT_EQ(unit.classes[0].methods[0].return_type, "void");
  EXPECT_FALSE(unit.classes[0].methods[1].has_body);
  EXPECT_EQ(unit.classes[1].name, "Inner");
  EXPECT_EQ(unit.classes[2].kind, "interface");
  EXPECT_TRUE(unit.classes[2].is_abstract());
  EXPECT_TRUE(unit.diagnostics.empty());
}

TEST(ParseCompilationUnitTest, BadMethodBodyBecomesDiagnostic) {
  const auto unit = java::parse_compilation_unit(R"(
      class T {
        @Test void broken() { int = ; }
        @Test void fine() { ok(); }
      }
  )",
                                               "T.java");
  ASSERT_EQ(unit.diagnostics.size(), 1u);
  EXPECT_EQ(unit.diagnostics[0].path, "T.java");
  EXPECT_EQ(unit.diagnostics[0].line, 3u);
  ASSERT_EQ(unit.classes[0].methods.size(), 2u);
  EXPECT_TRUE(unit.classes[0].methods[0].body_error.has_value());
  EXPECT_EQ(unit.classes[0].methods[1].body.size(), 1u);
}

TEST(ParseCompilationUnitTest, UnbalancedBracketsThrow) {
  EXPECT_THROW(java::parse_compilation_unit("class A { void f() { }", "A.java"), ParseError);
  EXPECT_THROW(java::parse_compilation_unit("class A { ) }", "A.java"), ParseError);
}

TEST(ParseCompilationUnitTest, EnumsAndRecords) {
  const auto unit = java::parse_compilation_unit(R"(
      enum Color { RED, GREEN { void f() {} }; void g() { h(); } }
      record Point(int x, int y) { int sum() { return x + y; } }
  )",
                                               "E.java");
  ASSERT_GE(unit.classes.size(), 2u);
  EXPECT_EQ(unit.classes[0].kind, "enum");
  EXPECT_TRUE(unit.diagnostics.empty());
}

}  // namespace
}  // namespace namecheck
