// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "fuzzym/parse.h"

namespace fuzzym {
namespace {

const char kTwoPathText[] = R"(# Two accepting routes with different folds.
machine two_path {
  states: q0 q1 qf ;
  input: a ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: product ;
  delta {
    ( q0 , a ) -> ( qf , a , N ) @ 0.6 ;
    ( q0 , a ) -> ( q1 , a , N ) @ 0.9 ;
    ( q1 , a ) -> ( qf , a , N ) @ 0.5 ;
  }
}
)";

Machine TwoPathMachine() {
  Machine machine;
  machine.name = "two_path";
  machine.states = {"q0", "q1", "qf"};
  machine.input_alphabet = {"a"};
  machine.tape_alphabet = {"a", "_"};
  machine.blank = "_";
  machine.start_state = "q0";
  machine.final_state = "qf";
  machine.norm = NormKind::kProduct;
  machine.transitions[{"q0", "a", "qf", "a", Move::kNone}] = Degree(0.6);
  machine.transitions[{"q0", "a", "q1", "a", Move::kNone}] = Degree(0.9);
  machine.transitions[{"q1", "a", "qf", "a", Move::kNone}] = Degree(0.5);
  return machine;
}

const char kAbSystemText[] = R"(psystem ab {
  norm: product ;
  output: skin ;
  membrane skin {
    contents: {a:2@1} ;
    rule: a -> b(here) @ 0.6 @@ 1 ;
  }
}
)";

TEST_CASE("machine description parses to the expected machine") {
  const ParseOutcome<Machine> outcome = ParseFtm(kTwoPathText);
  REQUIRE(outcome.Ok());
  CHECK(*outcome.value == TwoPathMachine());
}

TEST_CASE("defaults fill in omitted degrees") {
  const std::string text = R"(machine m {
  states: q0 qf ;
  input: a ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: min ;
  delta {
    ( q0 , a ) -> ( qf , a , N ) ;
  }
}
)";
  const ParseOutcome<Machine> outcome = ParseFtm(text);
  REQUIRE(outcome.Ok());
  CHECK(outcome.value->transitions.begin()->second == Degree::One());
}

TEST_CASE("missing clause is reported by name") {
  // The blank clause is absent; the parser points at `start` instead.
  const std::string text = R"(machine m {
  states: q0 ;
  input: a ;
  tape: _ a ;
  start: q0 ;
  final: q0 ;
  norm: min ;
  delta {
  }
}
)";
  const ParseOutcome<Machine> outcome = ParseFtm(text);
  REQUIRE(outcome.error.has_value());
  CHECK(outcome.error->expected == "'blank'");
  CHECK(outcome.error->Message().find("expected 'blank'") !=
        std::string::npos);
  CHECK(outcome.error->span.line == 5);
  CHECK(outcome.error->span.column == 3);
}

TEST_CASE("degrees outside the unit interval are parse errors") {
  const std::string text = R"(machine m {
  states: q0 qf ;
  input: a ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: min ;
  delta {
    ( q0 , a ) -> ( qf , a , N ) @ 1.2 ;
  }
}
)";
  const ParseOutcome<Machine> outcome = ParseFtm(text);
  REQUIRE(outcome.error.has_value());
  CHECK(outcome.error->Message().find("degree in [0,1]") != std::string::npos);
  CHECK(outcome.error->Message().find("found 1.2") != std::string::npos);
  CHECK(outcome.error->span.line == 10);
  CHECK(outcome.error->span.column == 36);
}

TEST_CASE("negative degrees are rejected, matching the documented stance") {
  const ParseOutcome<FuzzySet> outcome = ParseFuzzySetLiteral("{3@-0.9}");
  REQUIRE(outcome.error.has_value());
  CHECK(outcome.error->found == "-0.9");
  CHECK(outcome.error->Message().find("[0,1]") != std::string::npos);
}

TEST_CASE("semantic problems surface as violations, not parse errors") {
  const std::string text = R"(machine m {
  states: q0 qf ;
  input: a _ ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: min ;
  delta {
    ( q0 , a ) -> ( ghost , a , N ) @ 0.5 ;
  }
}
)";
  const ParseOutcome<Machine> outcome = ParseFtm(text);
  REQUIRE(outcome.value.has_value());
  CHECK_FALSE(outcome.error.has_value());
  CHECK(outcome.violations.size() >= 2);  // blank in input, unknown state
  CHECK_FALSE(outcome.Ok());
}

TEST_CASE("conflicting duplicate transitions carry both spans") {
  const std::string text = R"(machine m {
  states: q0 qf ;
  input: a ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: min ;
  delta {
    ( q0 , a ) -> ( qf , a , N ) @ 0.5 ;
    ( q0 , a ) -> ( qf , a , N ) @ 0.6 ;
  }
}
)";
  const ParseOutcome<Machine> outcome = ParseFtm(text);
  REQUIRE(outcome.value.has_value());
  REQUIRE(outcome.violations.size() == 1);
  CHECK(outcome.violations[0].message.find("conflicting degrees") !=
        std::string::npos);
  REQUIRE(outcome.violations[0].spans.size() == 2);
  CHECK(outcome.violations[0].spans[0].line == 10);
  CHECK(outcome.violations[0].spans[1].line == 11);

  // The same transition listed twice at the same degree is just redundant.
  const std::string same = R"(machine m {
  states: q0 qf ;
  input: a ;
  tape: _ a ;
  blank: _ ;
  start: q0 ;
  final: qf ;
  norm: min ;
  delta {
    ( q0 , a ) -> ( qf , a , N ) @ 0.5 ;
    ( q0 , a ) -> ( qf , a , N ) @ 0.5 ;
  }
}
)";
  CHECK(ParseFtm(same).Ok());
}

TEST_CASE("psystem description parses with nesting and defaults") {
  const ParseOutcome<PSystem> outcome = ParseFps(kAbSystemText);
  REQUIRE(outcome.Ok());
  const PSystem& system = outcome.value.value();
  CHECK(system.name == "ab");
  CHECK(system.norm == NormKind::kProduct);
  CHECK(system.output_id == "skin");
  CHECK(system.skin.id == "skin");
  CHECK(system.skin.contents.MultiplicityOf("a") == 2);
  CHECK(system.skin.contents.GradeOf("a") == Degree::One());
  REQUIRE(system.skin.rules.size() == 1);
  const Rule& rule = system.skin.rules[0];
  CHECK(rule.lhs.at("a") == 1);
  REQUIRE(rule.rhs.size() == 1);
  CHECK(rule.rhs[0].symbol == "b");
  CHECK(rule.rhs[0].target.kind == RuleTarget::Kind::kHere);
  CHECK(rule.rhs[0].grade.value() == 0.6);
  CHECK(rule.rule_degree == Degree::One());
}

TEST_CASE("rule defaults are target here, production grade 1, rule degree 1") {
  const std::string text = R"(psystem p {
  norm: min ;
  output: m1 ;
  membrane m1 {
    contents: {} ;
    rule: a a -> b c(out) ;
  }
}
)";
  const ParseOutcome<PSystem> outcome = ParseFps(text);
  REQUIRE(outcome.Ok());
  const Rule& rule = outcome.value->skin.rules[0];
  CHECK(rule.lhs.at("a") == 2);
  REQUIRE(rule.rhs.size() == 2);
  CHECK(rule.rhs[0].target.kind == RuleTarget::Kind::kHere);
  CHECK(rule.rhs[0].grade == Degree::One());
  CHECK(rule.rhs[1].target.kind == RuleTarget::Kind::kOut);
  CHECK(rule.rule_degree == Degree::One());
}

TEST_CASE("nested membranes mirror the text structure") {
  const std::string text = R"(psystem nest {
  norm: min ;
  output: inner ;
  membrane outer {
    contents: {a:1@1} ;
    rule: a -> a(in inner) @ 0.5 ;
    membrane inner {
      contents: {} ;
    }
  }
}
)";
  const ParseOutcome<PSystem> outcome = ParseFps(text);
  REQUIRE(outcome.Ok());
  REQUIRE(outcome.value->skin.children.size() == 1);
  CHECK(outcome.value->skin.children[0].id == "inner");
  CHECK(outcome.value->skin.rules[0].rhs[0].target.kind ==
        RuleTarget::Kind::kIn);
  CHECK(outcome.value->skin.rules[0].rhs[0].target.child_id == "inner");
}

TEST_CASE("duplicate membrane ids report both spans") {
  const std::string text = R"(psystem p {
  norm: min ;
  output: m1 ;
  membrane m1 {
    contents: {} ;
    membrane m1 {
      contents: {} ;
    }
  }
}
)";
  const ParseOutcome<PSystem> outcome = ParseFps(text);
  REQUIRE(outcome.value.has_value());
  REQUIRE(outcome.violations.size() == 1);
  CHECK(outcome.violations[0].message.find("duplicate membrane id 'm1'") !=
        std::string::npos);
  REQUIRE(outcome.violations[0].spans.size() == 2);
  CHECK(outcome.violations[0].spans[0].line == 4);
  CHECK(outcome.violations[0].spans[1].line == 6);
}

TEST_CASE("in targets must name a direct child") {
  const std::string text = R"(psystem p {
  norm: min ;
  output: m1 ;
  membrane m1 {
    contents: {a:1@1} ;
    rule: a -> a(in nowhere) ;
  }
}
)";
  const ParseOutcome<PSystem> outcome = ParseFps(text);
  REQUIRE(outcome.value.has_value());
  REQUIRE_FALSE(outcome.violations.empty());
  CHECK(outcome.violations[0].message.find("nowhere") != std::string::npos);
  CHECK_FALSE(outcome.violations[0].spans.empty());
}

TEST_CASE("unknown output compartment is a violation with a span") {
  const std::string text = R"(psystem p {
  norm: min ;
  output: ghost ;
  membrane m1 {
    contents: {} ;
  }
}
)";
  const ParseOutcome<PSystem> outcome = ParseFps(text);
  REQUIRE(outcome.value.has_value());
  REQUIRE_FALSE(outcome.violations.empty());
  CHECK(outcome.violations[0].message.find("ghost") != std::string::npos);
  REQUIRE(outcome.violations[0].spans.size() == 1);
  CHECK(outcome.violations[0].spans[0].line == 3);
  CHECK(outcome.violations[0].spans[0].column == 11);
}

TEST_CASE("multiset literal semantics") {
  const ParseOutcome<FuzzyMultiset> outcome =
      ParseFuzzyMultisetLiteral("{a:2@0.5, b:3@1}");
  REQUIRE(outcome.Ok());
  CHECK(outcome.value->MultiplicityOf("a") == 2);
  CHECK(outcome.value->GradeOf("a").value() == 0.5);
  CHECK(outcome.value->MultiplicityOf("b") == 3);
  CHECK(outcome.value->GradeOf("b") == Degree::One());

  CHECK(ParseFuzzyMultisetLiteral("{}").Ok());
  CHECK(ParseFuzzyMultisetLiteral("{a:0@1}").error.has_value());
  CHECK(ParseFuzzyMultisetLiteral("{a:2.5@1}").error.has_value());
  CHECK(ParseFuzzyMultisetLiteral("{a:1@1, a:2@1}").error.has_value());
  CHECK(ParseFuzzyMultisetLiteral("{a:1@1} junk").error.has_value());
}

TEST_CASE("pair and tuple set literals are equivalent") {
  const ParseOutcome<FuzzySet> pair = ParseFuzzySetLiteral("{2@0.3, 6@0.5}");
  const ParseOutcome<FuzzySet> tuple =
      ParseFuzzySetLiteral("fuzzy set (2,0.3), (6,0.5)");
  const ParseOutcome<FuzzySet> tuple_semi =
      ParseFuzzySetLiteral("fuzzy set (2,0.3), (6,0.5);");
  REQUIRE(pair.Ok());
  REQUIRE(tuple.Ok());
  REQUIRE(tuple_semi.Ok());
  CHECK(*pair.value == *tuple.value);
  CHECK(*pair.value == *tuple_semi.value);
  CHECK(pair.value->At("2").value() == 0.3);
  CHECK(pair.value->At("6").value() == 0.5);

  CHECK(ParseFuzzySetLiteral("{}").Ok());
  CHECK(ParseFuzzySetLiteral("{2@0.3, 2@0.4}").error.has_value());
  CHECK(ParseFuzzySetLiteral("{2@0.3").error.has_value());
}

TEST_CASE("lexical junk yields a positioned error, never a crash") {
  const ParseOutcome<Machine> outcome = ParseFtm("machine $ {");
  REQUIRE(outcome.error.has_value());
  CHECK(outcome.error->found == "'$'");
  CHECK(outcome.error->span.line == 1);
  CHECK(outcome.error->span.column == 9);

  CHECK(ParseFtm("").error.has_value());
  CHECK(ParseFps("psystem").error.has_value());
  CHECK(ParseFtm("machine m { states: ; }").error.has_value());
}

TEST_CASE("error positions are one-based line and column") {
  const ParseOutcome<Machine> outcome = ParseFtm("machinery");
  REQUIRE(outcome.error.has_value());
  CHECK(outcome.error->span.line == 1);
  CHECK(outcome.error->span.column == 1);
  CHECK(outcome.error->expected == "'machine'");
  CHECK(outcome.error->found == "'machinery'");
  CHECK(outcome.error->Message() ==
        "line 1, col 1: expected 'machine', found 'machinery'");
}

TEST_CASE("description keyword sniffs the top-level form") {
  CHECK(DescriptionKeyword(kTwoPathText) == "machine");
  CHECK(DescriptionKeyword(kAbSystemText) == "psystem");
  CHECK(DescriptionKeyword("# only a comment\n").empty());
  CHECK(DescriptionKeyword("{1@1}").empty());
}

}  // namespace
}  // namespace fuzzym
