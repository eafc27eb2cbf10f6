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

#include "fuzzym/serialize.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzym/format.h"
#include "fuzzym/parse.h"

namespace fuzzym {
namespace {

void RequireIdentifier(const std::string& text, const std::string& what) {
  if (!LexesAsIdentifier(text)) {
    throw std::invalid_argument(what + " '" + text +
                                "' is not a lexable identifier");
  }
}

void RequireSymbol(const std::string& text) {
  if (!LexesAsSymbol(text)) {
    throw std::invalid_argument("symbol '" + text +
                                "' is not lexable as a symbol");
  }
}

void RequireValid(const std::vector<Violation>& violations) {
  if (!violations.empty()) {
    throw std::invalid_argument("cannot serialize: " + violations[0].message);
  }
}

std::string FormatRule(const Rule& rule) {
  std::string out = "rule:";
  for (const auto& [symbol, copies] : rule.lhs) {
    RequireSymbol(symbol);
    for (std::size_t k = 0; k < copies; ++k) {
      out += " " + symbol;
    }
  }
  out += " ->";
  if (rule.rhs.empty()) {
    throw std::invalid_argument(
        "cannot serialize a rule with no productions");
  }
  for (const RuleProduction& production : rule.rhs) {
    RequireSymbol(production.symbol);
    out += " " + production.symbol;
    switch (production.target.kind) {
      case RuleTarget::Kind::kHere:
        out += "(here)";
        break;
      case RuleTarget::Kind::kOut:
        out += "(out)";
        break;
      case RuleTarget::Kind::kIn:
        RequireIdentifier(production.target.child_id, "membrane id");
        out += "(in " + production.target.child_id + ")";
        break;
    }
    out += " @ " + FormatDoubleExact(production.grade.value());
  }
  out += " @@ " + FormatDoubleExact(rule.rule_degree.value());
  return out;
}

void WriteMembrane(const Compartment& compartment, int depth,
                   std::string& out) {
  const std::string indent(2 * depth, ' ');
  RequireIdentifier(compartment.id, "membrane id");
  for (const auto& [symbol, entry] : compartment.contents.entries()) {
    RequireSymbol(symbol);
  }
  out += indent + "membrane " + compartment.id + " {\n";
  out += indent + "  contents: " + FormatFuzzyMultiset(compartment.contents) +
         " ;\n";
  for (const Rule& rule : compartment.rules) {
    out += indent + "  " + FormatRule(rule) + " ;\n";
  }
  for (const Compartment& child : compartment.children) {
    WriteMembrane(child, depth + 1, out);
  }
  out += indent + "}\n";
}

}  // namespace

std::string SerializeFtm(const Machine& machine) {
  RequireValid(ValidateMachine(machine));
  if (machine.states.empty() || machine.input_alphabet.empty() ||
      machine.tape_alphabet.empty()) {
    throw std::invalid_argument(
        "cannot serialize: the description language needs at least one "
        "state, input symbol, and tape symbol");
  }
  RequireIdentifier(machine.name, "machine name");
  for (const std::string& state : machine.states) {
    RequireIdentifier(state, "state");
  }
  for (const std::string& symbol : machine.tape_alphabet) {
    RequireSymbol(symbol);
  }

  std::string out = "machine " + machine.name + " {\n";
  auto list_clause = [&out](const std::string& keyword, const auto& items) {
    out += "  " + keyword + ":";
    for (const std::string& item : items) {
      out += " " + item;
    }
    out += " ;\n";
  };
  list_clause("states", machine.states);
  list_clause("input", machine.input_alphabet);
  list_clause("tape", machine.tape_alphabet);
  out += "  blank: " + machine.blank + " ;\n";
  out += "  start: " + machine.start_state + " ;\n";
  out += "  final: " + machine.final_state + " ;\n";
  out += "  norm: " + std::string(NormName(machine.norm)) + " ;\n";
  out += "  delta {\n";
  for (const auto& [transition, degree] : machine.transitions) {
    out += "    " + FormatTransition(transition) + " @ " +
           FormatDoubleExact(degree.value()) + " ;\n";
  }
  out += "  }\n";
  out += "}\n";
  return out;
}

std::string SerializeFps(const PSystem& system) {
  RequireValid(ValidateSystem(system));
  RequireIdentifier(system.name, "system name");
  std::string out = "psystem " + system.name + " {\n";
  out += "  norm: " + std::string(NormName(system.norm)) + " ;\n";
  out += "  output: " + system.output_id + " ;\n";
  WriteMembrane(system.skin, 1, out);
  out += "}\n";
  return out;
}

std::string FormatFuzzySet(const FuzzySet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& [element, grade] : set.membership()) {
    if (!first) out += ", ";
    first = false;
    out += element + "@" + FormatDoubleExact(grade.value());
  }
  out += "}";
  return out;
}

std::string FormatFuzzyMultiset(const FuzzyMultiset& multiset) {
  std::string out = "{";
  bool first = true;
  for (const auto& [symbol, entry] : multiset.entries()) {
    if (!first) out += ", ";
    first = false;
    out += symbol + ":" + std::to_string(entry.multiplicity) + "@" +
           FormatDoubleExact(entry.grade.value());
  }
  out += "}";
  return out;
}

}  // namespace fuzzym
