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

#include "fuzzym/psystem.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fuzzym {

namespace {

const Compartment* FindIn(const Compartment& compartment,
                          const std::string& id) {
  if (compartment.id == id) return &compartment;
  for (const Compartment& child : compartment.children) {
    if (const Compartment* found = FindIn(child, id)) return found;
  }
  return nullptr;
}

void CollectIds(const Compartment& compartment,
                std::map<std::string, int>* counts) {
  ++(*counts)[compartment.id];
  for (const Compartment& child : compartment.children) {
    CollectIds(child, counts);
  }
}

void ValidateCompartment(const Compartment& compartment,
                         std::vector<Violation>* violations) {
  for (std::size_t i = 0; i < compartment.rules.size(); ++i) {
    const Rule& rule = compartment.rules[i];
    const std::string where = "rule " + std::to_string(i + 1) +
                              " of compartment '" + compartment.id + "'";
    if (rule.lhs.empty()) {
      violations->push_back(
          Violation{where + " consumes nothing (empty left-hand side)", {}});
    }
    for (const auto& [symbol, count] : rule.lhs) {
      if (count == 0) {
        violations->push_back(Violation{
            where + " lists symbol '" + symbol + "' with zero copies", {}});
      }
    }
    for (const RuleProduction& production : rule.rhs) {
      if (production.target.kind != RuleTarget::Kind::kIn) continue;
      const bool is_child = std::any_of(
          compartment.children.begin(), compartment.children.end(),
          [&production](const Compartment& child) {
            return child.id == production.target.child_id;
          });
      if (!is_child) {
        violations->push_back(
            Violation{where + " targets 'in " + production.target.child_id +
                          "' which is not a direct child",
                      {}});
      }
    }
  }
  for (const Compartment& child : compartment.children) {
    ValidateCompartment(child, violations);
  }
}

}  // namespace

const Compartment* FindCompartment(const PSystem& system,
                                   const std::string& id) {
  return FindIn(system.skin, id);
}

std::vector<Violation> ValidateSystem(const PSystem& system) {
  std::vector<Violation> violations;
  std::map<std::string, int> id_counts;
  CollectIds(system.skin, &id_counts);
  for (const auto& [id, count] : id_counts) {
    if (count > 1) {
      violations.push_back(Violation{
          "compartment id '" + id + "' is used " + std::to_string(count) +
              " times; ids must be unique",
          {}});
    }
  }
  if (!id_counts.contains(system.output_id)) {
    violations.push_back(Violation{
        "output compartment '" + system.output_id + "' does not exist", {}});
  }
  ValidateCompartment(system.skin, &violations);
  return violations;
}

namespace {

std::size_t MaxApplications(const Rule& rule, const FuzzyMultiset& contents) {
  std::size_t applications = std::numeric_limits<std::size_t>::max();
  if (rule.lhs.empty()) return 0;
  for (const auto& [symbol, needed] : rule.lhs) {
    if (needed == 0) return 0;
    applications = std::min(applications, contents.MultiplicityOf(symbol) / needed);
    if (applications == 0) return 0;
  }
  return applications;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> ApplicableRules(
    const Compartment& compartment) {
  std::vector<std::pair<std::size_t, std::size_t>> applicable;
  for (std::size_t i = 0; i < compartment.rules.size(); ++i) {
    const std::size_t count =
        MaxApplications(compartment.rules[i], compartment.contents);
    if (count > 0) applicable.emplace_back(i, count);
  }
  return applicable;
}

namespace {

bool AnyApplicable(const Compartment& compartment) {
  if (!ApplicableRules(compartment).empty()) return true;
  for (const Compartment& child : compartment.children) {
    if (AnyApplicable(child)) return true;
  }
  return false;
}

struct Deposit {
  Compartment* destination;  // nullptr = environment
  std::string symbol;
  std::size_t copies;
  Degree grade;
};

// Fires the rules of one compartment against its own contents, consuming
// copies rule by rule in priority order and queueing deposits. Recurses
// into children. `parent` is nullptr at the skin.
void FireCompartment(NormKind norm, Compartment* compartment,
                     Compartment* parent, std::vector<Deposit>* deposits) {
  FuzzyMultiset& working = compartment->contents;
  for (const Rule& rule : compartment->rules) {
    const std::size_t applications = MaxApplications(rule, working);
    if (applications == 0) continue;
    // All copies of a symbol share one grade, so every application of
    // this rule consumes at the same minimum grade.
    Degree consumed_min = Degree::One();
    for (const auto& [symbol, needed] : rule.lhs) {
      consumed_min = std::min(consumed_min, working.GradeOf(symbol));
    }
    for (const auto& [symbol, needed] : rule.lhs) {
      working.Set(symbol, working.MultiplicityOf(symbol) - applications * needed,
                  working.GradeOf(symbol));
    }
    for (const RuleProduction& production : rule.rhs) {
      Compartment* destination = compartment;
      switch (production.target.kind) {
        case RuleTarget::Kind::kHere:
          break;
        case RuleTarget::Kind::kOut:
          destination = parent;  // environment from the skin
          break;
        case RuleTarget::Kind::kIn: {
          destination = nullptr;
          for (Compartment& child : compartment->children) {
            if (child.id == production.target.child_id) {
              destination = &child;
              break;
            }
          }
          break;
        }
      }
      deposits->push_back(Deposit{
          destination, production.symbol, applications,
          ProducedGrade(norm, consumed_min, rule.rule_degree, production.grade)});
    }
  }
  for (Compartment& child : compartment->children) {
    FireCompartment(norm, &child, compartment, deposits);
  }
}

}  // namespace

Degree ProducedGrade(NormKind norm, Degree consumed_min, Degree rule_degree,
                     Degree production_grade) {
  return Tnorm(norm, consumed_min, Tnorm(norm, rule_degree, production_grade));
}

bool Halted(const PSystem& system) { return !AnyApplicable(system.skin); }

PSystem Tick(const PSystem& system) {
  if (Halted(system)) return system;  // the clock does not advance
  PSystem next = system;
  std::vector<Deposit> deposits;
  FireCompartment(next.norm, &next.skin, nullptr, &deposits);
  // Deposits merge in firing order, after every compartment has consumed
  // from its pre-tick contents.
  for (const Deposit& deposit : deposits) {
    if (deposit.destination == nullptr) continue;  // environment
    FuzzyMultiset addition;
    addition.Set(deposit.symbol, deposit.copies, deposit.grade);
    deposit.destination->contents =
        Merge(deposit.destination->contents, addition, next.norm);
  }
  ++next.clock;
  return next;
}

RunResult Run(const PSystem& system, std::uint64_t max_ticks) {
  const std::vector<Violation> violations = ValidateSystem(system);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid P system: " + violations.front().message);
  }
  PSystem current = system;
  RunResult result;
  while (result.ticks_used < max_ticks && !Halted(current)) {
    current = Tick(current);
    ++result.ticks_used;
  }
  result.halted = Halted(current);
  const Compartment* output = FindCompartment(current, current.output_id);
  result.output_contents = output->contents;
  result.result = Cardinality(result.output_contents);
  return result;
}

}  // namespace fuzzym
