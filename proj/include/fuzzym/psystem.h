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
//
// Fuzzy P systems: nested membranes holding fuzzy multisets, rewritten by
// prioritized rules at discrete ticks, with cardinality-valued output.

#ifndef FUZZYM_PSYSTEM_H_
#define FUZZYM_PSYSTEM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fuzzym/degree.h"
#include "fuzzym/diagnostics.h"
#include "fuzzym/fuzzy_multiset.h"

namespace fuzzym {

// Where a produced object lands: the producing compartment, its parent
// (the environment, from the skin), or a named direct child.
struct RuleTarget {
  enum class Kind { kHere, kOut, kIn };
  Kind kind = Kind::kHere;
  std::string child_id;  // only for kIn

  friend bool operator==(const RuleTarget&, const RuleTarget&) = default;
};

struct RuleProduction {
  std::string symbol;
  RuleTarget target;
  Degree grade = Degree::One();

  friend bool operator==(const RuleProduction&, const RuleProduction&) = default;
};

// A multiset rewriting rule: consumes `lhs` copies, deposits one object
// per production. The grade of each deposited object is the t-norm of the
// minimum consumed grade, the rule's degree, and the production's grade.
struct Rule {
  std::map<std::string, std::size_t> lhs;  // symbol -> copies consumed
  std::vector<RuleProduction> rhs;
  Degree rule_degree = Degree::One();

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Compartment {
  std::string id;
  FuzzyMultiset contents;
  std::vector<Rule> rules;  // listed order is priority order
  std::vector<Compartment> children;

  friend bool operator==(const Compartment&, const Compartment&) = default;
};

// The membrane tree with its designated output compartment. The tree
// shape never changes during a run; only contents do.
struct PSystem {
  std::string name;
  Compartment skin;
  std::string output_id;
  NormKind norm = NormKind::kMinimum;
  std::uint64_t clock = 0;

  friend bool operator==(const PSystem&, const PSystem&) = default;
};

// Depth-first search for a compartment by id; nullptr when absent.
const Compartment* FindCompartment(const PSystem& system,
                                   const std::string& id);

// Reports every broken structural invariant (duplicate ids, missing
// output compartment, empty rule left-hand sides, `in` targets that name
// no direct child); empty means well formed.
std::vector<Violation> ValidateSystem(const PSystem& system);

// Rules of a compartment whose left-hand side is covered by the current
// contents, as (rule index, maximum simultaneous applications) pairs, in
// priority order. Each rule is judged against the full contents.
std::vector<std::pair<std::size_t, std::size_t>> ApplicableRules(
    const Compartment& compartment);

// True iff no rule is applicable in any compartment.
bool Halted(const PSystem& system);

// One synchronous step. Within each compartment rules fire maximally in
// priority order against the pre-tick contents; deposits are merged after
// all compartments have fired, and `out` from the skin discards to the
// environment. When nothing is applicable the system is returned
// unchanged and the clock does not advance.
PSystem Tick(const PSystem& system);

// Grade each production's objects get before deposit merging:
// tnorm(consumed_min, tnorm(rule_degree, production_grade)).
Degree ProducedGrade(NormKind norm, Degree consumed_min, Degree rule_degree,
                     Degree production_grade);

struct RunResult {
  double result = 0.0;  // cardinality of the output compartment
  bool halted = false;
  std::uint64_t ticks_used = 0;
  FuzzyMultiset output_contents;
};

// Ticks until halting or until the budget runs out. When `halted` is
// false the result is the budget-horizon snapshot rather than a final
// value. Throws std::invalid_argument when the system fails validation.
RunResult Run(const PSystem& system, std::uint64_t max_ticks);

}  // namespace fuzzym

#endif  // FUZZYM_PSYSTEM_H_
