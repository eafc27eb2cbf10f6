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
// Random instance generators and independent reference implementations
// used by the property and acceptance suites. The references re-derive
// the semantics from scratch (plain breadth-first reachability, plain
// count rewriting) so they share no engine code with the library.

#ifndef FUZZYM_TESTS_TESTUTIL_H_
#define FUZZYM_TESTS_TESTUTIL_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "fuzzym/fuzzy_multiset.h"
#include "fuzzym/fuzzy_set.h"
#include "fuzzym/machine.h"
#include "fuzzym/psystem.h"

namespace fuzzym::testutil {

// Degree biased toward the boundary values 0 and 1 so properties meet the
// degenerate cases often.
Degree RandomDegree(std::mt19937_64& rng);

// Fuzzy set over the universe {e0 .. e(universe_size-1)}; each element
// gets a degree with probability 1/2.
FuzzySet RandomFuzzySet(std::mt19937_64& rng, int universe_size);

// Multiset over at most `max_symbols` symbols with multiplicities in
// [1, max_multiplicity].
FuzzyMultiset RandomFuzzyMultiset(std::mt19937_64& rng, int max_symbols,
                                  int max_multiplicity);

// Machine with |Q| <= 4, |T| <= 3, |Delta| <= 8 and at most 2 transitions
// per (state, read) slot. The slot cap keeps exhaustive path enumeration
// at depth 10 around 2^10 paths per input.
Machine RandomMachine(std::mt19937_64& rng);

// As RandomMachine but every transition degree is exactly 1.
Machine RandomCrispMachine(std::mt19937_64& rng);

// Single-membrane system whose degrees are all exactly 1 and whose rule
// targets are here/out only.
PSystem RandomCrispSingleMembraneSystem(std::mt19937_64& rng);

// System of 1 to 3 nested membranes with arbitrary degrees and targets;
// suitable for serializer round-trips and engine property tests.
PSystem RandomNestedSystem(std::mt19937_64& rng);

// Independent bounded-reachability check for a classical nondeterministic
// machine: true iff some path of at most max_steps transitions reaches
// the final state. Ignores degrees entirely.
bool CrispReachable(const Machine& machine, const Word& input,
                    std::size_t max_steps);

struct CrispRunOutcome {
  std::map<std::string, std::size_t> counts;  // skin contents at the end
  bool halted = false;
  std::uint64_t ticks_used = 0;
};

// Independent single-membrane P-system run over plain counts: rules fire
// maximally in listed order against the tick-start contents minus what
// earlier rules consumed; productions land after the whole tick; `out`
// discards. Requires a system generated by
// RandomCrispSingleMembraneSystem.
CrispRunOutcome CrispReferenceRun(const PSystem& system,
                                  std::uint64_t max_ticks);

// Cardinality by expanding every copy into its own term and summing the
// grades one at a time.
double CardinalityByExpansion(const FuzzyMultiset& multiset);

}  // namespace fuzzym::testutil

#endif  // FUZZYM_TESTS_TESTUTIL_H_
