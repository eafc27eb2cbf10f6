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
// Acceptance plausibility of input words: exact best-first search plus an
// exhaustive reference engine, and fuzzy languages built from either.

#ifndef FUZZYM_SEARCH_H_
#define FUZZYM_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fuzzym/configuration.h"
#include "fuzzym/fuzzy_set.h"
#include "fuzzym/machine.h"

namespace fuzzym {

// Plausibility degree of a computational path: 1 for the empty path,
// otherwise the left fold of the machine's t-norm over the transition
// degrees. Nonincreasing as the sequence extends.
Degree PathDegree(const Machine& machine, std::span<const Degree> alphas);

struct WitnessStep {
  Transition transition;
  Degree degree;  // the transition's own degree, not the running fold

  friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

// Outcome of an acceptance search.
//
// `degree` is the maximum path degree over computational paths within the
// step budget that reach the final state; it is 0 exactly when no such
// path with positive degree exists. `witness` holds the best accepting
// path (empty sequence when the initial configuration is already
// accepting; disengaged when degree is 0); ties between equal-degree
// paths break toward fewer steps, then the lexicographically least
// transition sequence. Folding the witness degrees with the machine's
// t-norm reproduces `degree`.
//
// `truncated` distinguishes a certain result from a horizon-limited lower
// bound: it is set when some branch still alive at the step budget could
// have folded to a degree above the returned one. `paths_explored` counts
// terminal paths for the exhaustive engine and expanded nodes for the
// best-first engine.
struct AcceptanceResult {
  Degree degree;
  std::optional<std::vector<WitnessStep>> witness;
  std::uint64_t paths_explored = 0;
  bool truncated = false;
};

// Called by the exhaustive engine with the transition degrees of each
// terminal explored path (accepted, dead, or cut at the budget).
using PathObserver = std::function<void(std::span<const Degree>)>;

// Exact acceptance degree for the bounded horizon via best-first expansion
// ordered by the running path degree, with dominance pruning of
// configurations already reached at least as well in no more steps.
// Zero-degree transitions and paths whose fold hits 0 are abandoned; a
// path is scored at its first arrival in the final state. Requires
// max_steps >= 1; throws InputError for invalid input symbols.
AcceptanceResult AcceptDegree(const Machine& machine, const Word& input,
                              std::size_t max_steps);

// Reference engine: exhaustive depth-first enumeration of every
// computational path up to the budget. Same degree contract as
// AcceptDegree; intended for small instances and as the equivalence
// oracle.
AcceptanceResult AcceptDegreeBruteforce(const Machine& machine,
                                        const Word& input,
                                        std::size_t max_steps,
                                        const PathObserver& observer = {});

// The fuzzy set { (w, e(w)) : |w| <= max_len, e(w) > cutoff } with e
// computed by AcceptDegree. Keys are words rendered by FormatWord.
FuzzySet FuzzyLanguage(const Machine& machine, std::size_t max_len,
                       std::size_t max_steps, Degree cutoff);

// All words over the input alphabet up to a length, shortest first and
// lexicographic within a length.
std::vector<Word> EnumerateWords(const Machine& machine, std::size_t max_len);

}  // namespace fuzzym

#endif  // FUZZYM_SEARCH_H_
