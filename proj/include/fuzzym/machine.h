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
// Fuzzy Turing machines over a unidirectional tape: the machine tuple and
// its structural checks.

#ifndef FUZZYM_MACHINE_H_
#define FUZZYM_MACHINE_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fuzzym/degree.h"
#include "fuzzym/diagnostics.h"

namespace fuzzym {

enum class Move { kLeft, kNone, kRight };

char MoveLetter(Move move);

// A single rewrite action: in `from_state` reading `read`, enter
// `to_state`, print `write`, and move the head per `move`.
struct Transition {
  std::string from_state;
  std::string read;
  std::string to_state;
  std::string write;
  Move move = Move::kNone;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

std::string FormatTransition(const Transition& t);

// The machine tuple: states, tape and input alphabets, weighted transition
// relation, blank symbol, start and final states, and the t-norm that
// composes plausibility degrees along computation paths.
struct Machine {
  std::string name;
  std::set<std::string> states;
  std::set<std::string> tape_alphabet;
  std::set<std::string> input_alphabet;
  std::map<Transition, Degree> transitions;  // the relation with its degrees
  std::string blank;
  std::string start_state;
  std::string final_state;
  NormKind norm = NormKind::kMinimum;

  friend bool operator==(const Machine&, const Machine&) = default;
};

// Reports every broken structural invariant; empty means well formed.
// Violations are data, not failures.
std::vector<Violation> ValidateMachine(const Machine& machine);

// True iff no two transitions share (from_state, read), i.e. the relation
// is a partial function on state-symbol pairs.
bool IsDeterministic(const Machine& machine);

// Input words are sequences of input symbols.
using Word = std::vector<std::string>;

// Renders a word for display: symbols are concatenated when every input
// symbol is a single character, otherwise joined with spaces. The empty
// word renders as the empty string.
std::string FormatWord(const Machine& machine, const Word& word);

// Splits CLI text into a word: one symbol per character when every input
// symbol is a single character, otherwise whitespace-separated tokens.
Word SplitInput(const Machine& machine, const std::string& text);

}  // namespace fuzzym

#endif  // FUZZYM_MACHINE_H_
