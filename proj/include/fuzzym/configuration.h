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
// Machine configurations and the one-step transition semantics.

#ifndef FUZZYM_CONFIGURATION_H_
#define FUZZYM_CONFIGURATION_H_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuzzym/machine.h"

namespace fuzzym {

// A snapshot of tape contents, head position and control state. The tape
// is the written prefix of the unidirectional tape; cells beyond it hold
// the blank. Trailing blanks are trimmed, so structural equality is
// configuration equality. The head may sit past the written region.
struct Configuration {
  std::vector<std::string> tape;
  std::size_t head = 0;
  std::string state;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Raised when an input word uses a symbol outside the input alphabet.
class InputError : public std::runtime_error {
 public:
  InputError(std::string symbol, std::size_t position);

  const std::string& symbol() const { return symbol_; }
  std::size_t position() const { return position_; }

 private:
  std::string symbol_;
  std::size_t position_;
};

// The start of a computation on `input`: the word printed from the
// leftmost cell, head atop cell 0, control in the start state. Throws
// InputError for symbols outside the input alphabet.
Configuration InitialConfiguration(const Machine& machine, const Word& input);

// Symbol under the head; the blank beyond the written region.
const std::string& ReadSymbol(const Machine& machine,
                              const Configuration& config);

// One applicable transition together with the configuration it produces
// and its plausibility degree.
struct StepEdge {
  Transition transition;
  Configuration successor;
  Degree degree;
};

// Every one-step successor of a configuration: one edge per transition
// whose (from_state, read) matches. A left move at cell 0 is inapplicable
// and yields no edge. Edges follow the machine's transition order, so the
// output is deterministic.
std::vector<StepEdge> Step(const Machine& machine, const Configuration& config);

}  // namespace fuzzym

#endif  // FUZZYM_CONFIGURATION_H_
