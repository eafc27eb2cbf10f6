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

#include "fuzzym/configuration.h"

namespace fuzzym {

InputError::InputError(std::string symbol, std::size_t position)
    : std::runtime_error("input symbol '" + symbol + "' at position " +
                         std::to_string(position) +
                         " is not in the input alphabet"),
      symbol_(std::move(symbol)),
      position_(position) {}

namespace {

void TrimTrailingBlanks(const Machine& machine,
                        std::vector<std::string>* tape) {
  while (!tape->empty() && tape->back() == machine.blank) tape->pop_back();
}

}  // namespace

Configuration InitialConfiguration(const Machine& machine, const Word& input) {
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!machine.input_alphabet.contains(input[i])) {
      throw InputError(input[i], i);
    }
  }
  Configuration config;
  config.tape = input;
  config.head = 0;
  config.state = machine.start_state;
  TrimTrailingBlanks(machine, &config.tape);  // input never contains blanks
  return config;
}

const std::string& ReadSymbol(const Machine& machine,
                              const Configuration& config) {
  return config.head < config.tape.size() ? config.tape[config.head]
                                          : machine.blank;
}

std::vector<StepEdge> Step(const Machine& machine,
                           const Configuration& config) {
  std::vector<StepEdge> edges;
  const std::string scanned = ReadSymbol(machine, config);
  for (const auto& [transition, degree] : machine.transitions) {
    if (transition.from_state != config.state || transition.read != scanned) {
      continue;
    }
    if (transition.move == Move::kLeft && config.head == 0) {
      continue;  // no cell left of the leftmost cell
    }
    Configuration next;
    next.tape = config.tape;
    if (config.head >= next.tape.size()) {
      next.tape.resize(config.head + 1, machine.blank);
    }
    next.tape[config.head] = transition.write;
    TrimTrailingBlanks(machine, &next.tape);
    switch (transition.move) {
      case Move::kLeft:
        next.head = config.head - 1;
        break;
      case Move::kNone:
        next.head = config.head;
        break;
      case Move::kRight:
        next.head = config.head + 1;
        break;
    }
    next.state = transition.to_state;
    edges.push_back(StepEdge{transition, std::move(next), degree});
  }
  return edges;
}

}  // namespace fuzzym
