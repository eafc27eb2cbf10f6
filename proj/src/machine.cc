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

#include "fuzzym/machine.h"

#include <sstream>

namespace fuzzym {

char MoveLetter(Move move) {
  switch (move) {
    case Move::kLeft:
      return 'L';
    case Move::kNone:
      return 'N';
    case Move::kRight:
      return 'R';
  }
  return 'N';
}

std::string FormatTransition(const Transition& t) {
  std::ostringstream out;
  out << "( " << t.from_state << " , " << t.read << " ) -> ( " << t.to_state
      << " , " << t.write << " , " << MoveLetter(t.move) << " )";
  return out.str();
}

std::vector<Violation> ValidateMachine(const Machine& machine) {
  std::vector<Violation> violations;
  auto report = [&violations](std::string message) {
    violations.push_back(Violation{std::move(message), {}});
  };

  if (machine.states.empty()) report("machine has no states");
  if (!machine.states.contains(machine.start_state)) {
    report("start state '" + machine.start_state + "' is not a listed state");
  }
  if (!machine.states.contains(machine.final_state)) {
    report("final state '" + machine.final_state + "' is not a listed state");
  }
  if (!machine.tape_alphabet.contains(machine.blank)) {
    report("blank symbol '" + machine.blank + "' is not a tape symbol");
  }
  if (machine.input_alphabet.contains(machine.blank)) {
    report("blank symbol '" + machine.blank +
           "' must not be an input symbol (the blank lies outside the input "
           "alphabet)");
  }
  for (const std::string& symbol : machine.input_alphabet) {
    if (!machine.tape_alphabet.contains(symbol)) {
      report("input symbol '" + symbol + "' is not a tape symbol");
    }
  }
  for (const auto& [transition, degree] : machine.transitions) {
    const std::string where = "transition " + FormatTransition(transition);
    if (!machine.states.contains(transition.from_state)) {
      report(where + " names unknown state '" + transition.from_state + "'");
    }
    if (!machine.states.contains(transition.to_state)) {
      report(where + " names unknown state '" + transition.to_state + "'");
    }
    if (!machine.tape_alphabet.contains(transition.read)) {
      report(where + " reads unknown tape symbol '" + transition.read + "'");
    }
    if (!machine.tape_alphabet.contains(transition.write)) {
      report(where + " writes unknown tape symbol '" + transition.write + "'");
    }
  }
  return violations;
}

bool IsDeterministic(const Machine& machine) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [transition, degree] : machine.transitions) {
    if (!seen.insert({transition.from_state, transition.read}).second) {
      return false;
    }
  }
  return true;
}

namespace {

bool SingleCharInputs(const Machine& machine) {
  for (const std::string& symbol : machine.input_alphabet) {
    if (symbol.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::string FormatWord(const Machine& machine, const Word& word) {
  std::string out;
  const bool compact = SingleCharInputs(machine);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += word[i];
  }
  return out;
}

Word SplitInput(const Machine& machine, const std::string& text) {
  Word word;
  if (SingleCharInputs(machine)) {
    for (char c : text) word.push_back(std::string(1, c));
    return word;
  }
  std::istringstream in(text);
  std::string token;
  while (in >> token) word.push_back(token);
  return word;
}

}  // namespace fuzzym
