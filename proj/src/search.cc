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

#include "fuzzym/search.h"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace fuzzym {

Degree PathDegree(const Machine& machine, std::span<const Degree> alphas) {
  Degree folded = Degree::One();
  for (const Degree& alpha : alphas) {
    folded = Tnorm(machine.norm, folded, alpha);
  }
  return folded;
}

namespace {

// Path preference shared by both engines: higher degree, then fewer
// steps, then the lexicographically least transition sequence.
bool BetterPath(double degree_a, const std::vector<Transition>& path_a,
                double degree_b, const std::vector<Transition>& path_b) {
  if (degree_a != degree_b) return degree_a > degree_b;
  if (path_a.size() != path_b.size()) return path_a.size() < path_b.size();
  return path_a < path_b;
}

void RequirePositiveBudget(std::size_t max_steps) {
  if (max_steps == 0) {
    throw std::invalid_argument("max_steps must be at least 1");
  }
}

std::vector<WitnessStep> MakeWitness(const Machine& machine,
                                     const std::vector<Transition>& path) {
  std::vector<WitnessStep> witness;
  witness.reserve(path.size());
  for (const Transition& transition : path) {
    witness.push_back(WitnessStep{transition, machine.transitions.at(transition)});
  }
  return witness;
}

// Largest degree any continuation of a budget-limited branch could still
// reach: the best one-step fold over its applicable transitions. Feeds
// the truncation flag.
double BestContinuationFold(const Machine& machine, const Configuration& config,
                            double folded) {
  double best = 0.0;
  for (const StepEdge& edge : Step(machine, config)) {
    if (edge.degree == Degree::Zero()) continue;
    const double next =
        Tnorm(machine.norm, Degree(folded), edge.degree).value();
    best = std::max(best, next);
  }
  return best;
}

struct DepthFirstEngine {
  DepthFirstEngine(const Machine& machine_in, std::size_t max_steps_in,
                   const PathObserver& observer_in)
      : machine(machine_in), max_steps(max_steps_in), observer(observer_in) {}

  const Machine& machine;
  std::size_t max_steps;
  const PathObserver& observer;

  std::vector<Degree> alphas;
  std::vector<Transition> path;
  std::vector<double> folds{1.0};

  bool found = false;
  double best_degree = 0.0;
  std::vector<Transition> best_path;
  std::uint64_t paths_explored = 0;
  double cut_potential = 0.0;

  void Terminal() {
    ++paths_explored;
    if (observer) observer(std::span<const Degree>(alphas));
  }

  void Explore(const Configuration& config) {
    if (config.state == machine.final_state) {
      // Scored at first arrival; the final state absorbs the path.
      if (!found || BetterPath(folds.back(), path, best_degree, best_path)) {
        found = true;
        best_degree = folds.back();
        best_path = path;
      }
      Terminal();
      return;
    }
    if (path.size() == max_steps) {
      cut_potential = std::max(
          cut_potential, BestContinuationFold(machine, config, folds.back()));
      Terminal();
      return;
    }
    bool expanded = false;
    for (const StepEdge& edge : Step(machine, config)) {
      if (edge.degree == Degree::Zero()) continue;
      const Degree folded =
          Tnorm(machine.norm, Degree(folds.back()), edge.degree);
      if (folded == Degree::Zero()) continue;  // can never score positively
      expanded = true;
      alphas.push_back(edge.degree);
      path.push_back(edge.transition);
      folds.push_back(folded.value());
      Explore(edge.successor);
      folds.pop_back();
      path.pop_back();
      alphas.pop_back();
    }
    if (!expanded) Terminal();
  }
};

struct SearchNode {
  Configuration config;
  double degree = 1.0;
  std::vector<Transition> path;
};

// Pops in order of (degree desc, steps asc, path lex asc).
struct NodeAfter {
  bool operator()(const SearchNode& a, const SearchNode& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.path.size() != b.path.size()) return a.path.size() > b.path.size();
    return a.path > b.path;
  }
};

// Record of an already-expanded visit to a configuration. A later node for
// the same configuration is redundant when some earlier visit used no more
// steps (and no worse a prefix, when steps tie): every completion of the
// later node is then matched or beaten, including on the tie-break.
struct VisitEntry {
  double degree;
  std::size_t steps;
  std::vector<Transition> path;
};

bool Dominated(const std::vector<VisitEntry>& entries, const SearchNode& node) {
  for (const VisitEntry& entry : entries) {
    if (entry.degree < node.degree) continue;
    if (entry.steps < node.path.size()) return true;
    if (entry.steps == node.path.size() && !(node.path < entry.path)) {
      return true;
    }
  }
  return false;
}

}  // namespace

AcceptanceResult AcceptDegreeBruteforce(const Machine& machine,
                                        const Word& input,
                                        std::size_t max_steps,
                                        const PathObserver& observer) {
  RequirePositiveBudget(max_steps);
  const Configuration start = InitialConfiguration(machine, input);
  DepthFirstEngine engine(machine, max_steps, observer);
  engine.Explore(start);

  AcceptanceResult result;
  result.paths_explored = engine.paths_explored;
  if (engine.found && engine.best_degree > 0.0) {
    result.degree = Degree(engine.best_degree);
    result.witness = MakeWitness(machine, engine.best_path);
  }
  result.truncated = engine.cut_potential > result.degree.value();
  return result;
}

AcceptanceResult AcceptDegree(const Machine& machine, const Word& input,
                              std::size_t max_steps) {
  RequirePositiveBudget(max_steps);

  std::priority_queue<SearchNode, std::vector<SearchNode>, NodeAfter> frontier;
  frontier.push(SearchNode{InitialConfiguration(machine, input), 1.0, {}});

  std::map<Configuration, std::vector<VisitEntry>> visited;
  AcceptanceResult result;
  double cut_potential = 0.0;

  while (!frontier.empty()) {
    SearchNode node = frontier.top();
    frontier.pop();
    std::vector<VisitEntry>& entries = visited[node.config];
    if (Dominated(entries, node)) continue;
    entries.push_back(VisitEntry{node.degree, node.path.size(), node.path});
    ++result.paths_explored;

    if (node.config.state == machine.final_state) {
      // Degrees only decrease along extensions, so the first accepting
      // node popped realizes the maximum; remaining frontier nodes cannot
      // beat it on degree, length, or lexicographic order.
      result.degree = Degree(node.degree);
      result.witness = MakeWitness(machine, node.path);
      break;
    }
    if (node.path.size() == max_steps) {
      cut_potential = std::max(
          cut_potential, BestContinuationFold(machine, node.config, node.degree));
      continue;
    }
    for (const StepEdge& edge : Step(machine, node.config)) {
      if (edge.degree == Degree::Zero()) continue;
      const Degree folded =
          Tnorm(machine.norm, Degree(node.degree), edge.degree);
      if (folded == Degree::Zero()) continue;
      SearchNode child;
      child.config = edge.successor;
      child.degree = folded.value();
      child.path = node.path;
      child.path.push_back(edge.transition);
      frontier.push(std::move(child));
    }
  }

  result.truncated = cut_potential > result.degree.value();
  return result;
}

std::vector<Word> EnumerateWords(const Machine& machine, std::size_t max_len) {
  const std::vector<std::string> symbols(machine.input_alphabet.begin(),
                                         machine.input_alphabet.end());
  std::vector<Word> words;
  std::vector<Word> current{{}};
  words.push_back({});
  for (std::size_t length = 1; length <= max_len; ++length) {
    if (symbols.empty()) break;
    std::vector<Word> extended;
    for (const Word& word : current) {
      for (const std::string& symbol : symbols) {
        Word longer = word;
        longer.push_back(symbol);
        extended.push_back(std::move(longer));
      }
    }
    words.insert(words.end(), extended.begin(), extended.end());
    current = std::move(extended);
  }
  return words;
}

FuzzySet FuzzyLanguage(const Machine& machine, std::size_t max_len,
                       std::size_t max_steps, Degree cutoff) {
  FuzzySet language;
  for (const Word& word : EnumerateWords(machine, max_len)) {
    const AcceptanceResult result = AcceptDegree(machine, word, max_steps);
    if (result.degree > cutoff) {
      language.Set(FormatWord(machine, word), result.degree);
    }
  }
  return language;
}

}  // namespace fuzzym
