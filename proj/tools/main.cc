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
// Command-line front end. Exit codes are a stable contract: 0 success,
// 2 input or validation error, 3 I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuzzym/configuration.h"
#include "fuzzym/degree.h"
#include "fuzzym/format.h"
#include "fuzzym/machine.h"
#include "fuzzym/parse.h"
#include "fuzzym/psystem.h"
#include "fuzzym/search.h"
#include "fuzzym/serialize.h"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kIoError = 3;

bool ReadFile(const std::string& path, std::string& out) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return false;
  std::ifstream stream(path, std::ios::binary);
  if (!stream) return false;
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  out = buffer.str();
  return true;
}

// FUZZYM_NORM_OVERRIDE replaces the norm named in the file, so the same
// description can be run under each norm without editing it.
bool ApplyNormOverride(fuzzym::NormKind& norm) {
  const char* value = std::getenv("FUZZYM_NORM_OVERRIDE");
  if (value == nullptr || *value == '\0') return true;
  if (auto kind = fuzzym::NormFromName(value)) {
    norm = *kind;
    return true;
  }
  std::cerr << "FUZZYM_NORM_OVERRIDE must be min, product, or lukasiewicz; "
            << "got '" << value << "'\n";
  return false;
}

template <typename T>
void PrintDiagnostics(const std::string& path,
                      const fuzzym::ParseOutcome<T>& outcome) {
  if (outcome.error) {
    std::cerr << path << ": " << outcome.error->Message() << "\n";
    return;
  }
  for (const fuzzym::Violation& violation : outcome.violations) {
    std::cerr << path << ": " << violation.message;
    if (!violation.spans.empty()) {
      std::cerr << " (";
      for (std::size_t i = 0; i < violation.spans.size(); ++i) {
        if (i > 0) std::cerr << "; ";
        std::cerr << fuzzym::FormatSpan(violation.spans[i]);
      }
      std::cerr << ")";
    }
    std::cerr << "\n";
  }
}

// Parses `path` as a machine description; on any failure prints
// diagnostics and returns the exit code, else fills `machine` and
// returns 0.
int LoadMachine(const std::string& path, fuzzym::Machine& machine) {
  std::string text;
  if (!ReadFile(path, text)) {
    std::cerr << "cannot read file: " << path << "\n";
    return kIoError;
  }
  fuzzym::ParseOutcome<fuzzym::Machine> outcome = fuzzym::ParseFtm(text);
  if (!outcome.Ok()) {
    PrintDiagnostics(path, outcome);
    return kInputError;
  }
  machine = std::move(*outcome.value);
  if (!ApplyNormOverride(machine.norm)) return kInputError;
  return kOk;
}

int LoadSystem(const std::string& path, fuzzym::PSystem& system) {
  std::string text;
  if (!ReadFile(path, text)) {
    std::cerr << "cannot read file: " << path << "\n";
    return kIoError;
  }
  fuzzym::ParseOutcome<fuzzym::PSystem> outcome = fuzzym::ParseFps(text);
  if (!outcome.Ok()) {
    PrintDiagnostics(path, outcome);
    return kInputError;
  }
  system = std::move(*outcome.value);
  if (!ApplyNormOverride(system.norm)) return kInputError;
  return kOk;
}

int CmdValidate(const std::string& path) {
  std::string text;
  if (!ReadFile(path, text)) {
    std::cerr << "cannot read file: " << path << "\n";
    return kIoError;
  }
  std::string_view keyword = fuzzym::DescriptionKeyword(text);
  if (keyword == "machine") {
    fuzzym::ParseOutcome<fuzzym::Machine> outcome = fuzzym::ParseFtm(text);
    if (outcome.Ok()) return kOk;
    PrintDiagnostics(path, outcome);
    return kInputError;
  }
  if (keyword == "psystem") {
    fuzzym::ParseOutcome<fuzzym::PSystem> outcome = fuzzym::ParseFps(text);
    if (outcome.Ok()) return kOk;
    PrintDiagnostics(path, outcome);
    return kInputError;
  }
  std::cerr << path << ": expected a machine or psystem description\n";
  return kInputError;
}

json WitnessJson(const fuzzym::AcceptanceResult& result) {
  if (!result.witness) return nullptr;
  json steps = json::array();
  for (const fuzzym::WitnessStep& step : *result.witness) {
    steps.push_back(json::array(
        {step.transition.from_state, step.transition.read,
         step.transition.to_state, step.transition.write,
         std::string(1, fuzzym::MoveLetter(step.transition.move)),
         fuzzym::RoundTo12(step.degree.value())}));
  }
  return steps;
}

int CmdRun(const std::string& path, const std::string& input,
           std::size_t max_steps, bool json_mode) {
  fuzzym::Machine machine;
  if (int code = LoadMachine(path, machine); code != kOk) return code;
  fuzzym::AcceptanceResult result;
  try {
    fuzzym::Word word = fuzzym::SplitInput(machine, input);
    result = fuzzym::AcceptDegree(machine, word, max_steps);
  } catch (const fuzzym::InputError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  if (json_mode) {
    json record = {
        {"degree", fuzzym::RoundTo12(result.degree.value())},
        {"paths_explored", result.paths_explored},
        {"truncated", result.truncated},
        {"witness", WitnessJson(result)},
    };
    std::cout << record.dump() << "\n";
    return kOk;
  }
  std::cout << "e(w) = " << fuzzym::FormatDouble12(result.degree.value())
            << "\n";
  if (result.witness) {
    if (result.witness->empty()) {
      std::cout << "witness: empty path\n";
    } else {
      std::cout << "witness:\n";
      for (const fuzzym::WitnessStep& step : *result.witness) {
        std::cout << "  " << fuzzym::FormatTransition(step.transition)
                  << " @ " << fuzzym::FormatDouble12(step.degree.value())
                  << "\n";
      }
    }
  }
  std::cout << "paths explored: " << result.paths_explored << "\n";
  if (result.truncated) {
    std::cout << "truncated: step budget reached before the search was "
                 "exhausted\n";
  }
  return kOk;
}

int CmdLanguage(const std::string& path, std::size_t max_len,
                std::size_t max_steps, double cutoff, bool json_mode) {
  fuzzym::Machine machine;
  if (int code = LoadMachine(path, machine); code != kOk) return code;
  if (cutoff < 0.0 || cutoff > 1.0) {
    std::cerr << "cutoff must be in [0,1]\n";
    return kInputError;
  }
  fuzzym::FuzzySet language;
  try {
    language = fuzzym::FuzzyLanguage(machine, max_len, max_steps,
                                     fuzzym::Degree(cutoff));
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  std::vector<std::pair<std::string, double>> entries;
  for (const auto& [word, degree] : language.membership()) {
    entries.emplace_back(word, degree.value());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (json_mode) {
    json listing = json::array();
    for (const auto& [word, degree] : entries) {
      listing.push_back(
          {{"degree", fuzzym::RoundTo12(degree)}, {"word", word}});
    }
    std::cout << json{{"language", listing}}.dump() << "\n";
    return kOk;
  }
  for (const auto& [word, degree] : entries) {
    std::cout << (word.empty() ? "ε" : word) << " "
              << fuzzym::FormatDouble12(degree) << "\n";
  }
  return kOk;
}

int CmdPsystem(const std::string& path, std::uint64_t max_ticks,
               bool json_mode) {
  fuzzym::PSystem system;
  if (int code = LoadSystem(path, system); code != kOk) return code;
  fuzzym::RunResult result;
  try {
    result = fuzzym::Run(system, max_ticks);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  if (json_mode) {
    json output = json::object();
    for (const auto& [symbol, entry] : result.output_contents.entries()) {
      output[symbol] = {{"degree", fuzzym::RoundTo12(entry.grade.value())},
                        {"multiplicity", entry.multiplicity}};
    }
    json record = {
        {"halted", result.halted},
        {"output", output},
        {"result", fuzzym::RoundTo12(result.result)},
        {"ticks", result.ticks_used},
    };
    std::cout << record.dump() << "\n";
    return kOk;
  }
  std::cout << "result = " << fuzzym::FormatDouble12(result.result) << "\n";
  std::cout << "halted = " << (result.halted ? "true" : "false") << "\n";
  std::cout << "ticks = " << result.ticks_used << "\n";
  std::cout << "output = " << fuzzym::FormatFuzzyMultiset(result.output_contents)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation workbench for fuzzy models of computation"};
  app.require_subcommand(1);

  std::string path;
  std::string input;
  std::size_t max_steps = 1000;
  std::size_t max_len = 0;
  std::uint64_t max_ticks = 1000;
  double cutoff = 0.0;
  bool json_mode = false;

  CLI::App* validate =
      app.add_subcommand("validate", "Parse and validate a description file");
  validate->add_option("file", path, "description file")->required();

  CLI::App* run =
      app.add_subcommand("run", "Compute the acceptance degree of an input");
  run->add_option("file", path, "machine description file")->required();
  run->add_option("--input", input, "input string")->required();
  run->add_option("--max-steps", max_steps, "computation step budget");
  run->add_flag("--json", json_mode, "machine-readable output");

  CLI::App* language = app.add_subcommand(
      "language", "List accepted words with their degrees");
  language->add_option("file", path, "machine description file")->required();
  language->add_option("--max-len", max_len, "maximum word length")
      ->required();
  language->add_option("--max-steps", max_steps, "computation step budget");
  language->add_option("--cutoff", cutoff,
                       "list only words with degree strictly above this");
  language->add_flag("--json", json_mode, "machine-readable output");

  CLI::App* psystem =
      app.add_subcommand("psystem", "Run a P-system to halting or a budget");
  psystem->add_option("file", path, "system description file")->required();
  psystem->add_option("--max-ticks", max_ticks, "tick budget");
  psystem->add_flag("--json", json_mode, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (validate->parsed()) return CmdValidate(path);
  if (run->parsed()) return CmdRun(path, input, max_steps, json_mode);
  if (language->parsed()) {
    return CmdLanguage(path, max_len, max_steps, cutoff, json_mode);
  }
  if (psystem->parsed()) return CmdPsystem(path, max_ticks, json_mode);
  return kInputError;
}
