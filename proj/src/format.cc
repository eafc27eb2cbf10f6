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

#include "fuzzym/format.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace fuzzym {

std::string FormatDoubleExact(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

std::string FormatSig(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::string(buffer);
}

}  // namespace

std::string FormatDouble12(double value) {
  const std::string at12 = FormatSig(value, 12);
  for (int digits = 1; digits < 12; ++digits) {
    const std::string candidate = FormatSig(value, digits);
    if (FormatSig(std::strtod(candidate.c_str(), nullptr), 12) == at12) {
      return candidate;
    }
  }
  return at12;
}

double RoundTo12(double value) {
  return std::strtod(FormatDouble12(value).c_str(), nullptr);
}

}  // namespace fuzzym
