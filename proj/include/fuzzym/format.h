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
// Decimal rendering of degrees and cardinalities.

#ifndef FUZZYM_FORMAT_H_
#define FUZZYM_FORMAT_H_

#include <string>

namespace fuzzym {

// Shortest decimal string that parses back to exactly this double. Used
// by the canonical serializers, where round-trips must be lossless.
std::string FormatDoubleExact(double value);

// Shortest decimal that round-trips at 12 significant digits: the fewest
// digits whose value agrees with `value` to 12 significant digits. Used
// for human-readable and JSON output.
std::string FormatDouble12(double value);

// The double the 12-significant-digit rendering denotes; what JSON
// records carry.
double RoundTo12(double value);

}  // namespace fuzzym

#endif  // FUZZYM_FORMAT_H_
