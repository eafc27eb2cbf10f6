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
// Canonical serializers. Parsing the output reproduces a structurally
// equal value; serializing twice is byte-identical.

#ifndef FUZZYM_SERIALIZE_H_
#define FUZZYM_SERIALIZE_H_

#include <string>

#include "fuzzym/fuzzy_multiset.h"
#include "fuzzym/fuzzy_set.h"
#include "fuzzym/machine.h"
#include "fuzzym/psystem.h"

namespace fuzzym {

// Canonical machine text: sorted symbol lists, sorted transitions, every
// degree explicit. Throws std::invalid_argument when the machine fails
// validation, has an empty state list or alphabet, or carries a name or
// symbol the description language cannot lex.
std::string SerializeFtm(const Machine& machine);

// Canonical P-system text; nesting mirrors the compartment tree and every
// target, grade, and rule degree is explicit. Throws std::invalid_argument
// under the same conditions as SerializeFtm, or when a rule has no
// productions.
std::string SerializeFps(const PSystem& system);

// `{a@0.3, b@1}` over the support (degree-0 universe elements are not
// listed); `{}` when empty.
std::string FormatFuzzySet(const FuzzySet& set);

// `{a:2@0.5, b:3@1}`; `{}` when empty.
std::string FormatFuzzyMultiset(const FuzzyMultiset& multiset);

}  // namespace fuzzym

#endif  // FUZZYM_SERIALIZE_H_
