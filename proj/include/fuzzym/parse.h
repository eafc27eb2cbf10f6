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
// Recursive-descent parsers for the machine and P-system description
// language and for fuzzy-set literals.

#ifndef FUZZYM_PARSE_H_
#define FUZZYM_PARSE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "fuzzym/diagnostics.h"
#include "fuzzym/fuzzy_multiset.h"
#include "fuzzym/fuzzy_set.h"
#include "fuzzym/machine.h"
#include "fuzzym/psystem.h"

namespace fuzzym {

// Outcome of a parse. Exactly one of these holds:
//   - Ok(): `value` engaged, no error, no violations;
//   - syntax failure: `error` engaged (the first error, with position);
//   - semantic failure: `value` parsed but `violations` nonempty.
template <typename T>
struct ParseOutcome {
  std::optional<T> value;
  std::optional<ParseError> error;
  std::vector<Violation> violations;

  bool Ok() const { return value.has_value() && !error && violations.empty(); }
};

// Parses a machine description. On Ok() the machine passes
// ValidateMachine; structural problems in well-formed syntax (unknown
// states, a blank inside the input alphabet, conflicting duplicate
// transitions) come back as violations, not parse errors.
ParseOutcome<Machine> ParseFtm(std::string_view text);

// Parses a P-system description. Same contract as ParseFtm; violations
// detected against the source (duplicate membrane ids, `in` targets that
// name no child) carry the spans involved.
ParseOutcome<PSystem> ParseFps(std::string_view text);

// Parses a fuzzy-set literal. Two equivalent notations are accepted:
// pair form `{2@0.3, 6@0.5}` and tuple form `fuzzy set (2,0.3), (6,0.5)`
// with an optional trailing semicolon.
ParseOutcome<FuzzySet> ParseFuzzySetLiteral(std::string_view text);

// Parses a fuzzy-multiset literal `{a:2@0.5, b:3@1}`.
ParseOutcome<FuzzyMultiset> ParseFuzzyMultisetLiteral(std::string_view text);

// "machine" or "psystem", from the first meaningful token of description
// text; empty when neither.
std::string_view DescriptionKeyword(std::string_view text);

// True when `text` lexes as exactly one identifier token (respectively one
// identifier or number token). Serializers use these to guarantee their
// output parses back.
bool LexesAsIdentifier(std::string_view text);
bool LexesAsSymbol(std::string_view text);

}  // namespace fuzzym

#endif  // FUZZYM_PARSE_H_
