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
// Source positions and the diagnostic records shared by the parser and the
// structural validators.

#ifndef FUZZYM_DIAGNOSTICS_H_
#define FUZZYM_DIAGNOSTICS_H_

#include <string>
#include <vector>

namespace fuzzym {

// 1-based position of a lexeme in description text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

std::string FormatSpan(const SourceSpan& span);

// First lexical or syntactic failure of a parse.
struct ParseError {
  SourceSpan span;
  std::string expected;
  std::string found;

  // "line L, col C: expected X, found Y"
  std::string Message() const;
};

// One broken structural invariant. Violations produced while parsing carry
// the spans involved; programmatically built objects yield span-free
// violations whose message names the offending piece.
struct Violation {
  std::string message;
  std::vector<SourceSpan> spans;
};

}  // namespace fuzzym

#endif  // FUZZYM_DIAGNOSTICS_H_
