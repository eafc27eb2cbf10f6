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
// Membership grades in [0,1] and the t-norm / t-conorm pairs that combine
// them.

#ifndef FUZZYM_DEGREE_H_
#define FUZZYM_DEGREE_H_

#include <array>
#include <compare>
#include <optional>
#include <string_view>

namespace fuzzym {

// A membership or plausibility grade. Construction outside [0,1] throws
// std::out_of_range; a default-constructed Degree is 0.
class Degree {
 public:
  constexpr Degree() = default;
  explicit Degree(double value);

  double value() const { return value_; }

  static constexpr Degree Zero() { return Degree(); }
  static constexpr Degree One() {
    Degree d;
    d.value_ = 1.0;
    return d;
  }

  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  double value_ = 0.0;
};

// Each kind names a (t-norm, dual t-conorm) pair:
//   Minimum      min(a,b)          / max(a,b)
//   Product      a*b               / a+b-ab
//   Lukasiewicz  max(0, a+b-1)     / min(1, a+b)
enum class NormKind { kMinimum, kProduct, kLukasiewicz };

inline constexpr std::array<NormKind, 3> kAllNormKinds = {
    NormKind::kMinimum, NormKind::kProduct, NormKind::kLukasiewicz};

// Textual names used by the description language: "min", "product",
// "lukasiewicz".
std::string_view NormName(NormKind kind);
std::optional<NormKind> NormFromName(std::string_view name);

Degree Tnorm(NormKind kind, Degree a, Degree b);
Degree Tconorm(NormKind kind, Degree a, Degree b);

// Triangular membership grade of "x approximately equal to y":
// max(0, 1 - |x-y|/delta). Requires delta > 0.
Degree ApproxEqual(double x, double y, double delta);

}  // namespace fuzzym

#endif  // FUZZYM_DEGREE_H_
