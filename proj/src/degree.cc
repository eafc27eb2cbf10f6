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

#include "fuzzym/degree.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fuzzym {

Degree::Degree(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::out_of_range("degree must be in [0,1], got " +
                            std::to_string(value));
  }
}

std::string_view NormName(NormKind kind) {
  switch (kind) {
    case NormKind::kMinimum:
      return "min";
    case NormKind::kProduct:
      return "product";
    case NormKind::kLukasiewicz:
      return "lukasiewicz";
  }
  return "min";
}

std::optional<NormKind> NormFromName(std::string_view name) {
  for (NormKind kind : kAllNormKinds) {
    if (name == NormName(kind)) return kind;
  }
  return std::nullopt;
}

Degree Tnorm(NormKind kind, Degree a, Degree b) {
  const double x = a.value();
  const double y = b.value();
  switch (kind) {
    case NormKind::kMinimum:
      return Degree(std::min(x, y));
    case NormKind::kProduct:
      return Degree(x * y);
    case NormKind::kLukasiewicz:
      return Degree(std::max(0.0, x + y - 1.0));
  }
  return Degree();
}

Degree Tconorm(NormKind kind, Degree a, Degree b) {
  const double x = a.value();
  const double y = b.value();
  switch (kind) {
    case NormKind::kMinimum:
      return Degree(std::max(x, y));
    case NormKind::kProduct:
      // The sum form can overshoot 1 by one ulp for inputs near the
      // boundary, so cap it.
      return Degree(std::min(1.0, x + y - x * y));
    case NormKind::kLukasiewicz:
      return Degree(std::min(1.0, x + y));
  }
  return Degree();
}

Degree ApproxEqual(double x, double y, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("approx_equal requires delta > 0");
  }
  return Degree(std::max(0.0, 1.0 - std::abs(x - y) / delta));
}

}  // namespace fuzzym
