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

#include "fuzzym/fuzzy_set.h"

#include <algorithm>

namespace fuzzym {

void FuzzySet::Set(const std::string& element, Degree grade) {
  universe_.insert(element);
  if (grade == Degree::Zero()) {
    membership_.erase(element);
  } else {
    membership_[element] = grade;
  }
}

Degree FuzzySet::At(const std::string& element) const {
  auto it = membership_.find(element);
  return it == membership_.end() ? Degree::Zero() : it->second;
}

namespace {

template <typename Combine>
FuzzySet Pointwise(const FuzzySet& a, const FuzzySet& b, Combine combine) {
  std::set<std::string> universe = a.universe();
  universe.insert(b.universe().begin(), b.universe().end());
  FuzzySet result(std::move(universe));
  std::set<std::string> support;
  for (const auto& [element, grade] : a.membership()) support.insert(element);
  for (const auto& [element, grade] : b.membership()) support.insert(element);
  for (const std::string& element : support) {
    result.Set(element, combine(a.At(element), b.At(element)));
  }
  return result;
}

}  // namespace

FuzzySet Union(const FuzzySet& a, const FuzzySet& b, NormKind kind) {
  return Pointwise(a, b, [kind](Degree x, Degree y) {
    return Tconorm(kind, x, y);
  });
}

FuzzySet Intersection(const FuzzySet& a, const FuzzySet& b, NormKind kind) {
  return Pointwise(a, b, [kind](Degree x, Degree y) {
    return Tnorm(kind, x, y);
  });
}

FuzzySet Complement(const FuzzySet& a) {
  FuzzySet result(a.universe());
  for (const std::string& element : a.universe()) {
    result.Set(element, Degree(1.0 - a.At(element).value()));
  }
  return result;
}

}  // namespace fuzzym
