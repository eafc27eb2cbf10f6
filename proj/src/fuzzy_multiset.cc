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

#include "fuzzym/fuzzy_multiset.h"

namespace fuzzym {

void FuzzyMultiset::Set(const std::string& symbol, std::size_t multiplicity,
                        Degree grade) {
  if (multiplicity == 0 || grade == Degree::Zero()) {
    entries_.erase(symbol);
  } else {
    entries_[symbol] = MultisetEntry{multiplicity, grade};
  }
}

std::size_t FuzzyMultiset::MultiplicityOf(const std::string& symbol) const {
  auto it = entries_.find(symbol);
  return it == entries_.end() ? 0 : it->second.multiplicity;
}

Degree FuzzyMultiset::GradeOf(const std::string& symbol) const {
  auto it = entries_.find(symbol);
  return it == entries_.end() ? Degree::Zero() : it->second.grade;
}

double Cardinality(const FuzzyMultiset& a) {
  double total = 0.0;
  for (const auto& [symbol, entry] : a.entries()) {
    total += static_cast<double>(entry.multiplicity) * entry.grade.value();
  }
  return total;
}

FuzzyMultiset Merge(const FuzzyMultiset& a, const FuzzyMultiset& b,
                    NormKind kind) {
  FuzzyMultiset result = a;
  for (const auto& [symbol, entry] : b.entries()) {
    const std::size_t existing = result.MultiplicityOf(symbol);
    const Degree grade =
        existing == 0 ? entry.grade
                      : Tconorm(kind, result.GradeOf(symbol), entry.grade);
    result.Set(symbol, existing + entry.multiplicity, grade);
  }
  return result;
}

}  // namespace fuzzym
