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
// Fuzzy multisets: each symbol carries a copy count and one shared grade.

#ifndef FUZZYM_FUZZY_MULTISET_H_
#define FUZZYM_FUZZY_MULTISET_H_

#include <cstddef>
#include <map>
#include <string>

#include "fuzzym/degree.h"

namespace fuzzym {

struct MultisetEntry {
  std::size_t multiplicity = 0;
  Degree grade;

  friend auto operator<=>(const MultisetEntry&, const MultisetEntry&) = default;
};

// Finite-support mapping symbol -> (multiplicity, grade). All copies of a
// symbol share its grade; symbols with multiplicity 0 or grade 0 are
// absent, so equality is extensional and cardinality is 0 iff empty.
class FuzzyMultiset {
 public:
  FuzzyMultiset() = default;

  // Replaces the entry for a symbol. Multiplicity 0 or grade 0 erases it.
  void Set(const std::string& symbol, std::size_t multiplicity, Degree grade);

  std::size_t MultiplicityOf(const std::string& symbol) const;
  Degree GradeOf(const std::string& symbol) const;

  const std::map<std::string, MultisetEntry>& entries() const {
    return entries_;
  }

  bool empty() const { return entries_.empty(); }

  friend bool operator==(const FuzzyMultiset&, const FuzzyMultiset&) = default;

 private:
  std::map<std::string, MultisetEntry> entries_;
};

// Sum over the support of multiplicity x grade; 0 exactly when empty.
double Cardinality(const FuzzyMultiset& a);

// Per symbol, multiplicities add and grades combine by the t-conorm of
// `kind`, keeping the one-grade-per-symbol shape.
FuzzyMultiset Merge(const FuzzyMultiset& a, const FuzzyMultiset& b,
                    NormKind kind);

}  // namespace fuzzym

#endif  // FUZZYM_FUZZY_MULTISET_H_
