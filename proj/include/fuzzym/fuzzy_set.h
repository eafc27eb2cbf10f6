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
// Finite-support fuzzy sets over symbol universes.

#ifndef FUZZYM_FUZZY_SET_H_
#define FUZZYM_FUZZY_SET_H_

#include <map>
#include <set>
#include <string>

#include "fuzzym/degree.h"

namespace fuzzym {

// A fuzzy subset of a finite symbol universe. Entries at grade 0 are not
// stored, so structural equality coincides with extensional equality; the
// universe itself may hold symbols whose grade is 0.
class FuzzySet {
 public:
  FuzzySet() = default;
  explicit FuzzySet(std::set<std::string> universe)
      : universe_(std::move(universe)) {}

  // Sets one membership grade. The element joins the universe; a grade of
  // exactly 0 erases any stored entry.
  void Set(const std::string& element, Degree grade);

  // Grade of an element; 0 when absent.
  Degree At(const std::string& element) const;

  void AddToUniverse(const std::string& element) { universe_.insert(element); }

  const std::set<std::string>& universe() const { return universe_; }
  const std::map<std::string, Degree>& membership() const {
    return membership_;
  }

  bool empty() const { return membership_.empty(); }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::set<std::string> universe_;
  std::map<std::string, Degree> membership_;
};

// Pointwise t-conorm / t-norm of grades. The result universe is the union
// of the operand universes; symbols absent from one operand read as 0.
FuzzySet Union(const FuzzySet& a, const FuzzySet& b, NormKind kind);
FuzzySet Intersection(const FuzzySet& a, const FuzzySet& b, NormKind kind);

// Complement relative to the declared universe: every universe symbol x
// gets grade 1 - A(x).
FuzzySet Complement(const FuzzySet& a);

}  // namespace fuzzym

#endif  // FUZZYM_FUZZY_SET_H_
