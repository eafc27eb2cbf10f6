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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fuzzym/degree.h"

namespace fuzzym {
namespace {

constexpr double kTol = 1e-12;

std::vector<double> GridValues() {
  std::vector<double> values;
  for (int i = 0; i <= 10; ++i) values.push_back(i / 10.0);
  return values;
}

TEST_CASE("degree construction enforces the unit interval") {
  CHECK(Degree(0.0).value() == 0.0);
  CHECK(Degree(1.0).value() == 1.0);
  CHECK(Degree(0.25).value() == 0.25);
  CHECK(Degree::Zero().value() == 0.0);
  CHECK(Degree::One().value() == 1.0);
  CHECK(Degree().value() == 0.0);
  CHECK_THROWS_AS(Degree(-0.001), std::out_of_range);
  CHECK_THROWS_AS(Degree(1.001), std::out_of_range);
  CHECK_THROWS_AS(Degree(std::nan("")), std::out_of_range);
}

TEST_CASE("norm names round-trip") {
  for (NormKind kind : kAllNormKinds) {
    CHECK(NormFromName(NormName(kind)) == kind);
  }
  CHECK(NormFromName("min") == NormKind::kMinimum);
  CHECK(NormFromName("product") == NormKind::kProduct);
  CHECK(NormFromName("lukasiewicz") == NormKind::kLukasiewicz);
  CHECK_FALSE(NormFromName("max").has_value());
  CHECK_FALSE(NormFromName("").has_value());
}

TEST_CASE("t-norm fixed points") {
  for (NormKind kind : kAllNormKinds) {
    CHECK(Tnorm(kind, Degree(0.7), Degree::One()).value() == 0.7);
  }
  CHECK(Tnorm(NormKind::kMinimum, Degree(0.3), Degree(0.8)).value() == 0.3);
  const double lukasiewicz =
      Tnorm(NormKind::kLukasiewicz, Degree(0.7), Degree(0.6)).value();
  CHECK(std::fabs(lukasiewicz - std::max(0.0, 0.7 + 0.6 - 1.0)) <= kTol);
  CHECK(std::fabs(lukasiewicz - 0.3) <= kTol);
}

TEST_CASE("t-conorm fixed points") {
  for (NormKind kind : kAllNormKinds) {
    CHECK(Tconorm(kind, Degree(0.4), Degree::Zero()).value() == 0.4);
  }
  CHECK(Tconorm(NormKind::kMinimum, Degree(0.3), Degree(0.8)).value() == 0.8);
  const double lukasiewicz =
      Tconorm(NormKind::kLukasiewicz, Degree(0.7), Degree(0.6)).value();
  CHECK(std::fabs(lukasiewicz - std::min(1.0, 0.7 + 0.6)) <= kTol);
  CHECK(lukasiewicz == 1.0);
}

void CheckAxioms(NormKind kind, double a, double b, double c) {
  const Degree da(a);
  const Degree db(b);
  const Degree dc(c);

  // Boundary pair for the norm and its dual.
  CHECK(std::fabs(Tnorm(kind, da, Degree::One()).value() - a) <= kTol);
  CHECK(std::fabs(Tnorm(kind, da, Degree::Zero()).value()) <= kTol);
  CHECK(std::fabs(Tconorm(kind, da, Degree::Zero()).value() - a) <= kTol);
  CHECK(std::fabs(Tconorm(kind, da, Degree::One()).value() - 1.0) <= kTol);

  // Commutativity.
  CHECK(Tnorm(kind, da, db) == Tnorm(kind, db, da));
  CHECK(Tconorm(kind, da, db) == Tconorm(kind, db, da));

  // Associativity.
  CHECK(std::fabs(Tnorm(kind, Tnorm(kind, da, db), dc).value() -
                  Tnorm(kind, da, Tnorm(kind, db, dc)).value()) <= kTol);
  CHECK(std::fabs(Tconorm(kind, Tconorm(kind, da, db), dc).value() -
                  Tconorm(kind, da, Tconorm(kind, db, dc)).value()) <= kTol);

  // Monotonicity in the first argument (a <= b by construction).
  if (a <= b) {
    CHECK(Tnorm(kind, da, dc).value() <= Tnorm(kind, db, dc).value() + kTol);
    CHECK(Tconorm(kind, da, dc).value() <=
          Tconorm(kind, db, dc).value() + kTol);
  }

  // Bounds implied by boundary + monotonicity.
  CHECK(Tnorm(kind, da, db).value() <= std::min(a, b) + kTol);
  CHECK(Tconorm(kind, da, db).value() >= std::max(a, b) - kTol);

  // De Morgan duality through the 1-x complement.
  CHECK(std::fabs((1.0 - Tnorm(kind, da, db).value()) -
                  Tconorm(kind, Degree(1.0 - a), Degree(1.0 - b)).value()) <=
        kTol);
}

TEST_CASE("norm axioms hold on the grid and random triples") {
  const std::vector<double> grid = GridValues();
  for (NormKind kind : kAllNormKinds) {
    for (double a : grid) {
      for (double b : grid) {
        for (double c : grid) {
          CheckAxioms(kind, a, b, c);
        }
      }
    }
  }
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double a = uniform(rng);
    double b = uniform(rng);
    const double c = uniform(rng);
    if (a > b) std::swap(a, b);
    for (NormKind kind : kAllNormKinds) {
      CheckAxioms(kind, a, b, c);
    }
  }
}

TEST_CASE("results stay inside the unit interval") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Degree a(uniform(rng));
    const Degree b(uniform(rng));
    for (NormKind kind : kAllNormKinds) {
      const double norm = Tnorm(kind, a, b).value();
      const double conorm = Tconorm(kind, a, b).value();
      CHECK(norm >= 0.0);
      CHECK(norm <= 1.0);
      CHECK(conorm >= 0.0);
      CHECK(conorm <= 1.0);
    }
  }
}

TEST_CASE("triangular approximate equality") {
  CHECK(ApproxEqual(10.0, 10.0, 0.5).value() == 1.0);
  CHECK(ApproxEqual(10.0, 12.0, 1.0).value() == 0.0);
  CHECK(ApproxEqual(10.0, 10.5, 1.0).value() == 0.5);
  CHECK(ApproxEqual(10.5, 10.0, 1.0).value() == 0.5);  // symmetric
  CHECK(ApproxEqual(3.0, 2.9, 10.0).value() ==
        ApproxEqual(2.9, 3.0, 10.0).value());
  CHECK_THROWS_AS(ApproxEqual(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ApproxEqual(1.0, 1.0, -2.0), std::invalid_argument);
}

}  // namespace
}  // namespace fuzzym
