// Copyright 2026 The qsd authors
//
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

#include <cmath>

#include "doctest.h"
#include "qsd/bounds.hpp"
#include "qsd/compare.hpp"
#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "reference.hpp"
#include "test_support.hpp"

using namespace qsd;
using test::near;

namespace {
constexpr double kEig = 1e-7;  // eigensolver-backed values
}

TEST_CASE("diagonal triple: all seven bounds and detail fields") {
  const BoundReport r = all_bounds(ref::case1());
  CHECK(near(r.value(BoundId::l0), 0.0, kEig));
  CHECK(near(r.value(BoundId::l1), 0.0, kEig));
  CHECK(near(r.value(BoundId::l2), 5.0 / 36, kEig));
  CHECK(near(r.value(BoundId::l3), 1.0 / 24, kEig));
  CHECK(near(r.value(BoundId::l4), 7.0 / 36, kEig));
  CHECK(near(r.value(BoundId::l5), (13.0 - std::sqrt(61.0)) / 36, kEig));
  CHECK(near(r.value(BoundId::l6), 1.0 - std::pow(10.0 / 13, 0.25), kEig));
  CHECK(!r.helstrom.has_value());
  CHECK(r.effective_dim == 4);
  CHECK(r.l0_top_prior_mass == doctest::Approx(1.0));

  REQUIRE(r.l4_per_k.size() == 3);
  CHECK(near(r.l4_per_k[0], 29.0 / 36, kEig));
  CHECK(near(r.l4_per_k[1], 29.0 / 36, kEig));
  CHECK(near(r.l4_per_k[2], 30.0 / 36, kEig));
  CHECK(r.l4_min_index == 0);  // smallest index among the tied minima

  CHECK(rank_bounds(r).formatted == "L4 > L5 > L2 > L6 > L3 > L0 = L1");
}

TEST_CASE("qubit triple: bounds collapse pairwise") {
  const BoundReport r = all_bounds(ref::case2());
  const double l45 = (2.0 - std::sqrt(2.0)) / 3;
  CHECK(near(r.value(BoundId::l0), 1.0 / 3, kEig));
  CHECK(near(r.value(BoundId::l1), 1.0 / 3, kEig));
  CHECK(near(r.value(BoundId::l2), (2.0 - std::sqrt(2.0)) / 6, kEig));
  CHECK(near(r.value(BoundId::l3), 1.0 / 9, kEig));
  CHECK(near(r.value(BoundId::l4), l45, kEig));
  // the quadratic-mean bound coincides with the pivot bound on this triple
  CHECK(near(r.value(BoundId::l5), l45, kEig));
  CHECK(near(r.value(BoundId::l6),
             1.0 - std::pow((5.0 + 2.0 * std::sqrt(2.0)) / 12, 0.25), kEig));
  CHECK(r.effective_dim == 2);
  CHECK(r.l4_min_index == 1);
  CHECK(rank_bounds(r).formatted == "L0 = L1 > L4 = L5 > L3 > L6 > L2");
}

TEST_CASE("half-overlap triple golden values") {
  const BoundReport r = all_bounds(ref::case3());
  CHECK(near(r.value(BoundId::l0), 0.0, kEig));
  CHECK(near(r.value(BoundId::l1), 1.0 / 3, kEig));
  CHECK(near(r.value(BoundId::l2), 0.25, kEig));
  CHECK(near(r.value(BoundId::l3), 1.0 / 12, kEig));
  CHECK(near(r.value(BoundId::l4), 1.0 / 3, kEig));
  CHECK(near(r.value(BoundId::l5), (3.0 - std::sqrt(3.0)) / 6, kEig));
  CHECK(near(r.value(BoundId::l6), 1.0 - std::pow(2.0 / 3, 0.25), kEig));
  CHECK(rank_bounds(r).formatted == "L1 = L4 > L2 > L5 > L6 > L3 > L0");
}

TEST_CASE("skewed-prior triple: L1 goes negative, clamp reports zero") {
  const BoundReport r = all_bounds(ref::case4());
  CHECK(near(r.value(BoundId::l1), -47.0 / 25, kEig));
  CHECK(near(r.value(BoundId::l2), 0.135, kEig));
  CHECK(near(r.value(BoundId::l3), 0.1377, kEig));
  CHECK(near(r.value(BoundId::l4), 0.18, kEig));
  CHECK(near(r.value(BoundId::l5), (90.0 - 9.0 * std::sqrt(66.0)) / 100,
             kEig));
  CHECK(near(r.value(BoundId::l6), 1.0 - std::pow(0.694, 0.25), kEig));
  CHECK(r.clamped[1] == 0.0);
  CHECK(r.clamped[4] == r.values[4]);
  // every k attains the same column sum on this triple
  CHECK(near(r.l4_per_k[0], 0.82, kEig));
  CHECK(near(r.l4_per_k[1], 0.82, kEig));
  CHECK(near(r.l4_per_k[2], 0.82, kEig));
  CHECK(r.l4_min_index == 0);
  CHECK(rank_bounds(r).formatted == "L4 > L5 > L3 > L2 > L6 > L0 > L1");
}

TEST_CASE("two-state reports collapse onto the closed form") {
  const Ensemble e = validate_ensemble(
      {0.5, 0.5},
      {test::basis_projector(2, 0),
       test::pure_state({Complex(1.0), Complex(1.0)})});
  const double h = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
  const BoundReport r = all_bounds(e);
  REQUIRE(r.helstrom.has_value());
  CHECK(near(*r.helstrom, h, 1e-9));
  CHECK(near(r.value(BoundId::l4), h, 1e-9));
  CHECK(near(r.value(BoundId::l2), h, 1e-9));
  CHECK(r.value(BoundId::l3) <= h + 1e-9);

  CHECK(near(helstrom_bound(e), h, 1e-9));
}

TEST_CASE("helstrom demands exactly two states") {
  CHECK_THROWS_AS(helstrom_bound(ref::case1()), WrongArity);
}

TEST_CASE("individual bound functions agree with the report") {
  const Ensemble e = ref::case4();
  const BoundReport r = all_bounds(e);
  CHECK(bound_l0(e) == r.values[0]);
  CHECK(bound_l1(e) == r.values[1]);
  CHECK(bound_l2(e) == r.values[2]);
  CHECK(bound_l3(e) == r.values[3]);
  CHECK(bound_l4(e).value == r.values[4]);
  CHECK(bound_l5(e) == r.values[5]);
  CHECK(bound_l6(e) == r.values[6]);
}

TEST_CASE("effective dimension feeds L0 and L1") {
  // two orthogonal pure states inside a dim-4 ambient space: d = 2, and the
  // top-2 prior mass is 1, so L0 = 0 even though dim > m
  const Ensemble e = validate_ensemble(
      {0.5, 0.5},
      {test::basis_projector(4, 0), test::basis_projector(4, 1)});
  const BoundReport r = all_bounds(e);
  CHECK(r.effective_dim == 2);
  CHECK(near(r.value(BoundId::l0), 0.0, 1e-12));
  // L1 = 1 - d max_i ||p_i rho_i|| = 1 - 2 * 0.5 = 0
  CHECK(near(r.value(BoundId::l1), 0.0, 1e-12));
}
