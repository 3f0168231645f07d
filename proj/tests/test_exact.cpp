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
#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "qsd/exact.hpp"
#include "qsd/random.hpp"
#include "reference.hpp"
#include "test_support.hpp"

using namespace qsd;
using test::basis_projector;
using test::diag;
using test::near;

TEST_CASE("two-state solver reproduces the closed form") {
  const Ensemble e = validate_ensemble(
      {0.5, 0.5},
      {basis_projector(2, 0), test::pure_state({Complex(1.0), Complex(1.0)})});
  const ExactResult r = solve_two_state(e);
  CHECK(r.method == ExactMethod::two_state_helstrom);
  CHECK(near(r.qe, 0.5 * (1.0 - 1.0 / std::sqrt(2.0)), 1e-9));
  CHECK(near(r.qe + r.success, 1.0, 1e-12));
  CHECK(r.certificate.pass);
  CHECK(near(r.qe, helstrom_bound(e), 1e-9));

  // POVM resolves the identity
  const ComplexMatrix sum = r.optimal_povm.elements[0] +
                            r.optimal_povm.elements[1];
  CHECK(test::max_abs_diff(sum, ComplexMatrix::identity(2)) <= 1e-10);
}

TEST_CASE("identical states cannot be told apart") {
  Rng rng(51);
  const ComplexMatrix rho = random_density(rng, 3);
  const Ensemble e = validate_ensemble({0.7, 0.3}, {rho, rho});
  const ExactResult r = solve_two_state(e);
  CHECK(near(r.qe, 0.3, 1e-9));  // guess the likelier hypothesis
  CHECK(r.certificate.pass);
}

TEST_CASE("orthogonal pure states separate perfectly") {
  const Ensemble e = validate_ensemble(
      {0.4, 0.6}, {basis_projector(2, 0), basis_projector(2, 1)});
  const ExactResult r = solve_two_state(e);
  CHECK(near(r.qe, 0.0, 1e-12));
  CHECK(r.certificate.pass);
}

TEST_CASE("two-state solver rejects other arities") {
  CHECK_THROWS_AS(solve_two_state(ref::case1()), WrongArity);
}

TEST_CASE("commuting solver on the diagonal triple") {
  const ExactResult r = solve_commuting(ref::case1());
  CHECK(r.method == ExactMethod::commuting_classical);
  CHECK(near(r.qe, 7.0 / 36, 1e-9));
  CHECK(r.certificate.pass);

  // the weighted average R = sum_i p_i rho_i E_i lands on a known diagonal
  const ComplexMatrix expect =
      diag({1.0 / 6, 1.0 / 6, 2.0 / 9, 1.0 / 4});
  CHECK(test::max_abs_diff(r.certificate.r_matrix, expect) <= 1e-7);
}

TEST_CASE("commuting solver rejects non-commuting inputs") {
  CHECK_THROWS_AS(solve_commuting(ref::case2()), NotCommuting);
}

TEST_CASE("commuting solver matches the two-state closed form") {
  for (std::uint64_t seed = 60; seed < 70; ++seed) {
    const Ensemble e = random_commuting_ensemble(seed, 2, 3);
    const ExactResult a = solve_commuting(e);
    const ExactResult b = solve_two_state(e);
    CHECK(near(a.qe, b.qe, 1e-9));
  }
}

TEST_CASE("certificate passes on an optimal measurement") {
  const Certificate cert =
      certify_optimal(ref::case1(), ref::case5_optimal_povm());
  CHECK(cert.pass);
  CHECK(cert.hermiticity_defect <= 1e-9);
  CHECK(cert.min_margin >= -1e-10);
}

TEST_CASE("certificate fails on the uniform measurement with known margins") {
  Povm uniform;
  uniform.kind = Povm::Kind::ambiguous;
  for (int i = 0; i < 3; ++i) {
    uniform.elements.push_back(ComplexMatrix::identity(4) *
                               Complex(1.0 / 3));
  }
  const Certificate cert = certify_optimal(ref::case1(), uniform);
  CHECK(!cert.pass);
  REQUIRE(cert.margins.size() == 3);
  CHECK(near(cert.margins[0], -1.0 / 9, 1e-9));
  CHECK(near(cert.margins[1], -4.0 / 27, 1e-9));
  CHECK(near(cert.margins[2], -1.0 / 6, 1e-9));
  CHECK(near(cert.min_margin, -1.0 / 6, 1e-9));
}

TEST_CASE("certificate rejects mismatched shapes") {
  // element count is checked before dimension
  Povm wrong;
  wrong.kind = Povm::Kind::ambiguous;
  wrong.elements = {basis_projector(2, 0), basis_projector(2, 1),
                    ComplexMatrix(2)};
  CHECK_THROWS_AS(certify_optimal(ref::case1(), wrong), DimMismatch);

  Povm two = ref::case5_optimal_povm();
  two.elements.pop_back();
  CHECK_THROWS_AS(certify_optimal(ref::case1(), two), WrongArity);
}

TEST_CASE("pivot-bound attainability on the diagonal triple") {
  const AttainabilityReport r = check_l4_attainability(ref::case1());
  CHECK(near(r.l4, 7.0 / 36, 1e-9));
  CHECK(r.l4_min_index == 0);
  REQUIRE(r.per_k.size() == 3);
  CHECK(r.per_k[0].attains_min);
  CHECK(r.per_k[0].orthogonal);
  CHECK(r.per_k[1].attains_min);
  CHECK(r.per_k[1].orthogonal);
  CHECK(!r.per_k[2].attains_min);
  CHECK(near(r.per_k[2].max_overlap, 1.0, 1e-7));
  CHECK(r.attained);
  REQUIRE(r.attained_k.has_value());
  CHECK(*r.attained_k == 0);
  REQUIRE(r.qe.has_value());
  CHECK(near(*r.qe, r.l4, 1e-9));  // the bound is met with equality
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->pass);
  REQUIRE(r.povm.has_value());
  ComplexMatrix sum(4);
  for (const ComplexMatrix& el : r.povm->elements) sum += el;
  CHECK(test::max_abs_diff(sum, ComplexMatrix::identity(4)) <= 1e-10);
}

TEST_CASE("attainability denied when supports overlap") {
  const AttainabilityReport r = check_l4_attainability(ref::case2());
  CHECK(!r.attained);
  CHECK(!r.attained_k.has_value());
  CHECK(!r.povm.has_value());
  CHECK(!r.qe.has_value());
  // overlaps are cos(pi/8) for the outer pivots and 1/sqrt 2 for the middle
  CHECK(near(r.per_k[0].max_overlap, std::cos(3.14159265358979323846 / 8),
             1e-7));
  CHECK(near(r.per_k[1].max_overlap, 1.0 / std::sqrt(2.0), 1e-7));
  CHECK(near(r.per_k[2].max_overlap, std::cos(3.14159265358979323846 / 8),
             1e-7));
}

TEST_CASE("attainability with every pivot tied and orthogonal") {
  const AttainabilityReport r = check_l4_attainability(ref::case4());
  CHECK(r.attained);
  for (const AttainabilityPerK& pk : r.per_k) {
    CHECK(pk.attains_min);
    CHECK(pk.orthogonal);
    CHECK(pk.max_overlap <= 1e-8);
  }
  CHECK(*r.attained_k == 0);
  CHECK(near(*r.qe, 0.18, 1e-9));
}

TEST_CASE("structured family closed forms") {
  const StructuredSolution sol = solve_structured(ref::case5_params());
  CHECK(near(sol.qu, 13.0 / 36, 1e-12));
  CHECK(near(sol.qe, 7.0 / 36, 1e-12));
  CHECK(near(sol.ratio, 13.0 / 7, 1e-12));
  CHECK(sol.ratio_finite);
  CHECK(!sol.degenerate_ratio);
  CHECK(!sol.twice_qe_holds);  // qu < 2 qe on these parameters
  CHECK(sol.max_index == 0);
  CHECK(sol.certificate.pass);
  CHECK(near(sol.unambiguous_failure, sol.qu, 1e-12));

  // the ambiguous POVM merges the shared direction into hypothesis 0
  CHECK(test::max_abs_diff(sol.ambiguous_povm.elements[0],
                           ref::case5_optimal_povm().elements[0]) == 0.0);
  CHECK(sol.unambiguous_povm.elements.size() == 4);
  CHECK(sol.unambiguous_povm.kind == Povm::Kind::unambiguous);
}

TEST_CASE("structured solver agrees with the commuting solver") {
  const StructuredSolution sol = solve_structured(ref::case5_params());
  const ExactResult com =
      solve_commuting(structured_to_ensemble(ref::case5_params()));
  CHECK(near(sol.qe, com.qe, 1e-9));

  const StructuredEnsemble skew =
      validate_structured({0.1, 0.1, 0.8}, {0.9, 0.9, 0.9});
  CHECK(near(solve_structured(skew).qe,
             solve_commuting(structured_to_ensemble(skew)).qe, 1e-9));
}

TEST_CASE("structured family with two states reduces to the closed form") {
  const StructuredEnsemble s = validate_structured({0.4, 0.6}, {0.6, 0.3});
  const StructuredSolution sol = solve_structured(s);
  const ExactResult two = solve_two_state(structured_to_ensemble(s));
  CHECK(near(sol.qe, two.qe, 1e-9));
}

TEST_CASE("zero overlaps are a degenerate ratio, not an error") {
  const StructuredSolution sol = solve_structured(
      validate_structured({0.5, 0.5}, {0.0, 0.0}));
  CHECK(sol.qu == 0.0);
  CHECK(sol.qe == 0.0);
  CHECK(sol.degenerate_ratio);
  CHECK(sol.ratio_finite);
  CHECK(sol.ratio == 0.0);
}

TEST_CASE("vanishing error with conclusive mass keeps an infinite ratio") {
  // one hypothesis holds all the shared mass: qe = 0 while qu > 0
  const StructuredSolution sol = solve_structured(
      validate_structured({0.5, 0.5}, {0.4, 0.0}));
  CHECK(sol.qu > 0.0);
  CHECK(sol.qe == 0.0);
  CHECK(!sol.ratio_finite);
  CHECK(sol.degenerate_ratio);
  CHECK(std::isinf(sol.ratio));
}

TEST_CASE("unambiguous feasibility checks conclusive outcomes") {
  const Ensemble e = ref::case1();
  const double qu =
      unambiguous_feasibility(e, ref::case5_unambiguous_povm());
  CHECK(near(qu, 13.0 / 36, 1e-12));

  // conclusive element aimed at the shared direction fires on every state
  Povm bad;
  bad.kind = Povm::Kind::unambiguous;
  bad.elements = {basis_projector(4, 1), basis_projector(4, 0),
                  basis_projector(4, 2), basis_projector(4, 3)};
  CHECK_THROWS_AS(unambiguous_feasibility(e, bad), NotUnambiguous);

  // ambiguous-kind input is the wrong shape for this check
  CHECK_THROWS_AS(unambiguous_feasibility(e, ref::case5_optimal_povm()),
                  NotUnambiguous);
}
