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

#include <vector>

#include "doctest.h"
#include "qsd/bounds.hpp"
#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "reference.hpp"
#include "test_support.hpp"

using namespace qsd;
using test::basis_projector;
using test::diag;

TEST_CASE("validate_ensemble accepts the diagonal triple") {
  const Ensemble e = ref::case1();
  CHECK(e.m() == 3);
  CHECK(e.dim() == 4);
  CHECK(e.priors[0] == doctest::Approx(1.0 / 3));
}

TEST_CASE("validate_ensemble rejects bad priors") {
  const std::vector<ComplexMatrix> pair = {basis_projector(2, 0),
                                           basis_projector(2, 1)};
  CHECK_THROWS_AS(validate_ensemble({0.5, 0.6}, pair), BadPrior);
  CHECK_THROWS_AS(validate_ensemble({1.2, -0.2}, pair), BadPrior);
  CHECK_THROWS_AS(validate_ensemble({1.0, 0.0}, pair), BadPrior);
}

TEST_CASE("validate_ensemble rejects bad states") {
  CHECK_THROWS_AS(
      validate_ensemble({0.5, 0.5},
                        {diag({1.2, -0.2}), basis_projector(2, 0)}),
      BadState);
  // non-unit trace
  CHECK_THROWS_AS(
      validate_ensemble({0.5, 0.5}, {diag({0.4, 0.4}), basis_projector(2, 0)}),
      BadState);
  // non-Hermitian
  ComplexMatrix skew(2);
  skew(0, 0) = 1.0;
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(
      validate_ensemble({0.5, 0.5}, {skew, basis_projector(2, 0)}), BadState);
}

TEST_CASE("validate_ensemble rejects shape problems") {
  CHECK_THROWS_AS(
      validate_ensemble({0.5, 0.5},
                        {basis_projector(2, 0), basis_projector(3, 0)}),
      DimMismatch);
  CHECK_THROWS_AS(validate_ensemble({1.0}, {basis_projector(2, 0)}),
                  WrongArity);
  CHECK_THROWS_AS(
      validate_ensemble({0.5, 0.5}, {basis_projector(2, 0)}), WrongArity);
}

TEST_CASE("effective dimension is the rank of the average state") {
  CHECK(effective_dimension(ref::case1()) == 4);
  CHECK(effective_dimension(ref::case2()) == 2);
  // two copies of |0> embedded in dim 3 span one direction
  const Ensemble e = validate_ensemble(
      {0.5, 0.5}, {basis_projector(3, 0), basis_projector(3, 0)});
  CHECK(effective_dimension(e) == 1);
}

TEST_CASE("povm validation") {
  // valid: complete projective pair
  const Povm p = validate_povm(
      Povm::Kind::ambiguous, {basis_projector(2, 0), basis_projector(2, 1)});
  CHECK(p.elements.size() == 2);

  // does not resolve the identity
  CHECK_THROWS_AS(
      validate_povm(Povm::Kind::ambiguous,
                    {basis_projector(2, 0), basis_projector(2, 0)}),
      BadState);
  // negative element
  CHECK_THROWS_AS(
      validate_povm(Povm::Kind::ambiguous,
                    {diag({1.0, 2.0}), diag({0.0, -1.0})}),
      BadState);
}

TEST_CASE("structured parameters validate and expand") {
  const StructuredEnsemble s =
      validate_structured({1.0 / 3, 1.0 / 3, 1.0 / 3},
                          {1.0 / 2, 1.0 / 3, 1.0 / 4});
  const Ensemble e = structured_to_ensemble(s);
  CHECK(e.dim() == 4);
  CHECK(test::max_abs_diff(e.states[0], ref::case1().states[0]) == 0.0);
  CHECK(test::max_abs_diff(e.states[2], ref::case1().states[2]) == 0.0);

  CHECK_THROWS_AS(validate_structured({0.5, 0.5}, {0.5, 1.5}), BadState);
  CHECK_THROWS_AS(validate_structured({0.5, 0.5}, {-0.1, 0.5}), BadState);
  CHECK_THROWS_AS(validate_structured({0.7, 0.7}, {0.5, 0.5}), BadPrior);
  CHECK_THROWS_AS(validate_structured({1.0}, {0.5}), WrongArity);
}

TEST_CASE("all-zero overlap weights give orthogonal pure states") {
  const Ensemble e = structured_to_ensemble(
      validate_structured({0.5, 0.5}, {0.0, 0.0}));
  CHECK(test::max_abs_diff(e.states[0], basis_projector(3, 1)) == 0.0);
  CHECK(test::max_abs_diff(e.states[1], basis_projector(3, 2)) == 0.0);
}

TEST_CASE("structured states share only the first basis direction") {
  const Ensemble e = structured_to_ensemble(
      validate_structured({0.2, 0.3, 0.5}, {0.9, 0.4, 0.7}));
  for (std::size_t i = 1; i <= e.m(); ++i) {
    for (std::size_t j = 0; j < e.m(); ++j) {
      if (j + 1 == i) continue;
      CHECK(std::abs(e.states[j](i, i)) == 0.0);
    }
  }
}
