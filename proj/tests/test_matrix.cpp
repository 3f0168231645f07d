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

#include <limits>

#include "doctest.h"
#include "qsd/complex_matrix.hpp"
#include "qsd/errors.hpp"
#include "test_support.hpp"

using namespace qsd;
using test::diag;

TEST_CASE("identity basics") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(id.dim() == 3);
  CHECK(id.trace() == Complex(3.0, 0.0));
  CHECK(id.max_abs() == 1.0);
  CHECK(id.hermiticity_defect() == 0.0);
}

TEST_CASE("from_entries validates shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix::from_entries(2, {Complex(1.0)}), DimMismatch);
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(
      ComplexMatrix::from_entries(1, {Complex(inf, 0.0)}), BadState);
  CHECK_THROWS_AS(
      ComplexMatrix::from_entries(1, {Complex(0.0, nan)}), BadState);
  const ComplexMatrix ok =
      ComplexMatrix::from_entries(2, {Complex(1.0), Complex(2.0),
                                      Complex(3.0), Complex(4.0)});
  CHECK(ok(1, 0) == Complex(3.0, 0.0));
  CHECK(ok.all_finite());
}

TEST_CASE("adjoint conjugates and transposes") {
  ComplexMatrix a(2);
  a(0, 1) = Complex(0.0, 1.0);
  const ComplexMatrix ad = a.adjoint();
  CHECK(ad(1, 0) == Complex(0.0, -1.0));
  CHECK(ad(0, 1) == Complex(0.0, 0.0));
  // A - A^dagger has entries i and i off the diagonal, so the defect is 1
  CHECK(a.hermiticity_defect() == doctest::Approx(1.0));
}

TEST_CASE("arithmetic and products") {
  const ComplexMatrix a = diag({1.0, 2.0});
  const ComplexMatrix b = diag({3.0, 5.0});
  CHECK((a + b)(1, 1) == Complex(7.0, 0.0));
  CHECK((a - b)(0, 0) == Complex(-2.0, 0.0));
  CHECK((a * Complex(2.0, 0.0))(1, 1) == Complex(4.0, 0.0));
  CHECK((a * b)(0, 0) == Complex(3.0, 0.0));

  // the product is the matrix product, not elementwise
  ComplexMatrix x(2);
  x(0, 1) = x(1, 0) = 1.0;
  const ComplexMatrix xa = x * a;
  CHECK(xa(0, 1) == Complex(2.0, 0.0));
  CHECK(xa(1, 0) == Complex(1.0, 0.0));
}

TEST_CASE("dimension mismatch throws") {
  const ComplexMatrix a = diag({1.0, 2.0});
  const ComplexMatrix b = diag({1.0, 2.0, 3.0});
  CHECK_THROWS_AS(a + b, DimMismatch);
  CHECK_THROWS_AS(a * b, DimMismatch);
}

TEST_CASE("commutator vanishes iff operators commute") {
  const ComplexMatrix a = diag({1.0, 2.0});
  const ComplexMatrix b = diag({4.0, 9.0});
  CHECK(commutator(a, b).max_abs() == 0.0);

  ComplexMatrix x(2);
  x(0, 1) = x(1, 0) = 1.0;
  const ComplexMatrix z = diag({1.0, -1.0});
  CHECK(commutator(x, z).max_abs() == 2.0);
}

TEST_CASE("symmetrized output is exactly Hermitian") {
  ComplexMatrix a(2);
  a(0, 1) = Complex(1.0, 0.5);
  a(1, 0) = Complex(0.2, 0.1);
  const ComplexMatrix s = symmetrized(a);
  CHECK(s.hermiticity_defect() == 0.0);
  CHECK(s(0, 1) == std::conj(s(1, 0)));
}

TEST_CASE("frobenius norm") {
  CHECK(diag({3.0, 4.0}).frobenius_norm() == doctest::Approx(5.0));
  CHECK(ComplexMatrix(3).frobenius_norm() == 0.0);
}
