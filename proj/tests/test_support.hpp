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

#ifndef QSD_TESTS_TEST_SUPPORT_HPP_
#define QSD_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qsd/complex_matrix.hpp"

namespace qsd::test {

inline ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m(values.size());
  std::size_t i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

// |k><k| in the given dimension.
inline ComplexMatrix basis_projector(std::size_t dim, std::size_t k) {
  ComplexMatrix m(dim);
  m(k, k) = 1.0;
  return m;
}

// Outer product of an (unnormalized) amplitude vector with itself,
// normalized to unit trace.
inline ComplexMatrix pure_state(const std::vector<Complex>& amps) {
  const std::size_t dim = amps.size();
  ComplexMatrix m(dim);
  double norm2 = 0.0;
  for (const Complex& a : amps) norm2 += std::norm(a);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = amps[r] * std::conj(amps[c]) / norm2;
    }
  }
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline bool near(double a, double b, double tol) {
  return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= tol;
}

}  // namespace qsd::test

#endif  // QSD_TESTS_TEST_SUPPORT_HPP_
