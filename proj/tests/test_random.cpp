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
#include <set>

#include "doctest.h"
#include "qsd/complex_matrix.hpp"
#include "qsd/ensemble.hpp"
#include "qsd/random.hpp"
#include "qsd/spectral.hpp"
#include "test_support.hpp"

using namespace qsd;

TEST_CASE("rng primitives stay in range") {
  Rng rng(5);
  double sum = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += rng.normal();
    CHECK(rng.exponential() >= 0.0);
  }
  // loose sanity: the normal mean concentrates near 0
  CHECK(std::abs(sum / 2000.0) < 0.1);
}

TEST_CASE("simplex samples are distributions") {
  Rng rng(6);
  for (int rep = 0; rep < 50; ++rep) {
    const std::vector<double> p = rng.simplex(4);
    double sum = 0.0;
    for (double x : p) {
      CHECK(x > 0.0);
      sum += x;
    }
    CHECK(test::near(sum, 1.0, 1e-12));
  }
}

TEST_CASE("derived trial seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(99, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("random unitary is unitary") {
  Rng rng(8);
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    const ComplexMatrix u = random_unitary(rng, dim);
    CHECK(test::max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(dim))
          <= 1e-10);
  }
}

TEST_CASE("random density matrices are valid states") {
  Rng rng(9);
  for (int rep = 0; rep < 30; ++rep) {
    const ComplexMatrix rho = random_density(rng, 2 + rep % 4);
    validate_density_matrix(rho);  // throws on violation
    const HermitianEigensystem es = hermitian_eig(rho);
    CHECK(es.values.front() >= -1e-10);
  }
}

TEST_CASE("random ensembles are deterministic per seed") {
  const Ensemble a = random_ensemble(1234, 3, 3);
  const Ensemble b = random_ensemble(1234, 3, 3);
  REQUIRE(a.m() == b.m());
  for (std::size_t i = 0; i < a.m(); ++i) {
    CHECK(a.priors[i] == b.priors[i]);
    CHECK(test::max_abs_diff(a.states[i], b.states[i]) == 0.0);
  }
  const Ensemble c = random_ensemble(1235, 3, 3);
  CHECK(test::max_abs_diff(a.states[0], c.states[0]) > 0.0);
}

TEST_CASE("commuting ensembles commute pairwise") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Ensemble e = random_commuting_ensemble(seed, 3, 4);
    for (std::size_t i = 0; i < e.m(); ++i) {
      for (std::size_t j = i + 1; j < e.m(); ++j) {
        const ComplexMatrix c = commutator(e.states[i], e.states[j]);
        CHECK(c.max_abs() <= 1e-10);
      }
    }
  }
  const Ensemble a = random_commuting_ensemble(77, 2, 3);
  const Ensemble b = random_commuting_ensemble(77, 2, 3);
  CHECK(test::max_abs_diff(a.states[1], b.states[1]) == 0.0);
}
