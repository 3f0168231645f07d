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

#include "qsd/random.hpp"

#include <cmath>

#include "qsd/errors.hpp"
#include "qsd/spectral.hpp"

namespace qsd {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

double Rng::uniform() {
  // Top 53 bits of the raw draw scale to the dyadic rationals in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1 - u1 in (0, 1]
  const double angle = kTwoPi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

double Rng::exponential() {
  for (;;) {
    const double e = -std::log1p(-uniform());
    if (e > 0.0) return e;
  }
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

std::vector<double> Rng::simplex(std::size_t m) {
  std::vector<double> v(m);
  double sum = 0.0;
  for (double& x : v) {
    x = exponential();
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

ComplexMatrix random_ginibre(Rng& rng, std::size_t dim) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_density(Rng& rng, std::size_t dim) {
  for (;;) {
    const ComplexMatrix g = random_ginibre(rng, dim);
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    if (tr <= 0.0) continue;  // requires G = 0; unreachable in practice
    rho *= Complex(1.0 / tr);
    return rho;
  }
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim, const Tolerances& tol) {
  const ComplexMatrix g = random_ginibre(rng, dim);
  const ComplexMatrix h = symmetrized(g);
  return hermitian_eig(h, tol).vectors;
}

Ensemble random_ensemble(std::uint64_t seed, std::size_t m, std::size_t dim,
                         const Tolerances& tol) {
  Rng rng(seed);
  std::vector<double> priors = rng.simplex(m);
  std::vector<ComplexMatrix> states;
  states.reserve(m);
  for (std::size_t i = 0; i < m; ++i) states.push_back(random_density(rng, dim));
  return validate_ensemble(std::move(priors), std::move(states), tol);
}

Ensemble random_commuting_ensemble(std::uint64_t seed, std::size_t m,
                                   std::size_t dim, const Tolerances& tol) {
  Rng rng(seed);
  std::vector<double> priors = rng.simplex(m);
  const ComplexMatrix v = random_unitary(rng, dim, tol);
  std::vector<ComplexMatrix> states;
  states.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<double> spectrum = rng.simplex(dim);
    ComplexMatrix rho(dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k)
          acc += spectrum[k] * v(a, k) * std::conj(v(b, k));
        rho(a, b) = acc;
      }
    states.push_back(symmetrized(rho));
  }
  return validate_ensemble(std::move(priors), std::move(states), tol);
}

}  // namespace qsd
