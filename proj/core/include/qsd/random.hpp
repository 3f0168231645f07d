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

#ifndef QSD_RANDOM_HPP_
#define QSD_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "qsd/ensemble.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// Deterministic random source. The generator is the 64-bit Mersenne Twister
// (mt19937_64, whose output sequence is fixed by the C++ standard) and every
// distribution mapping is pinned here rather than delegated to the standard
// library, because std::normal_distribution and friends are not portable
// across implementations:
//
//   uniform():      u = (x >> 11) * 2^-53 in [0, 1) from one raw draw x.
//   normal():       Box-Muller; draws u1, u2 once, returns
//                   sqrt(-2 ln(1 - u1)) cos(2 pi u2) and caches the sine twin
//                   for the next call.
//   exponential():  -ln(1 - u), redrawn in the (p = 2^-53) case where the
//                   mapping yields exactly 0, so results are strictly
//                   positive.
//   simplex(m):     m exponentials, normalized; strictly positive entries.
//
// Identical seeds therefore reproduce identical ensembles, bit for bit, on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();
  double normal();
  double exponential();
  Complex complex_normal();  // independent N(0,1) real and imaginary parts
  std::vector<double> simplex(std::size_t m);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Per-trial seed derivation for parallel sweeps: seed XOR trial index.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ index;
}

// dim x dim matrix with i.i.d. complex normal entries.
ComplexMatrix random_ginibre(Rng& rng, std::size_t dim);

// G G^dagger / Tr(G G^dagger) for a Ginibre G: a full-rank-almost-surely
// random density matrix.
ComplexMatrix random_density(Rng& rng, std::size_t dim);

// Random unitary as the eigenvector matrix of a random Hermitian
// (G + G^dagger)/2; orthonormal within tol_orth.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim,
                             const Tolerances& tol = {});

// m Ginibre states with priors drawn uniformly on the simplex. Draw order is
// fixed (priors first, then states in index order) and part of the format:
// changing it would silently change every seeded sweep.
Ensemble random_ensemble(std::uint64_t seed, std::size_t m, std::size_t dim,
                         const Tolerances& tol = {});

// m states diagonal in one shared random unitary basis, with simplex-sampled
// spectra: pairwise commutators vanish up to rounding. Draw order: priors,
// basis, then per-state spectra.
Ensemble random_commuting_ensemble(std::uint64_t seed, std::size_t m,
                                   std::size_t dim,
                                   const Tolerances& tol = {});

}  // namespace qsd

#endif  // QSD_RANDOM_HPP_
