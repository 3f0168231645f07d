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

#ifndef QSD_BOUNDS_HPP_
#define QSD_BOUNDS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qsd/ensemble.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// The seven lower bounds on the minimum-error probability Q_E of
// discriminating the states of an ensemble. Indices are stable: they name
// array slots in BoundReport and columns in sweep summaries.
enum class BoundId : int {
  l0 = 0,  // prior mass outside the d largest priors
  l1 = 1,  // 1 - d * max_i ||p_i rho_i|| (may be negative)
  l2 = 2,  // pairwise trace-distance bound
  l3 = 3,  // pairwise squared-fidelity bound
  l4 = 4,  // positive-part bound, minimized over the pivot state k
  l5 = 5,  // 1 - Tr sqrt(sum_i p_i^2 rho_i^2)
  l6 = 6,  // quartic-root eigenvector-overlap bound
};

inline constexpr std::size_t kNumBounds = 7;
inline constexpr std::array<std::string_view, kNumBounds> kBoundNames = {
    "L0", "L1", "L2", "L3", "L4", "L5", "L6"};

// Rank of sum_i rho_i at the relative cutoff tol_rank: the dimension d of
// the subspace the ensemble actually occupies. 1 <= d <= dim.
std::size_t effective_dimension(const Ensemble& e, const Tolerances& tol = {});

// Two-state minimum-error probability (1 - Tr|p2 rho2 - p1 rho1|) / 2.
// Throws WrongArity unless m = 2.
double helstrom_bound(const Ensemble& e, const Tolerances& tol = {});

double bound_l0(const Ensemble& e, const Tolerances& tol = {});
double bound_l1(const Ensemble& e, const Tolerances& tol = {});
double bound_l2(const Ensemble& e, const Tolerances& tol = {});
double bound_l3(const Ensemble& e, const Tolerances& tol = {});
double bound_l5(const Ensemble& e, const Tolerances& tol = {});
double bound_l6(const Ensemble& e, const Tolerances& tol = {});

// The L4 bound keeps its per-pivot breakdown: value = 1 - min_k per_k[k]
// with per_k[k] = p_k + sum_{j != k} Tr (p_j rho_j - p_k rho_k)_+.
// min_index is the smallest k attaining the minimum (ties resolved within
// 1e-12); the bound value itself is tie-invariant.
struct L4Detail {
  double value = 0.0;
  std::size_t min_index = 0;
  std::vector<double> per_k;
};
L4Detail bound_l4(const Ensemble& e, const Tolerances& tol = {});

// All bounds of one ensemble, with the cheap cross-checks every report must
// satisfy already enforced. Raw values keep their sign (L1 in particular can
// be negative); clamped[] holds max(value, 0) for direct use as a
// probability bound.
struct BoundReport {
  std::size_t m = 0;
  std::size_t dim = 0;
  std::size_t effective_dim = 0;
  std::array<double, kNumBounds> values{};
  std::array<double, kNumBounds> clamped{};
  std::optional<double> helstrom;  // present iff m = 2
  std::vector<double> l4_per_k;
  std::size_t l4_min_index = 0;
  double l0_top_prior_mass = 0.0;  // sum of the min(d, m) largest priors

  double value(BoundId id) const { return values[static_cast<int>(id)]; }
};

// Computes every bound and verifies the report invariants (each value at
// most 1 + tol_recon; l4 >= l2 - 1e-9; for m = 2, l4 and l2 within 1e-9 of
// the Helstrom value). An invariant failure throws InternalInconsistency:
// it means this library miscomputed, not that the input was bad.
BoundReport all_bounds(const Ensemble& e, const Tolerances& tol = {});

}  // namespace qsd

#endif  // QSD_BOUNDS_HPP_
