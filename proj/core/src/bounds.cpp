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

#include "qsd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qsd/errors.hpp"
#include "qsd/spectral.hpp"

namespace qsd {

namespace {

// Ties between per-pivot values are broken toward the smallest index within
// this window; the minimum itself is unaffected.
constexpr double kTieWindow = 1e-12;

ComplexMatrix weighted_state(const Ensemble& e, std::size_t i) {
  ComplexMatrix w = e.states[i];
  w *= Complex(e.priors[i]);
  return w;
}

ComplexMatrix state_sum(const Ensemble& e) {
  ComplexMatrix s(e.dim());
  for (const ComplexMatrix& rho : e.states) s += rho;
  return s;
}

ComplexMatrix weighted_sum(const Ensemble& e) {
  ComplexMatrix s(e.dim());
  for (std::size_t i = 0; i < e.m(); ++i) s += weighted_state(e, i);
  return s;
}

double top_prior_mass(const Ensemble& e, std::size_t d) {
  std::vector<double> priors = e.priors;
  std::sort(priors.begin(), priors.end(), std::greater<double>());
  const std::size_t take = std::min(d, priors.size());
  double mass = 0.0;
  for (std::size_t i = 0; i < take; ++i) mass += priors[i];
  return mass;
}

}  // namespace

std::size_t effective_dimension(const Ensemble& e, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(state_sum(e), tol);
  const double cutoff = tol.tol_rank * std::max(es.values.back(), 0.0);
  std::size_t d = 0;
  for (double lam : es.values)
    if (lam > cutoff) ++d;
  return d;
}

double helstrom_bound(const Ensemble& e, const Tolerances& tol) {
  if (e.m() != 2) {
    throw WrongArity("helstrom_bound: needs exactly 2 states, got " +
                     std::to_string(e.m()));
  }
  const ComplexMatrix delta = weighted_state(e, 1) - weighted_state(e, 0);
  return 0.5 * (1.0 - trace_norm(delta, tol));
}

double bound_l0(const Ensemble& e, const Tolerances& tol) {
  return 1.0 - top_prior_mass(e, effective_dimension(e, tol));
}

double bound_l1(const Ensemble& e, const Tolerances& tol) {
  const std::size_t d = effective_dimension(e, tol);
  double max_norm = 0.0;
  for (std::size_t i = 0; i < e.m(); ++i)
    max_norm = std::max(max_norm, operator_norm(weighted_state(e, i), tol));
  return 1.0 - static_cast<double>(d) * max_norm;
}

double bound_l2(const Ensemble& e, const Tolerances& tol) {
  const std::size_t m = e.m();
  double pair_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      pair_sum +=
          trace_norm(weighted_state(e, j) - weighted_state(e, i), tol);
  return 0.5 * (1.0 - pair_sum / static_cast<double>(m - 1));
}

double bound_l3(const Ensemble& e, const Tolerances& tol) {
  const std::size_t m = e.m();
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double f = fidelity(e.states[i], e.states[j], tol);
      acc += e.priors[i] * e.priors[j] * f * f;
    }
  return acc;
}

L4Detail bound_l4(const Ensemble& e, const Tolerances& tol) {
  const std::size_t m = e.m();
  L4Detail out;
  out.per_k.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const ComplexMatrix wk = weighted_state(e, k);
    double acc = e.priors[k];
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      acc += positive_part(weighted_state(e, j) - wk, tol).trace().real();
    }
    out.per_k[k] = acc;
  }
  const double best = *std::min_element(out.per_k.begin(), out.per_k.end());
  out.min_index = 0;
  while (out.per_k[out.min_index] > best + kTieWindow) ++out.min_index;
  out.value = 1.0 - best;
  return out;
}

double bound_l5(const Ensemble& e, const Tolerances& tol) {
  ComplexMatrix acc(e.dim());
  for (std::size_t i = 0; i < e.m(); ++i) {
    ComplexMatrix sq = e.states[i] * e.states[i];
    sq *= Complex(e.priors[i] * e.priors[i]);
    acc += sq;
  }
  return 1.0 - matrix_sqrt_psd(acc, tol).trace().real();
}

double bound_l6(const Ensemble& e, const Tolerances& tol) {
  const std::size_t n = e.dim();
  const ComplexMatrix inv_root = pseudo_inverse_sqrt(weighted_sum(e), tol);
  double total = 0.0;
  for (std::size_t i = 0; i < e.m(); ++i) {
    const HermitianEigensystem es = hermitian_eig(e.states[i], tol);
    const double cutoff = tol.tol_rank * std::max(es.values.back(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (es.values[k] <= cutoff) continue;
      // <psi | inv_root | psi> for the k-th eigenvector of state i.
      Complex overlap = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        Complex row = 0.0;
        for (std::size_t b = 0; b < n; ++b)
          row += inv_root(a, b) * es.vectors(b, k);
        overlap += std::conj(es.vectors(a, k)) * row;
      }
      const double term = e.priors[i] * es.values[k] * overlap.real();
      total += term * term;
    }
  }
  return 1.0 - std::pow(total, 0.25);
}

BoundReport all_bounds(const Ensemble& e, const Tolerances& tol) {
  BoundReport r;
  r.m = e.m();
  r.dim = e.dim();
  r.effective_dim = effective_dimension(e, tol);
  r.l0_top_prior_mass = top_prior_mass(e, r.effective_dim);

  r.values[0] = 1.0 - r.l0_top_prior_mass;
  r.values[1] = bound_l1(e, tol);
  r.values[2] = bound_l2(e, tol);
  r.values[3] = bound_l3(e, tol);
  const L4Detail l4 = bound_l4(e, tol);
  r.values[4] = l4.value;
  r.l4_per_k = l4.per_k;
  r.l4_min_index = l4.min_index;
  r.values[5] = bound_l5(e, tol);
  r.values[6] = bound_l6(e, tol);
  for (std::size_t b = 0; b < kNumBounds; ++b)
    r.clamped[b] = std::max(r.values[b], 0.0);
  if (r.m == 2) r.helstrom = helstrom_bound(e, tol);

  for (std::size_t b = 0; b < kNumBounds; ++b) {
    if (r.values[b] > 1.0 + tol.tol_recon) {
      throw InternalInconsistency(
          std::string(kBoundNames[b]) + " = " + std::to_string(r.values[b]) +
          " exceeds 1");
    }
  }
  if (r.values[4] < r.values[2] - 1e-9) {
    throw InternalInconsistency("L4 " + std::to_string(r.values[4]) +
                                " fell below L2 " +
                                std::to_string(r.values[2]));
  }
  if (r.helstrom) {
    if (std::abs(r.values[4] - *r.helstrom) > 1e-9 ||
        std::abs(r.values[2] - *r.helstrom) > 1e-9) {
      throw InternalInconsistency(
          "two-state collapse violated: L4 = " + std::to_string(r.values[4]) +
          ", L2 = " + std::to_string(r.values[2]) +
          ", helstrom = " + std::to_string(*r.helstrom));
    }
  }
  return r;
}

}  // namespace qsd
