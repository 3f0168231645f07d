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

#ifndef QSD_EXACT_HPP_
#define QSD_EXACT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "qsd/bounds.hpp"
#include "qsd/ensemble.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// Optimality certificate for a candidate minimum-error measurement: the
// measurement is optimal iff R = sum_i p_i rho_i E_i is Hermitian and
// R - p_j rho_j is PSD for every j. Only that sufficiency direction is used
// here: a passing certificate proves 1 - sum_i p_i Tr(rho_i E_i) is the true
// minimum; a failing one is a normal result, not an error.
struct Certificate {
  ComplexMatrix r_matrix;           // R as computed (unsymmetrized)
  double hermiticity_defect = 0.0;  // ||R - R^dagger||_max
  // Smallest eigenvalue of (R + R^dagger)/2 - p_j rho_j, one entry per j;
  // min_margin is the most negative of them.
  std::vector<double> margins;
  double min_margin = 0.0;
  bool pass = false;  // defect <= tol_recon and min_margin >= -tol_psd
};

Certificate certify_optimal(const Ensemble& e, const Povm& povm,
                            const Tolerances& tol = {});

enum class ExactMethod { two_state_helstrom, commuting_classical,
                         structured_family };

// An exactly solved instance: the POVM attains qe and carries its passing
// certificate.
struct ExactResult {
  double qe = 0.0;       // minimum-error probability 1 - success
  double success = 0.0;  // sum_i p_i Tr(rho_i E_i)
  Povm optimal_povm;
  Certificate certificate;
  ExactMethod method = ExactMethod::two_state_helstrom;
};

// Two-state solution: E_2 projects onto the support of the positive part of
// p2 rho2 - p1 rho1, E_1 is its complement. qe equals the Helstrom value and
// the certificate passes by construction. Throws WrongArity unless m = 2.
ExactResult solve_two_state(const Ensemble& e, const Tolerances& tol = {});

// Commuting-ensemble solution by classical maximum likelihood: diagonalize
// one fixed generic combination sum_i (1 + (i+1)/(m+1)) p_i rho_i, require
// every state diagonal in that basis within 1e-8 (else NotCommuting, also
// thrown when a pairwise commutator norm exceeds 1e-8 up front), then assign
// each basis vector to the hypothesis maximizing p_i <x|rho_i|x> (smallest
// index on ties). The certificate is verified before returning; its failure
// (CertificateFailed) signals numerical breakdown, e.g. a near-degenerate
// combination spectrum, never a wrong answer silently returned.
ExactResult solve_commuting(const Ensemble& e, const Tolerances& tol = {});

// Attainability of the L4 bound. For each pivot k the positive parts
// {(p_j rho_j - p_k rho_k)_+, j != k} either have mutually orthogonal
// supports (max pairwise projector-product norm <= 1e-8) or not; the bound
// is attained iff some k is simultaneously a minimizer of the L4 expression
// and orthogonal in this sense. Orthogonality and minimization are reported
// independently per k because the underlying equality condition does not say
// which k realizes it.
struct AttainabilityPerK {
  double value = 0.0;        // p_k + sum_j Tr(...)_+ for this pivot
  bool attains_min = false;  // within 1e-9 of the minimum over k
  double max_overlap = 0.0;  // largest ||P_j P_j'|| over pairs j < j'
  bool orthogonal = false;   // max_overlap <= 1e-8
};

struct AttainabilityReport {
  std::vector<AttainabilityPerK> per_k;
  double l4 = 0.0;
  std::size_t l4_min_index = 0;
  bool attained = false;
  std::optional<std::size_t> attained_k;  // smallest witnessing pivot
  // Populated when attained: E_j = support projector of
  // (p_j rho_j - p_k rho_k)_+ for j != k, E_k = I - sum of the others,
  // together with its certificate and the error probability it achieves.
  std::optional<Povm> povm;
  std::optional<Certificate> certificate;
  std::optional<double> qe;
};

AttainabilityReport check_l4_attainability(const Ensemble& e,
                                           const Tolerances& tol = {});

// Closed-form solution of the structured family. qu is the unambiguous
// failure probability sum_i p_i alpha_i; qe = qu - max_i p_i alpha_i is the
// minimum-error probability, attained by merging the inconclusive direction
// into the best hypothesis. ratio = qu / qe diverges as qe -> 0 with qu
// fixed; that degenerate case is flagged, not an error.
struct StructuredSolution {
  double qe = 0.0;
  double qu = 0.0;
  double ratio = 0.0;         // + infinity when qe = 0 < qu; 0 when qu = qe = 0
  bool ratio_finite = true;   // false exactly in the qe = 0 < qu case
  bool degenerate_ratio = false;  // qe = 0
  bool twice_qe_holds = false;    // qu >= 2 qe
  std::size_t max_index = 0;      // argmax p_i alpha_i (smallest on ties)
  Povm ambiguous_povm;
  Certificate certificate;  // must pass (CertificateFailed otherwise)
  Povm unambiguous_povm;    // element 0 inconclusive
  double unambiguous_failure = 0.0;  // equals qu
};

StructuredSolution solve_structured(const StructuredEnsemble& s,
                                    const Tolerances& tol = {});

// Checks that a candidate unambiguous measurement never answers wrong:
// Tr(element_i rho_j) <= 1e-9 for every conclusive i and every j != i - 1.
// Returns the failure probability sum_j p_j Tr(rho_j element_0); throws
// NotUnambiguous naming the worst offending (element, state) pair.
double unambiguous_feasibility(const Ensemble& e, const Povm& povm,
                               const Tolerances& tol = {});

}  // namespace qsd

#endif  // QSD_EXACT_HPP_
