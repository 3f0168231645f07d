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

#ifndef QSD_ENSEMBLE_HPP_
#define QSD_ENSEMBLE_HPP_

#include <cstddef>
#include <vector>

#include "qsd/complex_matrix.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// A finite ensemble of quantum states: state i is prepared with prior
// probability priors[i] > 0 and described by the density matrix states[i]
// (Hermitian, PSD, unit trace). Always construct through validate_ensemble;
// the free functions in this library assume the invariants hold.
struct Ensemble {
  std::vector<double> priors;
  std::vector<ComplexMatrix> states;

  std::size_t m() const { return states.size(); }
  std::size_t dim() const { return states.empty() ? 0 : states.front().dim(); }
};

// A positive operator-valued measure. For an ambiguous (minimum-error)
// measurement there is one element per hypothesis. For an unambiguous
// measurement there are m + 1 elements and element 0 is the inconclusive
// outcome.
struct Povm {
  enum class Kind { ambiguous, unambiguous };

  Kind kind = Kind::ambiguous;
  std::vector<ComplexMatrix> elements;

  std::size_t dim() const {
    return elements.empty() ? 0 : elements.front().dim();
  }
};

// Parametric family in dimension m + 1: state i (0-based) is
//   alpha_i |0><0| + (1 - alpha_i) |i+1><i+1|,
// so all states overlap only through the shared |0> component. Both the
// minimum-error and the unambiguous failure probabilities have closed forms
// for this family.
struct StructuredEnsemble {
  std::vector<double> priors;
  std::vector<double> alphas;  // each in [0, 1]

  std::size_t m() const { return alphas.size(); }
};

// Checks a single density matrix: Hermitian within tol_recon, eigenvalues
// >= -tol_psd, trace within tol_recon of 1. Throws BadState with the reason.
void validate_density_matrix(const ComplexMatrix& rho,
                             const Tolerances& tol = {});

// Validates raw priors + states and returns the ensemble. Eager and total:
// an Ensemble that came from here satisfies every invariant. Throws BadPrior
// (non-positive entry, or sum off 1 beyond tol_recon), BadState (with the
// offending index and reason), DimMismatch, WrongArity (fewer than 2 states
// or count mismatch).
Ensemble validate_ensemble(std::vector<double> priors,
                           std::vector<ComplexMatrix> states,
                           const Tolerances& tol = {});

// Validates elements (Hermitian within tol_recon, PSD within tol_psd, equal
// dims, summing to the identity within tol_recon) and returns the POVM.
Povm validate_povm(Povm::Kind kind, std::vector<ComplexMatrix> elements,
                   const Tolerances& tol = {});

// Priors positive and normalized, alphas within [0, 1], m >= 2.
StructuredEnsemble validate_structured(std::vector<double> priors,
                                       std::vector<double> alphas,
                                       const Tolerances& tol = {});

// Realizes the structured family as a concrete ensemble in dimension m + 1.
Ensemble structured_to_ensemble(const StructuredEnsemble& s,
                                const Tolerances& tol = {});

}  // namespace qsd

#endif  // QSD_ENSEMBLE_HPP_
