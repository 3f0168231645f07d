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

#include "qsd/ensemble.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qsd/errors.hpp"
#include "qsd/spectral.hpp"

namespace qsd {

void validate_density_matrix(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.dim() == 0) throw BadState("state: dimension must be >= 1");
  if (!rho.all_finite()) throw BadState("state: non-finite entry");
  const double defect = rho.hermiticity_defect();
  if (defect > tol.tol_recon) {
    throw BadState("state: not Hermitian (defect " + std::to_string(defect) +
                   ")");
  }
  const HermitianEigensystem es = hermitian_eig(rho, tol);
  if (es.values.front() < -tol.tol_psd) {
    throw BadState("state: not PSD (eigenvalue " +
                   std::to_string(es.values.front()) + ")");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol.tol_recon) {
    throw BadState("state: trace " + std::to_string(tr) + " != 1");
  }
}

Ensemble validate_ensemble(std::vector<double> priors,
                           std::vector<ComplexMatrix> states,
                           const Tolerances& tol) {
  if (states.size() < 2) {
    throw WrongArity("ensemble: need at least 2 states, got " +
                     std::to_string(states.size()));
  }
  if (priors.size() != states.size()) {
    throw WrongArity("ensemble: " + std::to_string(priors.size()) +
                     " priors for " + std::to_string(states.size()) +
                     " states");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < priors.size(); ++i) {
    if (!(priors[i] > 0.0) || !std::isfinite(priors[i])) {
      throw BadPrior("prior " + std::to_string(i) + " = " +
                     std::to_string(priors[i]) + " is not strictly positive");
    }
    sum += priors[i];
  }
  if (std::abs(sum - 1.0) > tol.tol_recon) {
    throw BadPrior("priors sum to " + std::to_string(sum) + ", expected 1");
  }
  const std::size_t dim = states.front().dim();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw DimMismatch("state " + std::to_string(i) + " has dimension " +
                        std::to_string(states[i].dim()) + ", expected " +
                        std::to_string(dim));
    }
    try {
      validate_density_matrix(states[i], tol);
    } catch (const BadState& e) {
      throw BadState("state " + std::to_string(i) + ": " + e.what());
    }
  }
  return Ensemble{std::move(priors), std::move(states)};
}

Povm validate_povm(Povm::Kind kind, std::vector<ComplexMatrix> elements,
                   const Tolerances& tol) {
  if (elements.empty()) throw WrongArity("povm: no elements");
  const std::size_t dim = elements.front().dim();
  if (dim == 0) throw BadState("povm: dimension must be >= 1");
  ComplexMatrix sum(dim);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const ComplexMatrix& e = elements[i];
    if (e.dim() != dim) {
      throw DimMismatch("povm element " + std::to_string(i) +
                        " has dimension " + std::to_string(e.dim()) +
                        ", expected " + std::to_string(dim));
    }
    if (!e.all_finite()) {
      throw BadState("povm element " + std::to_string(i) +
                     ": non-finite entry");
    }
    const double defect = e.hermiticity_defect();
    if (defect > tol.tol_recon) {
      throw BadState("povm element " + std::to_string(i) +
                     ": not Hermitian (defect " + std::to_string(defect) +
                     ")");
    }
    const HermitianEigensystem es = hermitian_eig(e, tol);
    if (es.values.front() < -tol.tol_psd) {
      throw BadState("povm element " + std::to_string(i) +
                     ": not PSD (eigenvalue " +
                     std::to_string(es.values.front()) + ")");
    }
    sum += e;
  }
  sum -= ComplexMatrix::identity(dim);
  const double completeness = sum.max_abs();
  if (completeness > tol.tol_recon) {
    throw BadState("povm: elements sum to I + E with ||E||_max = " +
                   std::to_string(completeness));
  }
  return Povm{kind, std::move(elements)};
}

StructuredEnsemble validate_structured(std::vector<double> priors,
                                       std::vector<double> alphas,
                                       const Tolerances& tol) {
  if (alphas.size() < 2) {
    throw WrongArity("structured ensemble: need at least 2 states, got " +
                     std::to_string(alphas.size()));
  }
  if (priors.size() != alphas.size()) {
    throw WrongArity("structured ensemble: " + std::to_string(priors.size()) +
                     " priors for " + std::to_string(alphas.size()) +
                     " states");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < priors.size(); ++i) {
    if (!(priors[i] > 0.0) || !std::isfinite(priors[i])) {
      throw BadPrior("prior " + std::to_string(i) + " = " +
                     std::to_string(priors[i]) + " is not strictly positive");
    }
    sum += priors[i];
  }
  if (std::abs(sum - 1.0) > tol.tol_recon) {
    throw BadPrior("priors sum to " + std::to_string(sum) + ", expected 1");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!std::isfinite(alphas[i]) || alphas[i] < 0.0 || alphas[i] > 1.0) {
      throw BadState("alpha " + std::to_string(i) + " = " +
                     std::to_string(alphas[i]) + " outside [0, 1]");
    }
  }
  return StructuredEnsemble{std::move(priors), std::move(alphas)};
}

Ensemble structured_to_ensemble(const StructuredEnsemble& s,
                                const Tolerances& tol) {
  const std::size_t m = s.m();
  const std::size_t dim = m + 1;
  std::vector<ComplexMatrix> states;
  states.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    ComplexMatrix rho(dim);
    rho(0, 0) = s.alphas[i];
    rho(i + 1, i + 1) = 1.0 - s.alphas[i];
    states.push_back(std::move(rho));
  }
  return validate_ensemble(s.priors, std::move(states), tol);
}

}  // namespace qsd
