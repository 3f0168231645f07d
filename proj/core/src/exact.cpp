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

#include "qsd/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "qsd/errors.hpp"
#include "qsd/spectral.hpp"

namespace qsd {
namespace {

// Structural agreement thresholds. These gate whether a *method applies*
// (commutation, diagonality, support orthogonality), not whether arithmetic
// succeeded, so they sit well above the eigensolver tolerances.
constexpr double kCommuteTol = 1e-8;
constexpr double kOrthTol = 1e-8;
constexpr double kMinTieTol = 1e-9;

ComplexMatrix weighted_state(const Ensemble& e, std::size_t i) {
  ComplexMatrix w = e.states[i];
  w *= Complex(e.priors[i], 0.0);
  return w;
}

double smallest_eigenvalue(const ComplexMatrix& h, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(h, tol);
  return es.values.front();  // ascending order
}

void require_matching(const Ensemble& e, const Povm& povm) {
  if (povm.elements.size() != e.m()) {
    throw WrongArity("povm has " + std::to_string(povm.elements.size()) +
                     " elements for " + std::to_string(e.m()) + " states");
  }
  if (povm.dim() != e.dim()) {
    throw DimMismatch("povm dimension " + std::to_string(povm.dim()) +
                      " does not match ensemble dimension " +
                      std::to_string(e.dim()));
  }
}

Povm make_ambiguous_povm(std::vector<ComplexMatrix> elements,
                         const Tolerances& tol) {
  return validate_povm(Povm::Kind::ambiguous, std::move(elements), tol);
}

}  // namespace

Certificate certify_optimal(const Ensemble& e, const Povm& povm,
                            const Tolerances& tol) {
  require_matching(e, povm);
  const std::size_t m = e.m();
  const std::size_t dim = e.dim();

  ComplexMatrix r(dim);
  for (std::size_t i = 0; i < m; ++i) {
    r += weighted_state(e, i) * povm.elements[i];
  }

  Certificate cert;
  cert.hermiticity_defect = r.hermiticity_defect();
  const ComplexMatrix h = symmetrized(r);
  cert.margins.reserve(m);
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexMatrix gap = h - weighted_state(e, j);
    const double margin = smallest_eigenvalue(gap, tol);
    cert.margins.push_back(margin);
    min_margin = std::min(min_margin, margin);
  }
  cert.min_margin = min_margin;
  cert.r_matrix = std::move(r);
  cert.pass = cert.hermiticity_defect <= tol.tol_recon &&
              cert.min_margin >= -tol.tol_psd;
  return cert;
}

ExactResult solve_two_state(const Ensemble& e, const Tolerances& tol) {
  if (e.m() != 2) {
    throw WrongArity("two-state solver got " + std::to_string(e.m()) +
                     " states");
  }
  const std::size_t dim = e.dim();
  const ComplexMatrix delta = weighted_state(e, 1) - weighted_state(e, 0);
  const ComplexMatrix plus = positive_part(delta, tol);
  const ComplexMatrix e2 = support_projector(plus, tol);
  const ComplexMatrix e1 = ComplexMatrix::identity(dim) - e2;

  ExactResult result;
  result.method = ExactMethod::two_state_helstrom;
  result.optimal_povm = make_ambiguous_povm({e1, e2}, tol);
  result.certificate = certify_optimal(e, result.optimal_povm, tol);
  if (!result.certificate.pass) {
    throw CertificateFailed(
        "two-state certificate failed: defect " +
        std::to_string(result.certificate.hermiticity_defect) +
        ", min margin " + std::to_string(result.certificate.min_margin));
  }
  double success = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    success +=
        (weighted_state(e, i) * result.optimal_povm.elements[i]).trace().real();
  }
  result.success = success;
  result.qe = 1.0 - success;
  return result;
}

ExactResult solve_commuting(const Ensemble& e, const Tolerances& tol) {
  const std::size_t m = e.m();
  const std::size_t dim = e.dim();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double norm =
          operator_norm(symmetrized(commutator(e.states[i], e.states[j]) *
                                    Complex(0.0, 1.0)),
                        tol);
      if (norm > kCommuteTol) {
        throw NotCommuting("states " + std::to_string(i) + " and " +
                           std::to_string(j) + " do not commute (norm " +
                           std::to_string(norm) +
                           "); general optimal discrimination needs an SDP "
                           "solver, which this library does not provide");
      }
    }
  }

  // A single generic positive combination separates shared eigenspaces
  // whenever the states distinguish them at all; the coefficients only need
  // to be distinct, not special.
  ComplexMatrix probe(dim);
  for (std::size_t i = 0; i < m; ++i) {
    const double coeff =
        1.0 + static_cast<double>(i + 1) / static_cast<double>(m + 1);
    ComplexMatrix term = weighted_state(e, i);
    term *= Complex(coeff, 0.0);
    probe += term;
  }
  const HermitianEigensystem basis = hermitian_eig(probe, tol);

  // rot[i] = V^dagger rho_i V must be diagonal for the classical reduction
  // to be exact.
  const ComplexMatrix vdag = basis.vectors.adjoint();
  std::vector<std::vector<double>> diag(m, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    const ComplexMatrix rot = vdag * e.states[i] * basis.vectors;
    double off = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (r != c) off = std::max(off, std::abs(rot(r, c)));
      }
      diag[i][r] = rot(r, r).real();
    }
    if (off > kCommuteTol) {
      throw NotCommuting("state " + std::to_string(i) +
                         " is not diagonal in the common basis (max off "
                         "diagonal " +
                         std::to_string(off) + ")");
    }
  }

  // Classical maximum likelihood per basis vector, smallest index on ties.
  std::vector<std::size_t> assign(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double score = e.priors[i] * diag[i][k];
      if (score > best) {
        best = score;
        best_i = i;
      }
    }
    assign[k] = best_i;
  }

  std::vector<ComplexMatrix> elements(m, ComplexMatrix(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    ComplexMatrix& target = elements[assign[k]];
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex vr = basis.vectors(r, k);
      for (std::size_t c = 0; c < dim; ++c) {
        target(r, c) += vr * std::conj(basis.vectors(c, k));
      }
    }
  }

  ExactResult result;
  result.method = ExactMethod::commuting_classical;
  result.optimal_povm = make_ambiguous_povm(std::move(elements), tol);
  result.certificate = certify_optimal(e, result.optimal_povm, tol);
  if (!result.certificate.pass) {
    throw CertificateFailed(
        "commuting-ensemble certificate failed: defect " +
        std::to_string(result.certificate.hermiticity_defect) +
        ", min margin " + std::to_string(result.certificate.min_margin));
  }
  double success = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    success += e.priors[assign[k]] * diag[assign[k]][k];
  }
  result.success = success;
  result.qe = 1.0 - success;
  return result;
}

AttainabilityReport check_l4_attainability(const Ensemble& e,
                                           const Tolerances& tol) {
  const std::size_t m = e.m();
  const std::size_t dim = e.dim();

  BoundReport bounds = all_bounds(e, tol);
  AttainabilityReport report;
  report.l4 = bounds.values[static_cast<std::size_t>(BoundId::l4)];
  report.l4_min_index = bounds.l4_min_index;
  report.per_k.resize(m);

  const double min_value =
      *std::min_element(bounds.l4_per_k.begin(), bounds.l4_per_k.end());

  for (std::size_t k = 0; k < m; ++k) {
    AttainabilityPerK& pk = report.per_k[k];
    pk.value = bounds.l4_per_k[k];
    pk.attains_min = pk.value <= min_value + kMinTieTol;

    std::vector<ComplexMatrix> projectors;
    projectors.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      const ComplexMatrix gap = weighted_state(e, j) - weighted_state(e, k);
      projectors.push_back(support_projector(positive_part(gap, tol), tol));
    }

    // ||P Q|| = sqrt(lambda_max(Q P Q)) for projectors P, Q; both orderings
    // give the same value so one suffices.
    double max_overlap = 0.0;
    for (std::size_t a = 0; a < projectors.size(); ++a) {
      for (std::size_t b = a + 1; b < projectors.size(); ++b) {
        const ComplexMatrix prod =
            projectors[b] * projectors[a] * projectors[b];
        const double top =
            std::max(hermitian_eig(symmetrized(prod), tol).values.back(), 0.0);
        max_overlap = std::max(max_overlap, std::sqrt(top));
      }
    }
    pk.max_overlap = max_overlap;
    pk.orthogonal = max_overlap <= kOrthTol;

    if (pk.attains_min && pk.orthogonal && !report.attained) {
      report.attained = true;
      report.attained_k = k;

      std::vector<ComplexMatrix> elements(m, ComplexMatrix(dim));
      ComplexMatrix rest(dim);
      std::size_t idx = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        elements[j] = projectors[idx++];
        rest += elements[j];
      }
      elements[k] = ComplexMatrix::identity(dim) - rest;
      report.povm = make_ambiguous_povm(std::move(elements), tol);
      report.certificate = certify_optimal(e, *report.povm, tol);
      double success = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        success +=
            (weighted_state(e, j) * report.povm->elements[j]).trace().real();
      }
      report.qe = 1.0 - success;
    }
  }
  return report;
}

StructuredSolution solve_structured(const StructuredEnsemble& s,
                                    const Tolerances& tol) {
  const std::size_t m = s.m();
  const std::size_t dim = m + 1;
  const Ensemble e = structured_to_ensemble(s, tol);

  StructuredSolution sol;
  std::vector<double> mass(m, 0.0);
  double qu = 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mass[i] = s.priors[i] * s.alphas[i];
    qu += mass[i];
    best = std::max(best, mass[i]);
  }
  // Smallest exact argmax: handing |0> to a merely near-maximal hypothesis
  // would forfeit the gap and the certificate would (rightly) flag it.
  std::size_t best_i = 0;
  while (best_i + 1 < m && mass[best_i] != best) ++best_i;
  sol.qu = qu;
  sol.max_index = best_i;
  sol.qe = std::max(0.0, qu - best);

  sol.degenerate_ratio = sol.qe == 0.0;
  if (sol.qe > 0.0) {
    sol.ratio = sol.qu / sol.qe;
    sol.ratio_finite = true;
  } else if (sol.qu > 0.0) {
    sol.ratio = std::numeric_limits<double>::infinity();
    sol.ratio_finite = false;
  } else {
    sol.ratio = 0.0;
    sol.ratio_finite = true;
  }
  sol.twice_qe_holds = sol.qu >= 2.0 * sol.qe - 1e-12;

  // Minimum-error measurement: detect |i+1> for each hypothesis and hand the
  // shared |0> direction to the best one.
  {
    std::vector<ComplexMatrix> elements(m, ComplexMatrix(dim));
    for (std::size_t i = 0; i < m; ++i) {
      elements[i](i + 1, i + 1) = Complex(1.0, 0.0);
    }
    elements[best_i](0, 0) = Complex(1.0, 0.0);
    sol.ambiguous_povm = make_ambiguous_povm(std::move(elements), tol);
  }
  sol.certificate = certify_optimal(e, sol.ambiguous_povm, tol);
  if (!sol.certificate.pass) {
    throw CertificateFailed(
        "structured-family certificate failed: defect " +
        std::to_string(sol.certificate.hermiticity_defect) + ", min margin " +
        std::to_string(sol.certificate.min_margin));
  }

  // Unambiguous measurement: element 0 absorbs |0> (inconclusive), element
  // i+1 detects |i+1> and can only fire for hypothesis i.
  {
    std::vector<ComplexMatrix> elements(m + 1, ComplexMatrix(dim));
    elements[0](0, 0) = Complex(1.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      elements[i + 1](i + 1, i + 1) = Complex(1.0, 0.0);
    }
    sol.unambiguous_povm =
        validate_povm(Povm::Kind::unambiguous, std::move(elements), tol);
  }
  sol.unambiguous_failure = unambiguous_feasibility(e, sol.unambiguous_povm,
                                                    tol);
  return sol;
}

double unambiguous_feasibility(const Ensemble& e, const Povm& povm,
                               const Tolerances& tol) {
  if (povm.kind != Povm::Kind::unambiguous) {
    throw NotUnambiguous("measurement is not marked unambiguous");
  }
  if (povm.elements.size() != e.m() + 1) {
    throw WrongArity("unambiguous measurement has " +
                     std::to_string(povm.elements.size()) + " elements for " +
                     std::to_string(e.m()) + " states (want m + 1)");
  }
  if (povm.dim() != e.dim()) {
    throw DimMismatch("povm dimension " + std::to_string(povm.dim()) +
                      " does not match ensemble dimension " +
                      std::to_string(e.dim()));
  }

  double worst = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  for (std::size_t i = 1; i < povm.elements.size(); ++i) {
    for (std::size_t j = 0; j < e.m(); ++j) {
      if (j == i - 1) continue;
      const double cross = (povm.elements[i] * e.states[j]).trace().real();
      if (cross > worst) {
        worst = cross;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst > 1e-9) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "element %zu fires on state %zu with probability %.3e",
                  worst_i, worst_j, worst);
    throw NotUnambiguous(buf);
  }

  double failure = 0.0;
  for (std::size_t j = 0; j < e.m(); ++j) {
    failure +=
        e.priors[j] * (povm.elements[0] * e.states[j]).trace().real();
  }
  return failure;
}

}  // namespace qsd
