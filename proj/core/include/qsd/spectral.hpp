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

#ifndef QSD_SPECTRAL_HPP_
#define QSD_SPECTRAL_HPP_

#include <vector>

#include "qsd/complex_matrix.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// Eigendecomposition of a Hermitian matrix A = V diag(values) V^dagger.
//
// Invariants: values sorted non-decreasing; the columns of vectors are the
// corresponding eigenvectors, orthonormal within tol_orth; the decomposition
// reconstructs the input within tol_recon. Ties are left in whatever order
// the (stable) sort produces; every consumer in this library is a function of
// the spectral projectors, never of an individual eigenvector choice.
struct HermitianEigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic Jacobi eigensolver for complex Hermitian matrices: 2x2 unitary
// rotations annihilate off-diagonal pairs in a fixed row-major sweep order
// until the largest off-diagonal magnitude is at most tol_eig * ||A||_F.
// Deterministic: identical input bits give identical output bits.
//
// Throws NotHermitian if ||A - A^dagger||_max > tol_recon, and NoConvergence
// if the sweep budget is exhausted (not observed in practice at these
// dimensions).
HermitianEigensystem hermitian_eig(const ComplexMatrix& a,
                                   const Tolerances& tol = {});

// Positive part A_+ : keeps the spectral components with eigenvalue above the
// relative cutoff tol_rank * max(lambda_max, 0). Result is PSD; for Hermitian
// A, A = positive_part(A) - positive_part(-A) up to the cutoff.
ComplexMatrix positive_part(const ComplexMatrix& a, const Tolerances& tol = {});

// Sum of absolute eigenvalues (trace norm restricted to Hermitian input; the
// general singular-value version is deliberately not provided).
double trace_norm(const ComplexMatrix& a, const Tolerances& tol = {});

// Largest absolute eigenvalue (operator norm of a Hermitian matrix).
double operator_norm(const ComplexMatrix& a, const Tolerances& tol = {});

// Principal square root of a PSD matrix. Eigenvalues in [-tol_psd, 0) are
// rounding noise and clamp to zero; anything below -tol_psd throws NotPsd.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a, const Tolerances& tol = {});

// Fidelity F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)). Accepts any
// PSD operators (sub-normalized traces arise when priors are folded into the
// states); for unit-trace inputs the result is at most 1 + tol_recon.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                const Tolerances& tol = {});

// Inverse square root on the support: eigenvalues above tol_rank * lambda_max
// map to lambda^(-1/2), the rest to zero. Throws NotPsd below -tol_psd and
// ZeroMatrix when no eigenvalue clears the cutoff.
ComplexMatrix pseudo_inverse_sqrt(const ComplexMatrix& a,
                                  const Tolerances& tol = {});

// Orthogonal projector onto the span of eigenvectors with eigenvalue above
// tol_rank * max(lambda_max, 0). The zero matrix maps to the zero matrix.
ComplexMatrix support_projector(const ComplexMatrix& a,
                                const Tolerances& tol = {});

}  // namespace qsd

#endif  // QSD_SPECTRAL_HPP_
