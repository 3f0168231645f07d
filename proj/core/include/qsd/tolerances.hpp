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

#ifndef QSD_TOLERANCES_HPP_
#define QSD_TOLERANCES_HPP_

namespace qsd {

// Numerical thresholds shared across the library. All quantities handled here
// are O(1) (traces, probabilities), so the defaults leave several digits of
// headroom over the 1e-7 .. 1e-9 tolerances used by the test suite.
//
// All fields must be strictly positive. tol_rank is relative: rank cutoffs
// are tol_rank multiplied by the largest eigenvalue magnitude of the operator
// in question; every other field is an absolute threshold.
struct Tolerances {
  // Eigensolver convergence: sweep until the largest off-diagonal magnitude
  // is at most tol_eig * ||A||_F.
  double tol_eig = 1e-14;
  // Positivity slack: eigenvalues in [-tol_psd, 0) are treated as rounding
  // noise (clamped where a positive function of the spectrum is taken).
  double tol_psd = 1e-10;
  // Orthonormality defect allowed in eigenvector matrices.
  double tol_orth = 1e-10;
  // Reconstruction / hermiticity / trace-normalization defect.
  double tol_recon = 1e-9;
  // Relative rank cutoff for support projectors and pseudo-inverses.
  double tol_rank = 1e-10;
};

}  // namespace qsd

#endif  // QSD_TOLERANCES_HPP_
