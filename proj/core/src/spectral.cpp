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

#include "qsd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsd/errors.hpp"

namespace qsd {

namespace {

constexpr int kMaxSweeps = 100;

double max_offdiagonal(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double off = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      off = std::max(off, std::abs(a(p, q)));
  return off;
}

// One Jacobi rotation: a unitary U supported on rows/columns (p, q) chosen so
// that (U^dagger A U)(p, q) = 0. The complex phase of A(p, q) is absorbed
// first, reducing the 2x2 block to the real symmetric case, then the standard
// stable rotation angle is applied. V accumulates the product of rotations.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const std::size_t n = a.dim();
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;

  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * g);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex w = std::conj(apq) / g;  // unit modulus, cancels the phase

  // Column update: A <- A U with U(p,p)=c, U(p,q)=s, U(q,p)=-s w, U(q,q)=c w.
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = c * arp - s * (w * arq);
    a(r, q) = s * arp + c * (w * arq);
  }
  // Row update: A <- U^dagger A.
  for (std::size_t r = 0; r < n; ++r) {
    const Complex apr = a(p, r);
    const Complex aqr = a(q, r);
    a(p, r) = c * apr - s * (std::conj(w) * aqr);
    a(q, r) = s * apr + c * (std::conj(w) * aqr);
  }
  // The rotation annihilates (p, q) exactly in exact arithmetic; pin the
  // rounding residue to zero and keep the working matrix exactly Hermitian.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t r = 0; r < n; ++r) {
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = c * vrp - s * (w * vrq);
    v(r, q) = s * vrp + c * (w * vrq);
  }
}

// Shared scaffold: eigendecompose and rebuild sum_k f(lambda_k) v_k v_k^dag.
template <typename F>
ComplexMatrix spectral_map(const HermitianEigensystem& es, F&& f) {
  const std::size_t n = es.vectors.dim();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(es.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = es.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += fk * vik * std::conj(es.vectors(j, k));
    }
  }
  return r;
}

double max_eigenvalue(const HermitianEigensystem& es) {
  return es.values.back();  // values ascending
}

void require_psd(const HermitianEigensystem& es, const Tolerances& tol,
                 const char* op) {
  if (es.values.front() < -tol.tol_psd) {
    throw NotPsd(std::string(op) + ": eigenvalue " +
                 std::to_string(es.values.front()) + " below -tol_psd");
  }
}

}  // namespace

HermitianEigensystem hermitian_eig(const ComplexMatrix& a,
                                   const Tolerances& tol) {
  const std::size_t n = a.dim();
  if (n == 0) throw DimMismatch("hermitian_eig: dimension must be >= 1");
  const double defect = a.hermiticity_defect();
  if (defect > tol.tol_recon) {
    throw NotHermitian("hermitian_eig: ||A - A^dagger||_max = " +
                       std::to_string(defect));
  }

  ComplexMatrix work = symmetrized(a);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double fro = work.frobenius_norm();
  const double threshold = tol.tol_eig * fro;

  bool converged = (fro == 0.0) || (n == 1);
  for (int sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
    if (max_offdiagonal(work) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, v, p, q);
  }
  if (!converged && max_offdiagonal(work) > threshold) {
    throw NoConvergence("hermitian_eig: off-diagonal mass " +
                        std::to_string(max_offdiagonal(work)) +
                        " above threshold after " +
                        std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return work(x, x).real() < work(y, y).real();
  });

  HermitianEigensystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

ComplexMatrix positive_part(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  const double cutoff = tol.tol_rank * std::max(max_eigenvalue(es), 0.0);
  return spectral_map(es,
                      [&](double lam) { return lam > cutoff ? lam : 0.0; });
}

double trace_norm(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  double s = 0.0;
  for (double lam : es.values) s += std::abs(lam);
  return s;
}

double operator_norm(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  double m = 0.0;
  for (double lam : es.values) m = std::max(m, std::abs(lam));
  return m;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  require_psd(es, tol, "matrix_sqrt_psd");
  return spectral_map(
      es, [](double lam) { return lam > 0.0 ? std::sqrt(lam) : 0.0; });
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                const Tolerances& tol) {
  if (rho.dim() != sigma.dim())
    throw DimMismatch("fidelity: operand dimensions differ");
  // matrix_sqrt_psd enforces positivity of rho; sigma is checked directly so
  // that a negative direction cannot hide inside the product.
  const HermitianEigensystem es_sigma = hermitian_eig(sigma, tol);
  require_psd(es_sigma, tol, "fidelity");
  const ComplexMatrix root = matrix_sqrt_psd(rho, tol);
  // root * sigma * root is Hermitian PSD in exact arithmetic; symmetrization
  // inside hermitian_eig absorbs the product rounding.
  const ComplexMatrix inner = root * sigma * root;
  const HermitianEigensystem es = hermitian_eig(inner, tol);
  require_psd(es, tol, "fidelity");
  double f = 0.0;
  for (double lam : es.values) f += std::sqrt(std::max(lam, 0.0));
  return f;
}

ComplexMatrix pseudo_inverse_sqrt(const ComplexMatrix& a,
                                  const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  require_psd(es, tol, "pseudo_inverse_sqrt");
  const double lam_max = max_eigenvalue(es);
  if (lam_max <= 0.0) {
    throw ZeroMatrix("pseudo_inverse_sqrt: no eigenvalue above the cutoff");
  }
  const double cutoff = tol.tol_rank * lam_max;
  bool any = false;
  for (double lam : es.values) any = any || lam > cutoff;
  if (!any) {
    throw ZeroMatrix("pseudo_inverse_sqrt: no eigenvalue above the cutoff");
  }
  return spectral_map(es, [&](double lam) {
    return lam > cutoff ? 1.0 / std::sqrt(lam) : 0.0;
  });
}

ComplexMatrix support_projector(const ComplexMatrix& a, const Tolerances& tol) {
  const HermitianEigensystem es = hermitian_eig(a, tol);
  require_psd(es, tol, "support_projector");
  const double cutoff = tol.tol_rank * std::max(max_eigenvalue(es), 0.0);
  return spectral_map(es,
                      [&](double lam) { return lam > cutoff ? 1.0 : 0.0; });
}

}  // namespace qsd
