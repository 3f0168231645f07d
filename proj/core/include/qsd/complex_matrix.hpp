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

#ifndef QSD_COMPLEX_MATRIX_HPP_
#define QSD_COMPLEX_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace qsd {

using Complex = std::complex<double>;

// Dense square complex matrix with row-major storage. Target dimensions are
// small (a few, up to ~100), so every operation is a plain loop; no attempt
// is made at blocking or sparsity. Values are immutable in practice: library
// code builds a matrix once and never mutates shared instances, so const
// references are safe to share between threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  // Builds a matrix from dim*dim row-major entries. Rejects size mismatches
  // (DimMismatch) and non-finite scalar components (BadState): a matrix with
  // NaN/Inf entries cannot be constructed through this entry point.
  static ComplexMatrix from_entries(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return a_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return a_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  // Largest entry magnitude (the max norm used by defect checks).
  double max_abs() const;

  // max_ij |a_ij - conj(a_ji)|; zero for exactly Hermitian matrices.
  double hermiticity_defect() const;

  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// A*B - B*A.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A^dagger)/2; removes sub-tolerance asymmetry before spectral work.
ComplexMatrix symmetrized(const ComplexMatrix& a);

}  // namespace qsd

#endif  // QSD_COMPLEX_MATRIX_HPP_
