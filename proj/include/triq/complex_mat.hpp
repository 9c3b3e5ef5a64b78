// Copyright 2026 The triq Authors
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

#pragma once

#include <complex>
#include <vector>

namespace triq {

using Complex = std::complex<double>;

/// Dense row-major complex matrix restricted to the dimensions a qubit,
/// a qubit pair and a qubit triple need (2, 4, 8). Values are immutable
/// in all free-function APIs; every operation returns a fresh matrix.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws std::invalid_argument
  /// unless dim is 2, 4 or 8.
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);

  /// Builds from row-major entries; size must be dim*dim for a supported
  /// dim and every entry must be finite.
  static ComplexMatrix from_rows(int dim, std::vector<Complex> entries);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return m_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return m_[static_cast<size_t>(r) * dim_ + c];
  }

  const std::vector<Complex>& entries() const { return m_; }

 private:
  int dim_;
  std::vector<Complex> m_;
};

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Entrywise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Kronecker product with a's indices most significant. The result
/// dimension dim(a)*dim(b) must itself be a supported dimension.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix over the kept qubits of a 4x4 (two-qubit) or 8x8
/// (three-qubit) operator. Qubit 0 is the most significant index; `keep`
/// must be a nonempty proper subset, and the kept qubits retain their
/// original order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep);

/// Eigen-decomposition by cyclic Jacobi rotations. The input must be
/// Hermitian to 1e-10 (relative to its Frobenius norm); it is symmetrized
/// as (a + adjoint(a))/2 before solving. Sweeps stop once the largest
/// off-diagonal magnitude drops below 1e-14 * ||a||_F, capped at 100.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& a);

/// Hermitian PSD square root s with s*s = a. Eigenvalues in [-1e-10, 0)
/// are clamped to zero; anything below -1e-10 is an input error.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace triq
