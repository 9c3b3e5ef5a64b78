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

#include "triq/complex_mat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace triq {

namespace {

bool supported_dim(int dim) { return dim == 2 || dim == 4 || dim == 8; }

int qubit_count(int dim) { return dim == 2 ? 1 : (dim == 4 ? 2 : 3); }

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (!supported_dim(dim)) {
    throw std::invalid_argument("ComplexMatrix: dimension must be 2, 4 or 8");
  }
  m_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix r(dim);
  for (int i = 0; i < dim; ++i) r(i, i) = 1.0;
  return r;
}

ComplexMatrix ComplexMatrix::from_rows(int dim, std::vector<Complex> entries) {
  ComplexMatrix r(dim);
  if (entries.size() != r.m_.size()) {
    throw std::invalid_argument("ComplexMatrix::from_rows: wrong entry count");
  }
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix::from_rows: non-finite entry");
    }
  }
  r.m_ = std::move(entries);
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matmul: dimension mismatch");
  }
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator+: dimension mismatch");
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator-: dimension mismatch");
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

Complex trace(const ComplexMatrix& a) {
  Complex t(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  if (!supported_dim(na * nb)) {
    throw std::invalid_argument("kron: resulting dimension unsupported");
  }
  ComplexMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep) {
  const int dim = rho.dim();
  if (dim == 2) {
    throw std::invalid_argument("partial_trace: input must be 4x4 or 8x8");
  }
  const int nq = qubit_count(dim);
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || static_cast<int>(kept.size()) >= nq ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 0 || kept.back() >= nq) {
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  }
  std::vector<int> traced;
  for (int q = 0; q < nq; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  // qubit q occupies bit (nq-1-q): qubit 0 is the most significant index
  auto scatter = [nq](int bits, const std::vector<int>& positions) {
    int out = 0;
    for (size_t s = 0; s < positions.size(); ++s) {
      const int bit = (bits >> (positions.size() - 1 - s)) & 1;
      out |= bit << (nq - 1 - positions[s]);
    }
    return out;
  };
  const int out_dim = 1 << kept.size();
  const int traced_dim = 1 << traced.size();
  ComplexMatrix r(out_dim);
  for (int i = 0; i < out_dim; ++i) {
    for (int j = 0; j < out_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (int t = 0; t < traced_dim; ++t) {
        const int row = scatter(i, kept) | scatter(t, traced);
        const int col = scatter(j, kept) | scatter(t, traced);
        acc += rho(row, col);
      }
      r(i, j) = acc;
    }
  }
  return r;
}

HermitianEigenResult hermitian_eigen(const ComplexMatrix& a) {
  const int n = a.dim();
  const double scale = std::max(1.0, frobenius_norm(a));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > 1e-10 * scale) {
        throw std::invalid_argument("hermitian_eigen: input not Hermitian");
      }
    }
  }
  ComplexMatrix m = Complex(0.5, 0.0) * (a + adjoint(a));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-14 * frobenius_norm(m);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex beta = m(p, q);
        const double ab = std::abs(beta);
        if (ab == 0.0) continue;
        const Complex phase = beta / ab;  // e^{i phi}
        const double alpha = m(p, p).real();
        const double gamma = m(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * ab);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex ep = std::conj(phase);  // e^{-i phi}

        // m <- J^dag m J with J(p,p)=c, J(p,q)=s, J(q,p)=-s*ep, J(q,q)=c*ep
        for (int k = 0; k < n; ++k) {
          const Complex mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * ep * mkq;
          m(k, q) = s * mkp + c * ep * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * phase * mqk;
          m(q, k) = s * mpk + c * phase * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * ep * vkq;
          v(k, q) = s * vkp + c * ep * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&m](int i, int j) { return m(i, i).real() < m(j, j).real(); });

  HermitianEigenResult res{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    res.eigenvalues[k] = m(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) res.eigenvectors(r, k) = v(r, order[k]);
  }
  return res;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  HermitianEigenResult eig = hermitian_eigen(a);
  const int n = a.dim();
  std::vector<double> roots(n);
  for (int k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda < -1e-10) {
      throw std::invalid_argument("psd_sqrt: input not positive semidefinite");
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        acc += eig.eigenvectors(i, k) * roots[k] * std::conj(eig.eigenvectors(j, k));
      }
      r(i, j) = acc;
    }
  }
  // rounding can leave a sub-1e-15 anti-Hermitian residue; squash it
  return Complex(0.5, 0.0) * (r + adjoint(r));
}

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows(2, {1.0, 0.0, 0.0, -1.0});
}

}  // namespace triq
