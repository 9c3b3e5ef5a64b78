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

// Shared test helpers. Tolerance policy: unless a check says otherwise,
// absolute tolerances are quoted at normalized-state scale (amplitude norm 1,
// invariants O(1)); homogeneity checks use relative tolerances.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "triq/complex_mat.hpp"
#include "triq/rng.hpp"
#include "triq/states.hpp"

namespace triq_test {

using triq::Complex;
using triq::ComplexMatrix;

constexpr double kPi = 3.14159265358979323846;

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline ComplexMatrix random_matrix(int dim, uint64_t seed, uint64_t index) {
  triq::CounterRng rng(seed, index, /*tag=*/0x7465737473ULL);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(rng.next_normal(), rng.next_normal());
  return m;
}

inline ComplexMatrix random_hermitian(int dim, uint64_t seed, uint64_t index) {
  const ComplexMatrix m = random_matrix(dim, seed, index);
  return Complex(0.5, 0.0) * (m + triq::adjoint(m));
}

inline ComplexMatrix random_psd(int dim, uint64_t seed, uint64_t index) {
  const ComplexMatrix m = random_matrix(dim, seed, index);
  return triq::adjoint(m) * m;
}

// Independent oracle for reduced states of a pure three-qubit state:
// plain summation over the traced basis indices, written against the
// amplitude tensor rather than the density matrix.
inline ComplexMatrix reduced_density_oracle(const triq::ThreeQubitPure& s,
                                            const std::vector<int>& keep) {
  const int out_dim = 1 << keep.size();
  ComplexMatrix out(out_dim);
  auto bit = [](int b, int qubit) { return (b >> (2 - qubit)) & 1; };
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      bool traced_match = true;
      for (int q = 0; q < 3; ++q) {
        bool kept = false;
        for (int kq : keep) kept = kept || (kq == q);
        if (!kept && bit(r, q) != bit(c, q)) traced_match = false;
      }
      if (!traced_match) continue;
      int ri = 0, ci = 0;
      for (size_t slot = 0; slot < keep.size(); ++slot) {
        ri = (ri << 1) | bit(r, keep[slot]);
        ci = (ci << 1) | bit(c, keep[slot]);
      }
      out(ri, ci) += s.amp[r] * std::conj(s.amp[c]);
    }
  }
  return out;
}

inline double overlap_magnitude(const triq::ThreeQubitPure& a, const triq::ThreeQubitPure& b) {
  return std::abs(triq::inner(a, b)) /
         std::sqrt(a.norm_squared() * b.norm_squared());
}

}  // namespace triq_test
