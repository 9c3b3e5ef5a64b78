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

#include "triq/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace triq {

namespace {

double purity(const ComplexMatrix& rho) { return trace(rho * rho).real(); }

// 2x2x2 hyperdeterminant of the amplitude tensor; i5 = 16 |det|^2.
Complex amplitude_hyperdeterminant(const std::array<Complex, 8>& u) {
  const Complex a000 = u[0], a001 = u[1], a010 = u[2], a011 = u[3];
  const Complex a100 = u[4], a101 = u[5], a110 = u[6], a111 = u[7];
  return a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
         a010 * a010 * a101 * a101 + a011 * a011 * a100 * a100 -
         2.0 * (a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
                a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
                a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001) +
         4.0 * (a000 * a011 * a101 * a110 + a111 * a001 * a010 * a100);
}

}  // namespace

InvariantSet compute_invariants(const ThreeQubitPure& s) {
  const double i0 = s.norm_squared();
  if (std::sqrt(i0) <= 1e-12) {
    throw std::invalid_argument("compute_invariants: zero state");
  }

  const ComplexMatrix rho = density_matrix(s);
  const ComplexMatrix rho_a = partial_trace(rho, {0});
  const ComplexMatrix rho_b = partial_trace(rho, {1});
  const ComplexMatrix rho_c = partial_trace(rho, {2});
  const ComplexMatrix rho_ab = partial_trace(rho, {0, 1});

  InvariantSet inv{};
  inv.i0 = i0;
  inv.i1 = purity(rho_a);
  inv.i2 = purity(rho_b);
  inv.i3 = purity(rho_c);
  inv.i4 = 3.0 * trace(kron(rho_a, rho_b) * rho_ab).real() -
           trace(rho_a * rho_a * rho_a).real() - trace(rho_b * rho_b * rho_b).real();
  inv.i5 = 16.0 * std::norm(amplitude_hyperdeterminant(s.amp));
  inv.i123 = inv.i1 + inv.i2 + inv.i3;

  // chart coordinates are defined for the normalized state; rescale the raw
  // values by the appropriate power of i0 (degrees 4, 6, 8)
  const double i123_n = inv.i123 / (i0 * i0);
  const double i4_n = inv.i4 / (i0 * i0 * i0);
  const double i5_n = inv.i5 / (i0 * i0 * i0 * i0);
  inv.ip123 = 2.0 * (3.0 - i123_n) / 3.0;
  inv.ip4 = 9.0 * (1.0 - i4_n) / 7.0;
  inv.ip5 = i5_n;
  return inv;
}

std::array<double, 3> rescaled_coords(const InvariantSet& inv) {
  return {inv.ip123, inv.ip4, inv.ip5};
}

double concurrence_pure_coeff(const TwoQubitPure& s) {
  const double n2 = s.norm_squared();
  if (std::sqrt(n2) <= 1e-12) {
    throw std::invalid_argument("concurrence_pure_coeff: zero state");
  }
  return 2.0 * std::abs(s.amp[0] * s.amp[3] - s.amp[1] * s.amp[2]) / n2;
}

double concurrence_pure_reduced(const TwoQubitPure& s) {
  const double n2 = s.norm_squared();
  if (std::sqrt(n2) <= 1e-12) {
    throw std::invalid_argument("concurrence_pure_reduced: zero state");
  }
  ComplexMatrix rho = density_matrix(s);
  rho = Complex(1.0 / n2, 0.0) * rho;
  const ComplexMatrix rho_a = partial_trace(rho, {0});
  const double det = (rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)).real();
  return 2.0 * std::sqrt(std::max(det, 0.0));
}

double concurrence_mixed(const TwoQubitDensity& rho) {
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix tilde = yy * conjugate(rho.mat()) * yy;
  const ComplexMatrix root = psd_sqrt(rho.mat());
  // Hermitian PSD and similar to rho * tilde, so its spectrum is the one
  // the concurrence needs
  const ComplexMatrix m = root * tilde * root;
  const auto eig = hermitian_eigen(m);
  // eigenvalues below 1e-13 of the leading one are rounding residue of the
  // triple product; square-rooting them would bias the result by ~1e-8
  const double floor_ = 1e-13 * std::max(eig.eigenvalues[3], 0.0);
  double lambda[4];
  for (int k = 0; k < 4; ++k) {
    lambda[k] = eig.eigenvalues[k] > floor_ ? std::sqrt(eig.eigenvalues[k]) : 0.0;
  }
  return std::max(lambda[3] - lambda[2] - lambda[1] - lambda[0], 0.0);
}

}  // namespace triq
