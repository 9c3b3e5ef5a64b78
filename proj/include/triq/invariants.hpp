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

#include <array>

#include "triq/states.hpp"

namespace triq {

/// The local-unitary invariants of a three-qubit pure state.
///
/// i0 is the squared norm (degree 2). i1..i3 are the single-qubit purities
/// Tr(rho_X^2) (degree 4). i4 = 3 Tr((rho_A (x) rho_B) rho_AB) - Tr(rho_A^3)
/// - Tr(rho_B^3) (degree 6). i5 is 16x the squared magnitude of the 2x2x2
/// hyperdeterminant of the amplitudes (degree 8). The raw fields are reported
/// for the input as given (possibly unnormalized); the rescaled chart
/// coordinates ip123 = 2(3-I123)/3, ip4 = 9(1-I4)/7, ip5 = I5 always refer to
/// the normalized state.
struct InvariantSet {
  double i0, i1, i2, i3, i4, i5;
  double i123;
  double ip123, ip4, ip5;
};

InvariantSet compute_invariants(const ThreeQubitPure& s);

/// The (ip123, ip4, ip5) chart coordinates of an InvariantSet.
std::array<double, 3> rescaled_coords(const InvariantSet& inv);

/// Concurrence of a pure two-qubit state from its amplitudes,
/// 2|mu00*mu11 - mu01*mu10| (input normalized internally).
double concurrence_pure_coeff(const TwoQubitPure& s);

/// Concurrence of a pure two-qubit state as 2*sqrt(det rho_A).
double concurrence_pure_reduced(const TwoQubitPure& s);

/// Wootters concurrence of a two-qubit density operator,
/// max{l1 - l2 - l3 - l4, 0} with l_i the descending square roots of the
/// eigenvalues of rho * (sy(x)sy) rho^* (sy(x)sy). Evaluated through the
/// Hermitian similarity sqrt(rho) * rho~ * sqrt(rho) so only Hermitian
/// eigensolves are needed.
double concurrence_mixed(const TwoQubitDensity& rho);

}  // namespace triq
