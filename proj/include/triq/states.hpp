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
#include <cstdint>
#include <string_view>
#include <utility>

#include "triq/complex_mat.hpp"

namespace triq {

enum class Party { A, B, C };

/// Pure three-qubit state. Amplitude order is b = 4i + 2j + k for |ijk>,
/// qubit A most significant. The norm may differ from 1; normalization is
/// always explicit so that homogeneity in the amplitudes stays observable.
struct ThreeQubitPure {
  std::array<Complex, 8> amp{};

  double norm_squared() const;
};

/// Pure two-qubit state, amplitude order 2p + q for |pq>.
struct TwoQubitPure {
  std::array<Complex, 4> amp{};

  double norm_squared() const;
};

Complex inner(const ThreeQubitPure& a, const ThreeQubitPure& b);
Complex inner(const TwoQubitPure& a, const TwoQubitPure& b);

/// Two-qubit density operator. Construction validates Hermiticity (1e-10),
/// unit trace (1e-10) and spectrum >= -1e-10.
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(ComplexMatrix mat);
  static TwoQubitDensity from_pure(const TwoQubitPure& s);

  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Bloch direction of a rank-1 projector: theta in [0, pi], phi in [0, 2pi).
struct MeasurementDirection {
  double theta;
  double phi;

  MeasurementDirection(double theta_, double phi_);
};

/// One 2x2 unitary per qubit, each unitary to 1e-12.
struct LocalUnitaryTriple {
  ComplexMatrix u_a;
  ComplexMatrix u_b;
  ComplexMatrix u_c;

  LocalUnitaryTriple(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c);
  static LocalUnitaryTriple identity();
};

ThreeQubitPure normalize(const ThreeQubitPure& s);

ComplexMatrix density_matrix(const ThreeQubitPure& s);
ComplexMatrix density_matrix(const TwoQubitPure& s);

enum class NamedState { O, B, W, G };

/// |000>, (|000>+|011>)/sqrt2, (|001>+|010>+|100>)/sqrt3, (|000>+|111>)/sqrt2.
ThreeQubitPure named_state(NamedState name);

enum class BoundaryFamily { OG, OB, OW, BW, BG, WG };

/// Which amplitude table boundary_state uses. Two families (OG, BW) are
/// transcribed from a source whose printed form does not normalize (BW) or
/// collapses to a product ray (OG); `corrected` applies the evident fix,
/// `transcribed` reproduces the table verbatim.
enum class BoundaryForm { corrected, transcribed };

std::pair<double, double> boundary_theta_range(BoundaryFamily family);

/// Normalized member of the family at parameter theta (must lie in the
/// family's range). The corrected form is the default.
ThreeQubitPure boundary_state(BoundaryFamily family, double theta,
                              BoundaryForm form = BoundaryForm::corrected);

/// Human-readable note describing the correction applied to this family's
/// amplitude table, or nullptr when the transcribed form is used as-is.
const char* boundary_correction_note(BoundaryFamily family);

/// Uniform on the unit sphere of the 16-real-dimensional amplitude space:
/// 16 i.i.d. standard normals -> 8 complex amplitudes -> normalize.
/// Deterministic function of (seed, index).
ThreeQubitPure haar_random_state(uint64_t seed, uint64_t index);

/// Three independent Haar 2x2 unitaries (Gaussian matrix, Gram-Schmidt,
/// global phase fixed so the first column's first nonzero entry is real
/// positive). Deterministic function of (seed, index).
LocalUnitaryTriple random_local_unitary(uint64_t seed, uint64_t index);

ThreeQubitPure apply_local_unitaries(const ThreeQubitPure& s, const LocalUnitaryTriple& u);

/// perm[q] = destination position of qubit q (positions 0,1,2 = A,B,C).
using QubitPermutation = std::array<int, 3>;

ThreeQubitPure permute_qubits(const ThreeQubitPure& s, const QubitPermutation& perm);

NamedState parse_named_state(std::string_view text);
BoundaryFamily parse_boundary_family(std::string_view text);
Party parse_party(std::string_view text);
std::string_view to_string(BoundaryFamily family);
std::string_view to_string(Party party);

}  // namespace triq
