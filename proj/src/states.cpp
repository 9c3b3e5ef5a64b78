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

#include "triq/states.hpp"

#include <cmath>
#include <stdexcept>

#include "triq/rng.hpp"

namespace triq {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm_squared(const Complex* a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::norm(a[i]);
  return s;
}

void check_finite(const Complex* a, int n, const char* what) {
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(a[i].real()) || !std::isfinite(a[i].imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
    }
  }
}

void check_unitary(const ComplexMatrix& u, const char* what) {
  if (u.dim() != 2) throw std::invalid_argument(std::string(what) + ": factor must be 2x2");
  const ComplexMatrix g = adjoint(u) * u;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(g(i, j) - want) > 1e-12) {
        throw std::invalid_argument(std::string(what) + ": factor not unitary");
      }
    }
  }
}

// Haar 2x2 unitary: Ginibre draw, Gram-Schmidt columns, then a global phase
// making the first column's first nonzero entry real positive.
ComplexMatrix haar_u2(CounterRng& rng) {
  for (;;) {
    Complex g[2][2];
    for (auto& row : g)
      for (auto& z : row) z = Complex(rng.next_normal(), rng.next_normal());

    const double n0 = std::sqrt(std::norm(g[0][0]) + std::norm(g[1][0]));
    if (n0 < 1e-6) continue;
    Complex q0[2] = {g[0][0] / n0, g[1][0] / n0};
    const Complex proj = std::conj(q0[0]) * g[0][1] + std::conj(q0[1]) * g[1][1];
    Complex q1[2] = {g[0][1] - proj * q0[0], g[1][1] - proj * q0[1]};
    const double n1 = std::sqrt(std::norm(q1[0]) + std::norm(q1[1]));
    if (n1 < 1e-6) continue;
    q1[0] /= n1;
    q1[1] /= n1;

    const Complex lead = (std::abs(q0[0]) > 0.0) ? q0[0] : q0[1];
    const Complex phase = std::conj(lead) / std::abs(lead);
    return ComplexMatrix::from_rows(
        2, {phase * q0[0], phase * q1[0], phase * q0[1], phase * q1[1]});
  }
}

}  // namespace

double ThreeQubitPure::norm_squared() const { return triq::norm_squared(amp.data(), 8); }
double TwoQubitPure::norm_squared() const { return triq::norm_squared(amp.data(), 4); }

Complex inner(const ThreeQubitPure& a, const ThreeQubitPure& b) {
  Complex s(0.0, 0.0);
  for (int i = 0; i < 8; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

Complex inner(const TwoQubitPure& a, const TwoQubitPure& b) {
  Complex s(0.0, 0.0);
  for (int i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

TwoQubitDensity::TwoQubitDensity(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.dim() != 4) throw std::invalid_argument("TwoQubitDensity: matrix must be 4x4");
  check_finite(mat_.entries().data(), 16, "TwoQubitDensity");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (std::abs(mat_(i, j) - std::conj(mat_(j, i))) > 1e-10) {
        throw std::invalid_argument("TwoQubitDensity: not Hermitian");
      }
    }
  }
  if (std::abs(trace(mat_) - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("TwoQubitDensity: trace must be 1");
  }
  for (double lambda : hermitian_eigen(mat_).eigenvalues) {
    if (lambda < -1e-10) {
      throw std::invalid_argument("TwoQubitDensity: negative eigenvalue");
    }
  }
}

TwoQubitDensity TwoQubitDensity::from_pure(const TwoQubitPure& s) {
  const double n2 = s.norm_squared();
  if (std::sqrt(n2) <= 1e-12) {
    throw std::invalid_argument("TwoQubitDensity::from_pure: zero state");
  }
  ComplexMatrix rho(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = s.amp[i] * std::conj(s.amp[j]) / n2;
  return TwoQubitDensity(std::move(rho));
}

MeasurementDirection::MeasurementDirection(double theta_, double phi_)
    : theta(theta_), phi(phi_) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("MeasurementDirection: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::invalid_argument("MeasurementDirection: phi must lie in [0, 2*pi)");
  }
}

LocalUnitaryTriple::LocalUnitaryTriple(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c)
    : u_a(std::move(a)), u_b(std::move(b)), u_c(std::move(c)) {
  check_unitary(u_a, "LocalUnitaryTriple");
  check_unitary(u_b, "LocalUnitaryTriple");
  check_unitary(u_c, "LocalUnitaryTriple");
}

LocalUnitaryTriple LocalUnitaryTriple::identity() {
  return LocalUnitaryTriple(ComplexMatrix::identity(2), ComplexMatrix::identity(2),
                            ComplexMatrix::identity(2));
}

ThreeQubitPure normalize(const ThreeQubitPure& s) {
  const double n = std::sqrt(s.norm_squared());
  if (n <= 1e-12) throw std::invalid_argument("normalize: zero state");
  ThreeQubitPure r;
  for (int i = 0; i < 8; ++i) r.amp[i] = s.amp[i] / n;
  return r;
}

ComplexMatrix density_matrix(const ThreeQubitPure& s) {
  ComplexMatrix rho(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rho(i, j) = s.amp[i] * std::conj(s.amp[j]);
  return rho;
}

ComplexMatrix density_matrix(const TwoQubitPure& s) {
  ComplexMatrix rho(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = s.amp[i] * std::conj(s.amp[j]);
  return rho;
}

ThreeQubitPure named_state(NamedState name) {
  const double s2 = std::sqrt(0.5);
  const double s3 = 1.0 / std::sqrt(3.0);
  ThreeQubitPure r;
  switch (name) {
    case NamedState::O:
      r.amp[0] = 1.0;
      return r;
    case NamedState::B:
      r.amp[0] = s2;
      r.amp[3] = s2;
      return r;
    case NamedState::W:
      r.amp[1] = s3;
      r.amp[2] = s3;
      r.amp[4] = s3;
      return r;
    case NamedState::G:
      r.amp[0] = s2;
      r.amp[7] = s2;
      return r;
  }
  throw std::invalid_argument("named_state: unknown name");
}

std::pair<double, double> boundary_theta_range(BoundaryFamily family) {
  switch (family) {
    case BoundaryFamily::OG:
    case BoundaryFamily::OB:
    case BoundaryFamily::OW:
      return {0.0, kPi / 2.0};
    case BoundaryFamily::BW:
      return {0.0, kPi};
    case BoundaryFamily::BG:
      return {std::atan(std::sqrt(2.0)), kPi / 2.0};
    case BoundaryFamily::WG:
      return {2.0 * kPi / 3.0, 5.0 * kPi / 6.0};
  }
  throw std::invalid_argument("boundary_theta_range: unknown family");
}

ThreeQubitPure boundary_state(BoundaryFamily family, double theta, BoundaryForm form) {
  const auto [lo, hi] = boundary_theta_range(family);
  if (!(theta >= lo - 1e-12 && theta <= hi + 1e-12)) {
    throw std::invalid_argument("boundary_state: theta outside the family's range");
  }
  theta = std::min(std::max(theta, lo), hi);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double r2 = std::sqrt(0.5);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const bool corrected = form == BoundaryForm::corrected;

  ThreeQubitPure st;
  switch (family) {
    case BoundaryFamily::OG:
      // transcribed second term reads sin(theta)|000>; corrected to |111>
      st.amp[0] = c;
      st.amp[corrected ? 7 : 0] += s;
      break;
    case BoundaryFamily::OB:
      st.amp[0] = c;
      st.amp[3] = s;
      break;
    case BoundaryFamily::OW:
      st.amp[3] = c * r3;
      st.amp[5] = c * r3;
      st.amp[6] = c * r3;
      st.amp[7] = s;
      break;
    case BoundaryFamily::BW: {
      // transcribed second coefficient reads cos(theta)/sqrt2, which cannot
      // normalize for all theta; corrected to sin(theta)/sqrt2
      const double second = (corrected ? s : c) * r2;
      st.amp[0] = c * r2;
      st.amp[7] = c * r2;
      st.amp[4] = second;
      st.amp[3] = second;
      break;
    }
    case BoundaryFamily::BG:
      st.amp[5] = s * r2;
      st.amp[0] = s * r2;
      st.amp[6] = c;
      break;
    case BoundaryFamily::WG:
      for (int b : {1, 2, 4, 3, 5, 6}) st.amp[b] = s * r6;
      st.amp[0] = c * r2;
      st.amp[7] += c * r2;
      break;
  }
  return normalize(st);
}

const char* boundary_correction_note(BoundaryFamily family) {
  switch (family) {
    case BoundaryFamily::OG:
      return "OG: second ket corrected from |000> to |111> (generalized GHZ ray)";
    case BoundaryFamily::BW:
      return "BW: second coefficient corrected from cos(theta)/sqrt2 to sin(theta)/sqrt2";
    default:
      return nullptr;
  }
}

ThreeQubitPure haar_random_state(uint64_t seed, uint64_t index) {
  CounterRng rng(seed, index, /*tag=*/0x5441544553ULL);
  ThreeQubitPure s;
  for (int i = 0; i < 8; ++i) s.amp[i] = Complex(rng.next_normal(), rng.next_normal());
  return normalize(s);
}

LocalUnitaryTriple random_local_unitary(uint64_t seed, uint64_t index) {
  CounterRng rng(seed, index, /*tag=*/0x55304C55ULL);
  ComplexMatrix a = haar_u2(rng);
  ComplexMatrix b = haar_u2(rng);
  ComplexMatrix c = haar_u2(rng);
  return LocalUnitaryTriple(std::move(a), std::move(b), std::move(c));
}

ThreeQubitPure apply_local_unitaries(const ThreeQubitPure& s, const LocalUnitaryTriple& u) {
  ThreeQubitPure r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        Complex acc(0.0, 0.0);
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            for (int t = 0; t < 2; ++t)
              acc += u.u_a(i, p) * u.u_b(j, q) * u.u_c(k, t) * s.amp[4 * p + 2 * q + t];
        r.amp[4 * i + 2 * j + k] = acc;
      }
    }
  }
  return r;
}

ThreeQubitPure permute_qubits(const ThreeQubitPure& s, const QubitPermutation& perm) {
  bool seen[3] = {false, false, false};
  for (int p : perm) {
    if (p < 0 || p > 2 || seen[p]) {
      throw std::invalid_argument("permute_qubits: not a permutation of {0,1,2}");
    }
    seen[p] = true;
  }
  ThreeQubitPure r;
  for (int b = 0; b < 8; ++b) {
    int dest = 0;
    for (int q = 0; q < 3; ++q) {
      const int bit = (b >> (2 - q)) & 1;
      dest |= bit << (2 - perm[q]);
    }
    r.amp[dest] = s.amp[b];
  }
  return r;
}

NamedState parse_named_state(std::string_view text) {
  if (text == "O") return NamedState::O;
  if (text == "B") return NamedState::B;
  if (text == "W") return NamedState::W;
  if (text == "G") return NamedState::G;
  throw std::invalid_argument("unknown named state (expected O, B, W or G)");
}

BoundaryFamily parse_boundary_family(std::string_view text) {
  if (text == "OG") return BoundaryFamily::OG;
  if (text == "OB") return BoundaryFamily::OB;
  if (text == "OW") return BoundaryFamily::OW;
  if (text == "BW") return BoundaryFamily::BW;
  if (text == "BG") return BoundaryFamily::BG;
  if (text == "WG") return BoundaryFamily::WG;
  throw std::invalid_argument("unknown boundary family (expected OG, OB, OW, BW, BG or WG)");
}

Party parse_party(std::string_view text) {
  if (text == "A") return Party::A;
  if (text == "B") return Party::B;
  if (text == "C") return Party::C;
  throw std::invalid_argument("unknown party (expected A, B or C)");
}

std::string_view to_string(BoundaryFamily family) {
  switch (family) {
    case BoundaryFamily::OG: return "OG";
    case BoundaryFamily::OB: return "OB";
    case BoundaryFamily::OW: return "OW";
    case BoundaryFamily::BW: return "BW";
    case BoundaryFamily::BG: return "BG";
    case BoundaryFamily::WG: return "WG";
  }
  return "?";
}

std::string_view to_string(Party party) {
  switch (party) {
    case Party::A: return "A";
    case Party::B: return "B";
    case Party::C: return "C";
  }
  return "?";
}

}  // namespace triq
