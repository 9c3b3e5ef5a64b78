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
#include <optional>
#include <string_view>
#include <vector>

#include "triq/invariants.hpp"
#include "triq/states.hpp"

namespace triq {

/// The unmeasured qubit pair; the remaining party is the one measured.
enum class QubitPair { AB, AC, BC };

Party measured_party(QubitPair pair);
QubitPair parse_qubit_pair(std::string_view text);
std::string_view to_string(QubitPair pair);

/// Result of projecting one qubit onto a Bloch direction. `collapsed` is
/// empty when the outcome probability is below 1e-12 (the post-measurement
/// state is then undefined).
struct ProjectionOutcome {
  double prob = 0.0;
  std::optional<TwoQubitPure> collapsed;
};

struct ResidualConcurrence {
  double weight = 0.0;       // outcome probability W
  double concurrence = 0.0;  // concurrence of the collapsed pair, 0 when W ~ 0
};

/// Sphere-integral invariants of one pair: degrees 4, 6, 8 and the
/// alternative degree-8 route.
struct CSet {
  QubitPair pair = QubitPair::BC;
  double c4 = 0.0;
  double c6 = 0.0;
  double c8 = 0.0;
  double c8p = 0.0;
};

/// Tensor-product quadrature over the measurement sphere: Gauss-Legendre in
/// u = cos(theta), uniform trapezoid in phi. The integrands are trigonometric
/// polynomials of degree <= 8 in u and harmonic order <= 8 in phi, so
/// n_theta >= 9 and n_phi >= 17 integrate them exactly; the defaults leave
/// margin. Below-threshold specs are rejected, not approximated.
struct QuadratureSpec {
  int n_theta = 12;
  int n_phi = 33;
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending on (-1, 1)
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [-1, 1] (exact through degree 2n-1).
GaussLegendreRule gauss_legendre(int n);

/// Unnormalized collapse <psi_party|psi>: the two-qubit amplitude vector of
/// the unmeasured qubits (original order), before dividing by sqrt(W).
TwoQubitPure collapse_unnormalized(const ThreeQubitPure& s, Party party,
                                   const MeasurementDirection& d);

ProjectionOutcome project(const ThreeQubitPure& s, Party party,
                          const MeasurementDirection& d);

ResidualConcurrence residual_concurrence(const ThreeQubitPure& s, Party party,
                                         const MeasurementDirection& d);

CSet quadrature_cset(const ThreeQubitPure& s, QubitPair pair, const QuadratureSpec& q);

/// Closed-form values of the same four integrals as polynomials in the
/// invariants. Homogeneous in the amplitudes, so raw (unnormalized)
/// invariants are fine.
CSet closedform_cset(const InvariantSet& inv, QubitPair pair);

/// Monomial basis every degree-8 c8p closed form is expressed in.
inline constexpr std::array<std::string_view, 12> kC8pMonomialNames = {
    "I5",      "I4*I0",   "I1^2",    "I2^2",    "I3^2",    "I1*I0^2",
    "I2*I0^2", "I3*I0^2", "I1*I2",   "I1*I3",   "I2*I3",   "I0^4"};

/// c8p coefficient rows (units of pi/480) in the kC8pMonomialNames basis.
/// `c8p_coefficients` is the cross-validated table closedform_cset uses.
/// `c8p_coefficients_transcribed` preserves the coefficient table exactly as
/// originally transcribed: its AC row is identical to the validated one, but
/// the AB row (last product term) and the BC row (middle rows duplicated from
/// AC) fail validation against the quadrature route. Both are kept so the
/// verify report can document the discrepancy.
std::array<double, 12> c8p_coefficients(QubitPair pair);
std::array<double, 12> c8p_coefficients_transcribed(QubitPair pair);

double c8p_eval(const std::array<double, 12>& coefficients, const InvariantSet& inv);

/// c8p closed form from the as-transcribed coefficient table (diagnostic).
double c8p_closedform_transcribed(const InvariantSet& inv, QubitPair pair);

/// Invariants recovered from the three pair CSets plus the degree-2
/// invariant i0 (not recoverable from the C's). i4 and i5 each have three
/// redundant expressions; the mean is returned and the spread reported.
struct InversionResult {
  InvariantSet invariants;
  double i4_spread = 0.0;
  double i5_spread = 0.0;
};

InversionResult invert_invariants(const CSet& c_ab, const CSet& c_ac, const CSet& c_bc,
                                  double i0);

/// Per-state identity report: quadrature-vs-closed-form deviations for each
/// pair, the inversion round trip, and the transcribed-c8p diagnostics.
struct IdentityReport {
  struct PairCheck {
    QubitPair pair = QubitPair::BC;
    double dc4 = 0.0;
    double dc6 = 0.0;
    double dc8 = 0.0;
    double dc8p = 0.0;             // vs the validated closed form
    double dc8p_transcribed = 0.0; // vs the as-transcribed table
  };
  std::array<PairCheck, 3> pairs;
  double inversion_max_dev = 0.0;  // max over i1..i5 of |inverted - direct|
  double i4_spread = 0.0;
  double i5_spread = 0.0;

  /// Largest deviation among the identities the closed forms claim
  /// (c4/c6/c8/c8p for all pairs, plus the inversion round trip).
  double max_identity_dev() const;
};

IdentityReport verify_identities(const ThreeQubitPure& s, const QuadratureSpec& q);

/// Least-squares fit of a c8p coefficient row against the quadrature route
/// on Haar states (a deterministic fraction is rescaled away from unit norm
/// so all 12 monomials stay independent). Confirms the validated table and
/// re-derives rows whose transcription fails.
struct C8pFit {
  QubitPair pair = QubitPair::BC;
  std::array<double, 12> coefficients{};  // units of pi/480
  double train_max_residual = 0.0;
  double heldout_max_dev = 0.0;
};

C8pFit fit_c8p_coefficients(QubitPair pair, int train_states, int heldout_states,
                            uint64_t seed, const QuadratureSpec& q);

}  // namespace triq
