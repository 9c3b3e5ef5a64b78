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

#include <doctest.h>

#include "test_support.hpp"
#include "triq/invariants.hpp"
#include "triq/states.hpp"

using namespace triq;
using triq_test::kPi;
using triq_test::overlap_magnitude;

TEST_SUITE_BEGIN("states");

TEST_CASE("normalize") {
  ThreeQubitPure s;
  s.amp[0] = 2.0;
  const ThreeQubitPure n = normalize(s);
  CHECK(n.amp[0] == Complex(1.0, 0.0));
  CHECK(std::abs(n.norm_squared() - 1.0) < 1e-14);

  ThreeQubitPure g;
  g.amp[0] = 1.0;
  g.amp[7] = 1.0;
  const ThreeQubitPure gn = normalize(g);
  CHECK(std::abs(gn.amp[0] - Complex(std::sqrt(0.5), 0.0)) < 1e-15);
  CHECK(std::abs(gn.amp[7] - Complex(std::sqrt(0.5), 0.0)) < 1e-15);

  CHECK_THROWS_AS(normalize(ThreeQubitPure{}), std::invalid_argument);
}

TEST_CASE("named states") {
  const ThreeQubitPure o = named_state(NamedState::O);
  CHECK(o.amp[0] == Complex(1.0, 0.0));

  const ThreeQubitPure g = named_state(NamedState::G);
  CHECK(std::abs(g.amp[0].real() - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(g.amp[7].real() - std::sqrt(0.5)) < 1e-15);

  const ThreeQubitPure w = named_state(NamedState::W);
  for (int b : {1, 2, 4}) CHECK(std::abs(w.amp[b].real() - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(w.norm_squared() - 1.0) < 1e-14);

  const ThreeQubitPure b = named_state(NamedState::B);
  CHECK(std::abs(b.amp[0].real() - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(b.amp[3].real() - std::sqrt(0.5)) < 1e-15);

  CHECK_THROWS_AS(parse_named_state("X"), std::invalid_argument);
  CHECK(parse_named_state("W") == NamedState::W);
}

TEST_CASE("boundary families: anchors inside the ranges") {
  CHECK(overlap_magnitude(boundary_state(BoundaryFamily::OG, kPi / 4.0),
                          named_state(NamedState::G)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(overlap_magnitude(boundary_state(BoundaryFamily::OB, kPi / 4.0),
                          named_state(NamedState::B)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(overlap_magnitude(boundary_state(BoundaryFamily::OG, 0.0),
                          named_state(NamedState::O)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boundary families: endpoint states") {
  // OG ends on product rays; OB ends on |000> and |011>
  CHECK(overlap_magnitude(boundary_state(BoundaryFamily::OG, kPi / 2.0),
                          ThreeQubitPure{{0, 0, 0, 0, 0, 0, 0, 1}}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // OW(0) is the spin-flipped W: X(x)X(x)X maps it onto W
  const ThreeQubitPure ow0 = boundary_state(BoundaryFamily::OW, 0.0);
  const LocalUnitaryTriple flip(pauli_x(), pauli_x(), pauli_x());
  CHECK(overlap_magnitude(apply_local_unitaries(ow0, flip), named_state(NamedState::W)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // BW(0) is the GHZ ray
  CHECK(overlap_magnitude(boundary_state(BoundaryFamily::BW, 0.0),
                          named_state(NamedState::G)) == doctest::Approx(1.0).epsilon(1e-12));

  // WG starts (theta = 2pi/3) on a GHZ-class point and ends on a W-class
  // point; checked at invariant level in the invariants suite
  CHECK(std::abs(boundary_state(BoundaryFamily::WG, 2.0 * kPi / 3.0).norm_squared() - 1.0) <
        1e-14);
}

TEST_CASE("boundary families: range validation") {
  CHECK_THROWS_AS(boundary_state(BoundaryFamily::OG, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(boundary_state(BoundaryFamily::OG, kPi / 2.0 + 0.1), std::invalid_argument);
  CHECK_THROWS_AS(boundary_state(BoundaryFamily::WG, 0.5), std::invalid_argument);
  const auto [lo, hi] = boundary_theta_range(BoundaryFamily::BG);
  CHECK(lo == std::atan(std::sqrt(2.0)));
  CHECK(hi == kPi / 2.0);
  // endpoints themselves are valid
  CHECK_NOTHROW(boundary_state(BoundaryFamily::BG, lo));
  CHECK_NOTHROW(boundary_state(BoundaryFamily::BG, hi));
}

TEST_CASE("boundary families: transcribed forms") {
  CHECK(boundary_correction_note(BoundaryFamily::OG) != nullptr);
  CHECK(boundary_correction_note(BoundaryFamily::BW) != nullptr);
  CHECK(boundary_correction_note(BoundaryFamily::OB) == nullptr);
  CHECK(boundary_correction_note(BoundaryFamily::WG) == nullptr);

  // transcribed OG collapses to the |000> ray for any theta
  const ThreeQubitPure og_t =
      boundary_state(BoundaryFamily::OG, 0.3, BoundaryForm::transcribed);
  CHECK(overlap_magnitude(og_t, named_state(NamedState::O)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // transcribed BW vanishes at theta = pi/2
  CHECK_THROWS_AS(boundary_state(BoundaryFamily::BW, kPi / 2.0, BoundaryForm::transcribed),
                  std::invalid_argument);
  // families without a note ignore the form switch
  CHECK(overlap_magnitude(
            boundary_state(BoundaryFamily::OB, 0.7, BoundaryForm::transcribed),
            boundary_state(BoundaryFamily::OB, 0.7)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("haar_random_state determinism and normalization") {
  const ThreeQubitPure a = haar_random_state(42, 7);
  const ThreeQubitPure b = haar_random_state(42, 7);
  for (int i = 0; i < 8; ++i) CHECK(a.amp[i] == b.amp[i]);

  const ThreeQubitPure c = haar_random_state(42, 8);
  CHECK(overlap_magnitude(a, c) < 1.0 - 1e-6);

  double worst = 0.0;
  for (uint64_t k = 0; k < 1000; ++k) {
    worst = std::max(worst, std::abs(haar_random_state(3, k).norm_squared() - 1.0));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("haar_random_state is permutation covariant in distribution") {
  double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
  const int n = 2000;
  for (uint64_t k = 0; k < n; ++k) {
    const InvariantSet inv = compute_invariants(haar_random_state(99, k));
    sum1 += inv.i1;
    sum2 += inv.i2;
    sum3 += inv.i3;
  }
  CHECK(std::abs(sum1 - sum2) / n < 0.02);
  CHECK(std::abs(sum2 - sum3) / n < 0.02);
  // Haar mean of a single-qubit purity for 2x4 bipartitions is 2/3
  CHECK(sum1 / n == doctest::Approx(2.0 / 3.0).epsilon(0.02));
}

TEST_CASE("random_local_unitary") {
  const LocalUnitaryTriple u = random_local_unitary(5, 13);
  const LocalUnitaryTriple v = random_local_unitary(5, 13);
  for (const auto* m : {&u.u_a, &u.u_b, &u.u_c}) {
    CHECK(triq_test::max_abs_diff(adjoint(*m) * *m, ComplexMatrix::identity(2)) < 1e-12);
    const Complex det = (*m)(0, 0) * (*m)(1, 1) - (*m)(0, 1) * (*m)(1, 0);
    CHECK(std::abs(std::abs(det) - 1.0) < 1e-12);
  }
  CHECK(triq_test::max_abs_diff(u.u_a, v.u_a) == 0.0);
  CHECK(triq_test::max_abs_diff(u.u_c, v.u_c) == 0.0);
  // phase convention: first column's first nonzero entry is real positive
  CHECK(std::abs(u.u_a(0, 0).imag()) < 1e-13);
  CHECK(u.u_a(0, 0).real() > 0.0);
}

TEST_CASE("apply_local_unitaries") {
  const ThreeQubitPure g = named_state(NamedState::G);
  const ThreeQubitPure same = apply_local_unitaries(g, LocalUnitaryTriple::identity());
  for (int i = 0; i < 8; ++i) CHECK(std::abs(same.amp[i] - g.amp[i]) < 1e-15);

  const LocalUnitaryTriple xa(pauli_x(), ComplexMatrix::identity(2),
                              ComplexMatrix::identity(2));
  const ThreeQubitPure flipped = apply_local_unitaries(named_state(NamedState::O), xa);
  CHECK(std::abs(flipped.amp[4] - Complex(1.0, 0.0)) < 1e-15);

  for (uint64_t k = 0; k < 25; ++k) {
    const ThreeQubitPure s = haar_random_state(6, k);
    const ThreeQubitPure t = apply_local_unitaries(s, random_local_unitary(6, k));
    CHECK(std::abs(t.norm_squared() - s.norm_squared()) < 1e-13);
  }
}

TEST_CASE("permute_qubits") {
  const ThreeQubitPure s = haar_random_state(8, 1);
  const ThreeQubitPure id = permute_qubits(s, {0, 1, 2});
  for (int i = 0; i < 8; ++i) CHECK(id.amp[i] == s.amp[i]);

  ThreeQubitPure b011;
  b011.amp[3] = 1.0;
  const ThreeQubitPure swapped_bc = permute_qubits(b011, {0, 2, 1});
  CHECK(swapped_bc.amp[3] == Complex(1.0, 0.0));

  ThreeQubitPure b100;
  b100.amp[4] = 1.0;
  const ThreeQubitPure swapped_ab = permute_qubits(b100, {1, 0, 2});
  CHECK(swapped_ab.amp[2] == Complex(1.0, 0.0));

  CHECK_THROWS_AS(permute_qubits(s, {0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_qubits(s, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("density and measurement direction validation") {
  CHECK_THROWS_AS(MeasurementDirection(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MeasurementDirection(0.1, 7.0), std::invalid_argument);
  CHECK_NOTHROW(MeasurementDirection(kPi, 0.0));

  // non-Hermitian, wrong trace, and negative matrices are all rejected
  ComplexMatrix bad = ComplexMatrix::identity(4);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(TwoQubitDensity{bad}, std::invalid_argument);
  CHECK_THROWS_AS(TwoQubitDensity{ComplexMatrix::identity(4)}, std::invalid_argument);
  ComplexMatrix neg(4);
  neg(0, 0) = 2.0;
  neg(1, 1) = -1.0;
  CHECK_THROWS_AS(TwoQubitDensity{neg}, std::invalid_argument);

  TwoQubitPure bell;
  bell.amp[0] = 1.0;
  bell.amp[3] = 1.0;  // from_pure normalizes
  const TwoQubitDensity rho = TwoQubitDensity::from_pure(bell);
  CHECK(std::abs(trace(rho.mat()) - Complex(1.0, 0.0)) < 1e-14);
}

TEST_SUITE_END();
