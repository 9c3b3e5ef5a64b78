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

#include "triq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "triq/rng.hpp"

namespace triq {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_nonzero(const ThreeQubitPure& s, const char* what) {
  if (std::sqrt(s.norm_squared()) <= 1e-12) {
    throw std::invalid_argument(std::string(what) + ": zero state");
  }
}

// nu00*nu11 - nu01*nu10 of the unnormalized collapsed vector. W*C = 2|q|,
// so every integrand is a polynomial in q and W and the 0/0 at W -> 0 never
// appears.
Complex cross_det(const TwoQubitPure& nu) {
  return nu.amp[0] * nu.amp[3] - nu.amp[1] * nu.amp[2];
}

void legendre_eval(int n, double x, double& pn, double& dpn) {
  double p0 = 1.0, p1 = x;
  for (int j = 1; j < n; ++j) {
    const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

// Solves the 12x12 normal equations by Gaussian elimination with partial
// pivoting; the design matrix is well conditioned once a few states are
// rescaled off the unit sphere.
std::array<double, 12> solve_normal_equations(const std::vector<std::array<double, 12>>& rows,
                                              const std::vector<double>& rhs) {
  constexpr int n = 12;
  double a[n][n] = {};
  double b[n] = {};
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      b[i] += rows[r][i] * rhs[r];
      for (int j = 0; j < n; ++j) a[i][j] += rows[r][i] * rows[r][j];
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) {
      throw std::runtime_error("fit_c8p_coefficients: singular normal equations");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, 12> x{};
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

std::array<double, 12> monomial_row(const InvariantSet& v) {
  const double i02 = v.i0 * v.i0;
  return {v.i5,        v.i4 * v.i0, v.i1 * v.i1, v.i2 * v.i2,
          v.i3 * v.i3, v.i1 * i02,  v.i2 * i02,  v.i3 * i02,
          v.i1 * v.i2, v.i1 * v.i3, v.i2 * v.i3, i02 * i02};
}

}  // namespace

Party measured_party(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB: return Party::C;
    case QubitPair::AC: return Party::B;
    case QubitPair::BC: return Party::A;
  }
  throw std::invalid_argument("measured_party: unknown pair");
}

QubitPair parse_qubit_pair(std::string_view text) {
  if (text == "AB") return QubitPair::AB;
  if (text == "AC") return QubitPair::AC;
  if (text == "BC") return QubitPair::BC;
  throw std::invalid_argument("unknown qubit pair (expected AB, AC or BC)");
}

std::string_view to_string(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB: return "AB";
    case QubitPair::AC: return "AC";
    case QubitPair::BC: return "BC";
  }
  return "?";
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_eval(n, x, pn, dpn);
      const double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_eval(n, x, pn, dpn);
    const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    rule.nodes[n - 1 - i] = x;       // initial guesses descend from +1
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  return rule;
}

TwoQubitPure collapse_unnormalized(const ThreeQubitPure& s, Party party,
                                   const MeasurementDirection& d) {
  const double a0 = std::cos(d.theta / 2.0);
  const double st = std::sin(d.theta / 2.0);
  const Complex a1(st * std::cos(d.phi), -st * std::sin(d.phi));  // conj(sin * e^{i phi})
  TwoQubitPure nu;
  switch (party) {
    case Party::A:
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          nu.amp[2 * j + k] = a0 * s.amp[2 * j + k] + a1 * s.amp[4 + 2 * j + k];
      break;
    case Party::B:
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          nu.amp[2 * i + k] = a0 * s.amp[4 * i + k] + a1 * s.amp[4 * i + 2 + k];
      break;
    case Party::C:
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          nu.amp[2 * i + j] = a0 * s.amp[4 * i + 2 * j] + a1 * s.amp[4 * i + 2 * j + 1];
      break;
  }
  return nu;
}

ProjectionOutcome project(const ThreeQubitPure& s, Party party,
                          const MeasurementDirection& d) {
  check_nonzero(s, "project");
  const TwoQubitPure nu = collapse_unnormalized(s, party, d);
  ProjectionOutcome out;
  out.prob = nu.norm_squared();
  if (out.prob > 1e-12) {
    TwoQubitPure c;
    const double inv_root = 1.0 / std::sqrt(out.prob);
    for (int i = 0; i < 4; ++i) c.amp[i] = nu.amp[i] * inv_root;
    out.collapsed = c;
  }
  return out;
}

ResidualConcurrence residual_concurrence(const ThreeQubitPure& s, Party party,
                                         const MeasurementDirection& d) {
  check_nonzero(s, "residual_concurrence");
  const TwoQubitPure nu = collapse_unnormalized(s, party, d);
  const double w = nu.norm_squared();
  if (w <= 1e-12) return {w, 0.0};
  return {w, 2.0 * std::abs(cross_det(nu)) / w};
}

CSet quadrature_cset(const ThreeQubitPure& s, QubitPair pair, const QuadratureSpec& q) {
  if (q.n_theta < 9 || q.n_phi < 17) {
    throw std::invalid_argument(
        "quadrature_cset: spec below exactness thresholds (n_theta >= 9, n_phi >= 17)");
  }
  check_nonzero(s, "quadrature_cset");
  const Party party = measured_party(pair);
  const GaussLegendreRule rule = gauss_legendre(q.n_theta);
  const double wphi = 2.0 * kPi / q.n_phi;

  // fixed node order keeps the reduction bit-deterministic
  CSet out;
  out.pair = pair;
  for (int i = 0; i < q.n_theta; ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double s4 = 0.0, s6 = 0.0, s8 = 0.0, s8p = 0.0;
    for (int j = 0; j < q.n_phi; ++j) {
      const double phi = wphi * j;
      const TwoQubitPure nu = collapse_unnormalized(s, party, {theta, phi});
      const double w = nu.norm_squared();
      const double q2 = std::norm(cross_det(nu));
      s4 += q2;
      s6 += w * q2;
      s8 += q2 * q2;
      s8p += w * w * q2;
    }
    out.c4 += rule.weights[i] * wphi * s4;
    out.c6 += rule.weights[i] * wphi * s6;
    out.c8 += rule.weights[i] * wphi * s8;
    out.c8p += rule.weights[i] * wphi * s8p;
  }
  return out;
}

CSet closedform_cset(const InvariantSet& inv, QubitPair pair) {
  const double i02 = inv.i0 * inv.i0;
  double lin = 0.0;  // the signed purity combination the pair carries
  double c6_mix = 0.0;
  switch (pair) {
    case QubitPair::AB:
      lin = -inv.i1 - inv.i2 + inv.i3;
      c6_mix = inv.i1 + inv.i2 - 2.0 * inv.i3;
      break;
    case QubitPair::AC:
      lin = -inv.i1 + inv.i2 - inv.i3;
      c6_mix = inv.i1 - 2.0 * inv.i2 + inv.i3;
      break;
    case QubitPair::BC:
      lin = inv.i1 - inv.i2 - inv.i3;
      c6_mix = -2.0 * inv.i1 + inv.i2 + inv.i3;
      break;
  }
  CSet out;
  out.pair = pair;
  out.c4 = kPi / 3.0 * (lin + i02);
  out.c6 = kPi / 18.0 * (2.0 * i02 * inv.i0 - 3.0 * inv.i0 * c6_mix - 2.0 * inv.i4);
  out.c8 = kPi / 240.0 * (12.0 * (lin + i02) * (lin + i02) - inv.i5);
  out.c8p = c8p_eval(c8p_coefficients(pair), inv);
  return out;
}

std::array<double, 12> c8p_coefficients(QubitPair pair) {
  // basis: I5, I4*I0, I1^2, I2^2, I3^2, I1*I0^2, I2*I0^2, I3*I0^2,
  //        I1*I2, I1*I3, I2*I3, I0^4
  switch (pair) {
    case QubitPair::AB:
      return {1, -64, -4, -4, 28, -24, -24, 136, 8, -24, -24, -4};
    case QubitPair::AC:
      return {1, -64, -4, 28, -4, -24, 136, -24, -24, 8, -24, -4};
    case QubitPair::BC:
      return {1, -64, 28, -4, -4, 136, -24, -24, -24, -24, 8, -4};
  }
  throw std::invalid_argument("c8p_coefficients: unknown pair");
}

std::array<double, 12> c8p_coefficients_transcribed(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB:
      // last product term transcribed as -I2*I3 instead of -3*I2*I3
      return {1, -64, -4, -4, 28, -24, -24, 136, 8, -24, -8, -4};
    case QubitPair::AC:
      return {1, -64, -4, 28, -4, -24, 136, -24, -24, 8, -24, -4};
    case QubitPair::BC:
      // middle rows transcribed as duplicates of the AC row
      return {1, -64, 28, -4, -4, -24, 136, -24, -24, 8, -24, -4};
  }
  throw std::invalid_argument("c8p_coefficients_transcribed: unknown pair");
}

double c8p_eval(const std::array<double, 12>& coefficients, const InvariantSet& inv) {
  const std::array<double, 12> row = monomial_row(inv);
  double acc = 0.0;
  for (int i = 0; i < 12; ++i) acc += coefficients[i] * row[i];
  return kPi / 480.0 * acc;
}

double c8p_closedform_transcribed(const InvariantSet& inv, QubitPair pair) {
  return c8p_eval(c8p_coefficients_transcribed(pair), inv);
}

InversionResult invert_invariants(const CSet& c_ab, const CSet& c_ac, const CSet& c_bc,
                                  double i0) {
  if (c_ab.pair != QubitPair::AB || c_ac.pair != QubitPair::AC ||
      c_bc.pair != QubitPair::BC) {
    throw std::invalid_argument("invert_invariants: CSets must be tagged AB, AC, BC");
  }
  if (!(i0 > 0.0)) throw std::invalid_argument("invert_invariants: i0 must be positive");

  const double i02 = i0 * i0;
  InvariantSet inv{};
  inv.i0 = i0;
  inv.i1 = i02 - 1.5 / kPi * (c_ab.c4 + c_ac.c4);
  inv.i2 = i02 - 1.5 / kPi * (c_ab.c4 + c_bc.c4);
  inv.i3 = i02 - 1.5 / kPi * (c_ac.c4 + c_bc.c4);
  inv.i123 = inv.i1 + inv.i2 + inv.i3;

  const double i03 = i02 * i0;
  const double i4_cand[3] = {
      i03 - 2.25 / kPi * (4.0 * c_ab.c6 + i0 * (-2.0 * c_ab.c4 + c_ac.c4 + c_bc.c4)),
      i03 - 2.25 / kPi * (4.0 * c_ac.c6 + i0 * (c_ab.c4 - 2.0 * c_ac.c4 + c_bc.c4)),
      i03 - 2.25 / kPi * (4.0 * c_bc.c6 + i0 * (c_ab.c4 + c_ac.c4 - 2.0 * c_bc.c4))};
  const double lin[3] = {-inv.i1 - inv.i2 + inv.i3 + i02,
                         -inv.i1 + inv.i2 - inv.i3 + i02,
                         inv.i1 - inv.i2 - inv.i3 + i02};
  const double c8s[3] = {c_ab.c8, c_ac.c8, c_bc.c8};
  double i5_cand[3];
  for (int k = 0; k < 3; ++k) {
    i5_cand[k] = 12.0 / kPi * (kPi * lin[k] * lin[k] - 20.0 * c8s[k]);
  }

  InversionResult res;
  res.i4_spread = std::max({i4_cand[0], i4_cand[1], i4_cand[2]}) -
                  std::min({i4_cand[0], i4_cand[1], i4_cand[2]});
  res.i5_spread = std::max({i5_cand[0], i5_cand[1], i5_cand[2]}) -
                  std::min({i5_cand[0], i5_cand[1], i5_cand[2]});
  if (res.i4_spread > 1e-8 || res.i5_spread > 1e-8) {
    throw std::runtime_error(
        "invert_invariants: redundant expressions disagree beyond 1e-8; "
        "the CSets are inconsistent");
  }
  inv.i4 = (i4_cand[0] + i4_cand[1] + i4_cand[2]) / 3.0;
  inv.i5 = (i5_cand[0] + i5_cand[1] + i5_cand[2]) / 3.0;

  const double i123_n = inv.i123 / i02;
  inv.ip123 = 2.0 * (3.0 - i123_n) / 3.0;
  inv.ip4 = 9.0 * (1.0 - inv.i4 / i03) / 7.0;
  inv.ip5 = inv.i5 / (i02 * i02);
  res.invariants = inv;
  return res;
}

double IdentityReport::max_identity_dev() const {
  double m = inversion_max_dev;
  for (const PairCheck& p : pairs) {
    m = std::max({m, p.dc4, p.dc6, p.dc8, p.dc8p});
  }
  return m;
}

IdentityReport verify_identities(const ThreeQubitPure& s, const QuadratureSpec& q) {
  check_nonzero(s, "verify_identities");
  const InvariantSet inv = compute_invariants(s);

  IdentityReport report;
  std::array<CSet, 3> closed;
  const QubitPair order[3] = {QubitPair::AB, QubitPair::AC, QubitPair::BC};
  for (int k = 0; k < 3; ++k) {
    const QubitPair pair = order[k];
    const CSet quad = quadrature_cset(s, pair, q);
    closed[k] = closedform_cset(inv, pair);
    IdentityReport::PairCheck& chk = report.pairs[k];
    chk.pair = pair;
    chk.dc4 = std::abs(quad.c4 - closed[k].c4);
    chk.dc6 = std::abs(quad.c6 - closed[k].c6);
    chk.dc8 = std::abs(quad.c8 - closed[k].c8);
    chk.dc8p = std::abs(quad.c8p - closed[k].c8p);
    chk.dc8p_transcribed = std::abs(quad.c8p - c8p_closedform_transcribed(inv, pair));
  }

  const InversionResult back = invert_invariants(closed[0], closed[1], closed[2], inv.i0);
  report.inversion_max_dev = std::max(
      {std::abs(back.invariants.i1 - inv.i1), std::abs(back.invariants.i2 - inv.i2),
       std::abs(back.invariants.i3 - inv.i3), std::abs(back.invariants.i4 - inv.i4),
       std::abs(back.invariants.i5 - inv.i5)});
  report.i4_spread = back.i4_spread;
  report.i5_spread = back.i5_spread;
  return report;
}

C8pFit fit_c8p_coefficients(QubitPair pair, int train_states, int heldout_states,
                            uint64_t seed, const QuadratureSpec& q) {
  if (train_states < 13) {
    throw std::invalid_argument("fit_c8p_coefficients: need at least 13 training states");
  }
  std::vector<std::array<double, 12>> rows;
  std::vector<double> rhs;
  rows.reserve(train_states);
  rhs.reserve(train_states);
  for (int k = 0; k < train_states; ++k) {
    ThreeQubitPure s = haar_random_state(seed, static_cast<uint64_t>(k));
    // rescale a third of the sample off the unit sphere so the i0 monomials
    // do not degenerate
    if (k % 3 == 0) {
      const double t = 0.6 + 0.05 * (k % 16);
      for (auto& a : s.amp) a *= t;
    }
    rows.push_back(monomial_row(compute_invariants(s)));
    rhs.push_back(quadrature_cset(s, pair, q).c8p / (kPi / 480.0));
  }

  C8pFit fit;
  fit.pair = pair;
  fit.coefficients = solve_normal_equations(rows, rhs);
  for (size_t r = 0; r < rows.size(); ++r) {
    double pred = 0.0;
    for (int i = 0; i < 12; ++i) pred += rows[r][i] * fit.coefficients[i];
    fit.train_max_residual =
        std::max(fit.train_max_residual, std::abs(pred - rhs[r]) * (kPi / 480.0));
  }
  for (int k = 0; k < heldout_states; ++k) {
    const ThreeQubitPure s = haar_random_state(seed + 1, static_cast<uint64_t>(k));
    const double quad = quadrature_cset(s, pair, q).c8p;
    const double pred = c8p_eval(fit.coefficients, compute_invariants(s));
    fit.heldout_max_dev = std::max(fit.heldout_max_dev, std::abs(quad - pred));
  }
  return fit;
}

}  // namespace triq
