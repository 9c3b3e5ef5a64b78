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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triq/invariants.hpp"
#include "triq/measurement.hpp"
#include "triq/state_io.hpp"
#include "triq/states.hpp"

namespace {

using namespace triq;

constexpr double kPi = 3.14159265358979323846;

// Exit codes: 0 success, 1 verification failure, 2 input/usage error.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Accepts plain radians plus "pi" fraction literals: pi, -pi/4, 2pi/3, 3*pi/4.
double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw std::invalid_argument("empty angle");

  const size_t at = text.find("pi");
  if (at == std::string::npos) {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad angle: '" + raw + "'");
    }
    return v;
  }

  std::string head = text.substr(0, at);
  std::string tail = text.substr(at + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head.erase(head.begin());
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  double coef = 1.0;
  if (!head.empty()) {
    size_t used = 0;
    coef = std::stod(head, &used);
    if (used != head.size()) throw std::invalid_argument("bad angle: '" + raw + "'");
  }
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad angle: '" + raw + "'");
    tail.erase(tail.begin());
    size_t used = 0;
    den = std::stod(tail, &used);
    if (used != tail.size() || den == 0.0) {
      throw std::invalid_argument("bad angle: '" + raw + "'");
    }
  }
  return sign * coef * kPi / den;
}

std::string fmt(double v, int digits = 17) { return format_significant(v, digits); }

std::string invariants_json(const InvariantSet& inv) {
  std::string out = "{";
  const char* keys[] = {"i0", "i1", "i2", "i3", "i4", "i5", "i123", "ip123", "ip4", "ip5"};
  const double vals[] = {inv.i0, inv.i1, inv.i2, inv.i3, inv.i4,
                         inv.i5, inv.i123, inv.ip123, inv.ip4, inv.ip5};
  for (int i = 0; i < 10; ++i) {
    if (i) out += ", ";
    out += '"';
    out += keys[i];
    out += "\": ";
    out += fmt(vals[i]);
  }
  out += "}";
  return out;
}

std::string invariants_csv(const InvariantSet& inv) {
  std::string out = "i0,i1,i2,i3,i4,i5,i123,ip123,ip4,ip5\n";
  const double vals[] = {inv.i0, inv.i1, inv.i2, inv.i3, inv.i4,
                         inv.i5, inv.i123, inv.ip123, inv.ip4, inv.ip5};
  for (int i = 0; i < 10; ++i) {
    if (i) out += ',';
    out += fmt(vals[i]);
  }
  out += '\n';
  return out;
}

std::string cset_json_fields(const CSet& c, int digits = 17) {
  return "\"c4\": " + fmt(c.c4, digits) + ", \"c6\": " + fmt(c.c6, digits) +
         ", \"c8\": " + fmt(c.c8, digits) + ", \"c8p\": " + fmt(c.c8p, digits);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
}

std::string svg_scatter(const std::vector<std::array<double, 3>>& points) {
  // three fixed 600x600 panels: (ip123, ip4), (ip123, ip5), (ip4, ip5)
  const int axes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const char* names[3] = {"ip123", "ip4", "ip5"};
  const double panel = 600.0, margin = 50.0, gap = 30.0;
  const double width = 3 * panel + 2 * gap;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    fmt(width, 6) + "\" height=\"600\" viewBox=\"0 0 " + fmt(width, 6) +
                    " 600\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int p = 0; p < 3; ++p) {
    const double x0 = p * (panel + gap);
    svg += "<g transform=\"translate(" + fmt(x0, 6) + ",0)\">\n";
    svg += "<rect x=\"" + fmt(margin, 6) + "\" y=\"" + fmt(margin, 6) + "\" width=\"" +
           fmt(panel - 2 * margin, 6) + "\" height=\"" + fmt(panel - 2 * margin, 6) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"300\" y=\"590\" text-anchor=\"middle\" font-size=\"16\">" +
           std::string(names[axes[p][0]]) + "</text>\n";
    svg += "<text x=\"15\" y=\"300\" text-anchor=\"middle\" font-size=\"16\" "
           "transform=\"rotate(-90 15 300)\">" +
           std::string(names[axes[p][1]]) + "</text>\n";
    for (const auto& pt : points) {
      const double px = margin + pt[axes[p][0]] * (panel - 2 * margin);
      const double py = panel - margin - pt[axes[p][1]] * (panel - 2 * margin);
      svg += "<circle cx=\"" + fmt(px, 8) + "\" cy=\"" + fmt(py, 8) +
             "\" r=\"1.5\" fill=\"steelblue\" fill-opacity=\"0.45\"/>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

int cmd_invariants(const std::string& state_file, const std::string& format) {
  const InvariantSet inv = compute_invariants(load_state_file(state_file));
  if (format == "csv") {
    std::cout << invariants_csv(inv);
  } else {
    std::cout << invariants_json(inv) << "\n";
  }
  return 0;
}

int cmd_project(const std::string& state_file, const std::string& party_text,
                const std::string& theta_text, const std::string& phi_text) {
  const ThreeQubitPure s = load_state_file(state_file);
  const Party party = parse_party(party_text);
  const MeasurementDirection d(parse_angle(theta_text), parse_angle(phi_text));
  const ProjectionOutcome out = project(s, party, d);
  const ResidualConcurrence rc = residual_concurrence(s, party, d);

  std::string json = "{\"prob\": " + fmt(out.prob, 15) +
                     ", \"concurrence\": " + fmt(rc.concurrence, 15) + ", \"collapsed\": ";
  if (out.collapsed) {
    json += '[';
    for (int i = 0; i < 4; ++i) {
      if (i) json += ", ";
      json += '[' + fmt(out.collapsed->amp[i].real(), 15) + ", " +
              fmt(out.collapsed->amp[i].imag(), 15) + ']';
    }
    json += ']';
  } else {
    json += "null";
  }
  json += "}";
  std::cout << json << "\n";
  return 0;
}

int cmd_integrals(const std::string& state_file, const std::string& pair_text,
                  const std::string& method, int n_theta, int n_phi) {
  const ThreeQubitPure s = load_state_file(state_file);
  const QubitPair pair = parse_qubit_pair(pair_text);
  const QuadratureSpec spec{n_theta, n_phi};

  std::string json = "{\"pair\": \"" + std::string(to_string(pair)) + "\"";
  if (method == "quadrature" || method == "both") {
    const CSet q = quadrature_cset(s, pair, spec);
    json += ", \"quadrature\": {" + cset_json_fields(q) + "}";
  }
  if (method == "closed" || method == "both") {
    const CSet c = closedform_cset(compute_invariants(s), pair);
    json += ", \"closed\": {" + cset_json_fields(c) + "}";
  }
  if (method == "both") {
    const CSet q = quadrature_cset(s, pair, spec);
    const CSet c = closedform_cset(compute_invariants(s), pair);
    json += ", \"abs_delta\": {\"c4\": " + fmt(std::abs(q.c4 - c.c4)) +
            ", \"c6\": " + fmt(std::abs(q.c6 - c.c6)) +
            ", \"c8\": " + fmt(std::abs(q.c8 - c.c8)) +
            ", \"c8p\": " + fmt(std::abs(q.c8p - c.c8p)) + "}";
  }
  json += "}";
  std::cout << json << "\n";
  return 0;
}

int cmd_sample(int count, uint64_t seed, const std::string& out_path,
               const std::string& format) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  std::vector<std::array<double, 3>> points;
  points.reserve(count);
  for (int k = 0; k < count; ++k) {
    points.push_back(
        rescaled_coords(compute_invariants(haar_random_state(seed, static_cast<uint64_t>(k)))));
  }

  std::string content;
  if (format == "csv") {
    content = "ip123,ip4,ip5\n";
    for (const auto& p : points) {
      content += fmt(p[0]) + ',' + fmt(p[1]) + ',' + fmt(p[2]) + '\n';
    }
  } else if (format == "json") {
    content = "[";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) content += ", ";
      content += '[' + fmt(points[i][0]) + ", " + fmt(points[i][1]) + ", " +
                 fmt(points[i][2]) + ']';
    }
    content += "]\n";
  } else {
    content = svg_scatter(points);
  }
  write_file(out_path, content);
  std::cout << "wrote " << points.size() << " points to " << out_path << "\n";
  return 0;
}

int cmd_boundary(const std::string& family_text, int steps, const std::string& out_path) {
  const BoundaryFamily family = parse_boundary_family(family_text);
  if (steps < 2) throw std::invalid_argument("boundary: steps must be >= 2");
  if (const char* note = boundary_correction_note(family)) {
    std::cerr << "note: " << note << "\n";
  }
  const auto [lo, hi] = boundary_theta_range(family);
  std::string content = "theta,ip123,ip4,ip5\n";
  for (int i = 0; i < steps; ++i) {
    const double theta = lo + (hi - lo) * i / (steps - 1);
    const auto p = rescaled_coords(compute_invariants(boundary_state(family, theta)));
    content += fmt(theta) + ',' + fmt(p[0]) + ',' + fmt(p[1]) + ',' + fmt(p[2]) + '\n';
  }
  write_file(out_path, content);
  std::cout << "wrote " << steps << " " << to_string(family) << " samples to " << out_path
            << "\n";
  return 0;
}

struct VerifyAccumulator {
  double c4 = 0.0, c6 = 0.0, c8 = 0.0, c8p = 0.0;
  double inversion = 0.0, i4_spread = 0.0, i5_spread = 0.0;
  double lu_invariance = 0.0;
  double perm_i45 = 0.0, perm_multiset = 0.0;
  double homogeneity = 0.0;
  double concurrence_routes = 0.0;
  double transcribed[3] = {0.0, 0.0, 0.0};  // AB, AC, BC
};

int cmd_verify(int trials, uint64_t seed, double tol, int n_theta, int n_phi) {
  if (trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("verify: tolerance must be positive");
  const QuadratureSpec spec{n_theta, n_phi};
  const auto t0 = std::chrono::steady_clock::now();

  VerifyAccumulator acc;
  const QubitPermutation perms[6] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int k = 0; k < trials; ++k) {
    const ThreeQubitPure s = haar_random_state(seed, static_cast<uint64_t>(k));
    const InvariantSet inv = compute_invariants(s);

    const IdentityReport rep = verify_identities(s, spec);
    for (int p = 0; p < 3; ++p) {
      acc.c4 = std::max(acc.c4, rep.pairs[p].dc4);
      acc.c6 = std::max(acc.c6, rep.pairs[p].dc6);
      acc.c8 = std::max(acc.c8, rep.pairs[p].dc8);
      acc.c8p = std::max(acc.c8p, rep.pairs[p].dc8p);
      acc.transcribed[p] = std::max(acc.transcribed[p], rep.pairs[p].dc8p_transcribed);
    }
    acc.inversion = std::max(acc.inversion, rep.inversion_max_dev);
    acc.i4_spread = std::max(acc.i4_spread, rep.i4_spread);
    acc.i5_spread = std::max(acc.i5_spread, rep.i5_spread);

    const InvariantSet rot = compute_invariants(
        apply_local_unitaries(s, random_local_unitary(seed, static_cast<uint64_t>(k))));
    acc.lu_invariance = std::max(
        {acc.lu_invariance, std::abs(rot.i1 - inv.i1), std::abs(rot.i2 - inv.i2),
         std::abs(rot.i3 - inv.i3), std::abs(rot.i4 - inv.i4), std::abs(rot.i5 - inv.i5)});

    std::array<double, 3> base_p = {inv.i1, inv.i2, inv.i3};
    std::sort(base_p.begin(), base_p.end());
    for (const auto& perm : perms) {
      const InvariantSet pv = compute_invariants(permute_qubits(s, perm));
      acc.perm_i45 = std::max(
          {acc.perm_i45, std::abs(pv.i4 - inv.i4), std::abs(pv.i5 - inv.i5)});
      std::array<double, 3> p = {pv.i1, pv.i2, pv.i3};
      std::sort(p.begin(), p.end());
      for (int i = 0; i < 3; ++i) {
        acc.perm_multiset = std::max(acc.perm_multiset, std::abs(p[i] - base_p[i]));
      }
    }

    for (double t : {0.5, 2.0}) {
      ThreeQubitPure scaled = s;
      for (auto& a : scaled.amp) a *= t;
      const InvariantSet sv = compute_invariants(scaled);
      const double t2 = t * t, t4 = t2 * t2;
      acc.homogeneity = std::max(
          {acc.homogeneity, std::abs(sv.i1 / (inv.i1 * t4) - 1.0),
           std::abs(sv.i2 / (inv.i2 * t4) - 1.0), std::abs(sv.i3 / (inv.i3 * t4) - 1.0),
           std::abs(sv.i4 / (inv.i4 * t4 * t2) - 1.0),
           std::abs(sv.i5 / (inv.i5 * t4 * t4) - 1.0)});
    }

    // concurrence routes on a collapsed pair of this state
    const MeasurementDirection d(1.1, 2.3);
    const ProjectionOutcome out = project(s, Party::A, d);
    if (out.collapsed) {
      const double c1 = concurrence_pure_coeff(*out.collapsed);
      const double c2 = concurrence_pure_reduced(*out.collapsed);
      const double c3 = concurrence_mixed(TwoQubitDensity::from_pure(*out.collapsed));
      acc.concurrence_routes = std::max(
          {acc.concurrence_routes, std::abs(c1 - c2), std::abs(c1 - c3), std::abs(c2 - c3)});
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  struct Line {
    const char* name;
    double value;
  };
  const Line lines[] = {
      {"c4 quadrature vs closed form", acc.c4},
      {"c6 quadrature vs closed form", acc.c6},
      {"c8 quadrature vs closed form", acc.c8},
      {"c8p quadrature vs closed form", acc.c8p},
      {"invariant inversion round trip", acc.inversion},
      {"i4 redundant expression spread", acc.i4_spread},
      {"i5 redundant expression spread", acc.i5_spread},
      {"local-unitary invariance of i1..i5", acc.lu_invariance},
      {"permutation invariance of i4, i5", acc.perm_i45},
      {"purity multiset under permutations", acc.perm_multiset},
      {"homogeneity degrees (relative)", acc.homogeneity},
      {"concurrence route agreement", acc.concurrence_routes},
  };

  std::cout << "verify: trials=" << trials << " seed=" << seed << " nodes=" << n_theta
            << "x" << n_phi << " tol=" << fmt(tol, 6) << "\n";
  bool ok = true;
  for (const Line& line : lines) {
    const bool pass = line.value <= tol;
    ok = ok && pass;
    std::cout << (pass ? "pass  " : "FAIL  ") << line.name << ": max deviation "
              << fmt(line.value, 6) << "\n";
  }
  const char* pair_names[3] = {"AB", "AC", "BC"};
  for (int p = 0; p < 3; ++p) {
    if (acc.transcribed[p] <= tol) {
      std::cout << "info  c8p transcribed row " << pair_names[p]
                << ": matches quadrature (max deviation " << fmt(acc.transcribed[p], 6)
                << ")\n";
    } else {
      std::cout << "info  c8p transcribed row " << pair_names[p]
                << ": rejected (max deviation " << fmt(acc.transcribed[p], 6)
                << "); corrected row in use\n";
    }
  }
  std::cout << "elapsed " << fmt(elapsed, 4) << " s\n";
  std::cout << (ok ? "result: PASS" : "result: FAIL") << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-qubit entanglement invariants: computation, measurement "
               "integrals and identity verification"};
  app.require_subcommand(1);

  auto* inv_cmd = app.add_subcommand("invariants", "invariants of a state file");
  std::string inv_state, inv_format = "json";
  inv_cmd->add_option("--state", inv_state, "state file (JSON or CSV)")->required();
  inv_cmd->add_option("--format", inv_format)->check(CLI::IsMember({"json", "csv"}));

  auto* proj_cmd = app.add_subcommand("project", "projective measurement of one qubit");
  std::string proj_state, proj_party, proj_theta, proj_phi;
  proj_cmd->add_option("--state", proj_state)->required();
  proj_cmd->add_option("--party", proj_party, "A, B or C")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C"}));
  proj_cmd->add_option("--theta", proj_theta, "radians; pi fractions accepted")->required();
  proj_cmd->add_option("--phi", proj_phi, "radians; pi fractions accepted")->required();

  auto* int_cmd = app.add_subcommand("integrals", "sphere integrals of one pair");
  std::string int_state, int_pair, int_method = "both";
  int int_ntheta = 12, int_nphi = 33;
  int_cmd->add_option("--state", int_state)->required();
  int_cmd->add_option("--pair", int_pair)->required()->check(CLI::IsMember({"AB", "AC", "BC"}));
  int_cmd->add_option("--method", int_method)
      ->check(CLI::IsMember({"quadrature", "closed", "both"}));
  int_cmd->add_option("--nodes-theta", int_ntheta);
  int_cmd->add_option("--nodes-phi", int_nphi);

  auto* sample_cmd = app.add_subcommand("sample", "chart coordinates of random states");
  int sample_count = 0;
  uint64_t sample_seed = 0;
  std::string sample_out, sample_format = "csv";
  sample_cmd->add_option("--count", sample_count)->required();
  sample_cmd->add_option("--seed", sample_seed)->required();
  sample_cmd->add_option("--out", sample_out)->required();
  sample_cmd->add_option("--format", sample_format)
      ->check(CLI::IsMember({"csv", "json", "svg"}));

  auto* bound_cmd = app.add_subcommand("boundary", "chart curve of one boundary family");
  std::string bound_family, bound_out;
  int bound_steps = 0;
  bound_cmd->add_option("--family", bound_family)
      ->required()
      ->check(CLI::IsMember({"OG", "OB", "OW", "BW", "BG", "WG"}));
  bound_cmd->add_option("--steps", bound_steps)->required();
  bound_cmd->add_option("--out", bound_out)->required();

  auto* verify_cmd = app.add_subcommand("verify", "identity checks on random states");
  int verify_trials = 200, verify_ntheta = 12, verify_nphi = 33;
  uint64_t verify_seed = 42;
  double verify_tol = 1e-10;
  verify_cmd->add_option("--trials", verify_trials);
  verify_cmd->add_option("--seed", verify_seed);
  verify_cmd->add_option("--tol", verify_tol);
  verify_cmd->add_option("--nodes-theta", verify_ntheta);
  verify_cmd->add_option("--nodes-phi", verify_nphi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(inv_cmd)) return cmd_invariants(inv_state, inv_format);
    if (app.got_subcommand(proj_cmd)) {
      return cmd_project(proj_state, proj_party, proj_theta, proj_phi);
    }
    if (app.got_subcommand(int_cmd)) {
      return cmd_integrals(int_state, int_pair, int_method, int_ntheta, int_nphi);
    }
    if (app.got_subcommand(sample_cmd)) {
      return cmd_sample(sample_count, sample_seed, sample_out, sample_format);
    }
    if (app.got_subcommand(bound_cmd)) return cmd_boundary(bound_family, bound_steps, bound_out);
    if (app.got_subcommand(verify_cmd)) {
      return cmd_verify(verify_trials, verify_seed, verify_tol, verify_ntheta, verify_nphi);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
