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

#include "triq/state_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace triq {

namespace {

double parse_finite_double(std::string_view text, const char* what) {
  // trim ASCII whitespace; std::from_chars is locale-independent
  size_t b = text.find_first_not_of(" \t\r\n");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    throw std::invalid_argument(std::string(what) + ": empty field");
  }
  text = text.substr(b, e - b + 1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + ": not a finite number: '" +
                                std::string(text) + "'");
  }
  return v;
}

ThreeQubitPure parse_state_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("amps") || !doc["amps"].is_array() ||
      doc["amps"].size() != 8) {
    throw std::invalid_argument("state file: expected an object with an 8-entry \"amps\" array");
  }
  ThreeQubitPure s;
  for (int i = 0; i < 8; ++i) {
    const auto& pair = doc["amps"][i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw std::invalid_argument("state file: each amplitude must be a [re, im] pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw std::invalid_argument("state file: non-finite amplitude");
    }
    s.amp[i] = Complex(re, im);
  }
  return s;
}

ThreeQubitPure parse_state_csv(const std::string& text) {
  std::vector<double> vals;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) {
    if (vals.size() >= 16) {
      throw std::invalid_argument("state file: more than 16 comma-separated values");
    }
    vals.push_back(parse_finite_double(field, "state file"));
  }
  if (vals.size() != 16) {
    throw std::invalid_argument("state file: expected 16 comma-separated values");
  }
  ThreeQubitPure s;
  for (int i = 0; i < 8; ++i) s.amp[i] = Complex(vals[2 * i], vals[2 * i + 1]);
  return s;
}

}  // namespace

std::string format_significant(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

ThreeQubitPure parse_state_text(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::invalid_argument("state file: empty");
  }
  if (text[first] == '{') return parse_state_json(text);
  return parse_state_csv(text);
}

ThreeQubitPure load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

std::string state_to_json(const ThreeQubitPure& s) {
  std::string out = "{\"amps\": [";
  for (int i = 0; i < 8; ++i) {
    out += '[';
    out += format_significant(s.amp[i].real(), 17);
    out += ", ";
    out += format_significant(s.amp[i].imag(), 17);
    out += ']';
    if (i != 7) out += ", ";
  }
  out += "]}";
  return out;
}

std::string state_to_csv_row(const ThreeQubitPure& s) {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += format_significant(s.amp[i].real(), 17);
    out += ',';
    out += format_significant(s.amp[i].imag(), 17);
  }
  return out;
}

}  // namespace triq
