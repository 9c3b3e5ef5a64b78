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

#include <string>

#include "triq/states.hpp"

namespace triq {

/// Locale-independent decimal formatting ('.' separator, shortest round-trip
/// representation capped at `digits` significant digits).
std::string format_significant(double v, int digits);

/// Parses a state from either accepted text form: a JSON object
/// {"amps": [[re, im] x 8]} or a single CSV row
/// re000,im000,...,re111,im111. The form is sniffed from the first
/// non-whitespace character. Amplitudes are not normalized here.
ThreeQubitPure parse_state_text(const std::string& text);

ThreeQubitPure load_state_file(const std::string& path);

std::string state_to_json(const ThreeQubitPure& s);
std::string state_to_csv_row(const ThreeQubitPure& s);

}  // namespace triq
