// Copyright 2026 The pagt Authors
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
#include <vector>

#include <nlohmann/json.hpp>

#include "pagt/errors.hpp"
#include "pagt/schemes.hpp"

namespace pagt {

/// Parses a scheme spec, collecting every problem with its JSON pointer
/// before throwing SpecValidationError. `seed` drives "haar" states that
/// carry no seed of their own.
SchemeSpec parse_scheme_spec(const nlohmann::json& doc, std::uint64_t seed = 0);

/// Single-qubit state: "0", "1", "+", "-", "+i", "-i", {"haar": seed},
/// or two amplitudes given as numbers or [re, im] pairs.
ComplexVector parse_state(const nlohmann::json& j, std::uint64_t default_seed = 0);

/// Named unitary or a 2x2 matrix of numbers or [re, im] pairs, nested or
/// flattened row-major.
SingleQubitUnitary parse_unitary(const nlohmann::json& j);

ComplexVector haar_state(std::uint64_t seed);

/// Rounds to 12 significant digits so that emitted values are stable.
double round12(double x);

/// Report with a stable key order. The "meta" block carries the only
/// run-dependent fields and is omitted when include_meta is false.
nlohmann::ordered_json report_to_json(const SchemeReport& report, bool include_meta);

nlohmann::ordered_json issues_to_json(const std::vector<ValidationIssue>& issues);

}  // namespace pagt
