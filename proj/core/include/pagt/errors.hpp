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

#include <stdexcept>
#include <string>
#include <vector>

namespace pagt {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an iterative solver or the adaptive integrator gives up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

struct ValidationIssue {
  std::string pointer;  // JSON pointer into the offending document
  std::string message;
};

class SpecValidationError : public std::runtime_error {
 public:
  explicit SpecValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace pagt

namespace pagt {

/// A quantity that divides by the spectral gap met a vanishing gap.
class ZeroGapError : public std::runtime_error {
 public:
  ZeroGapError(const std::string& what, double s) : std::runtime_error(what), s_(s) {}
  double s() const noexcept { return s_; }

 private:
  double s_;
};

}  // namespace pagt
