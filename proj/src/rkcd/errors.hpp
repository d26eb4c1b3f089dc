/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef RKCD_ERRORS_HPP
#define RKCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rkcd {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  RankMismatch,
  Singular,
  NotPositiveDefinite,
  NotNormalized,
  EmptyBox,
  HypothesisViolated,
  Inconsistent,
  Verification,
};

const char* to_string(ErrorCode code) noexcept;

/// Residual formatting for diagnostics, e.g. "3.2e-11".
std::string format_residual(double value);

// All library failures are reported through this single exception type; the
// C API maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rkcd

#endif  // RKCD_ERRORS_HPP
