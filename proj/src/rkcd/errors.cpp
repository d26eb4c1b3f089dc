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

#include "rkcd/errors.hpp"

#include <cstdio>

namespace rkcd {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::RankMismatch: return "rank mismatch";
    case ErrorCode::Singular: return "singular constant term";
    case ErrorCode::NotPositiveDefinite: return "not positive definite";
    case ErrorCode::NotNormalized: return "kernel not normalized";
    case ErrorCode::EmptyBox: return "empty validity box";
    case ErrorCode::HypothesisViolated: return "hypothesis violated";
    case ErrorCode::Inconsistent: return "inconsistent input";
    case ErrorCode::Verification: return "verification failure";
  }
  return "unknown error";
}

std::string format_residual(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", value);
  return buf;
}

}  // namespace rkcd
