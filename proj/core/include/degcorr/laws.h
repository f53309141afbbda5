// Copyright 2026 The degcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef DEGCORR_LAWS_H_
#define DEGCORR_LAWS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "degcorr/pmf.h"

namespace degcorr {

struct LawOptions {
  static constexpr std::int64_t kDefaultZetaKmax = 1'000'000;
  // Environment variable overriding kDefaultZetaKmax.
  static constexpr const char* kZetaKmaxEnv = "DEGCORR_ZETA_KMAX";

  std::int64_t zeta_kmax = kDefaultZetaKmax;

  // Defaults with DEGCORR_ZETA_KMAX applied when set. Throws
  // std::invalid_argument if the variable is not a positive integer.
  static LawOptions FromEnvironment();
};

// Parses a named law:
//   zeta:a        P(k) ∝ k^-a, 1 <= k <= zeta_kmax (a > 1)
//   poisson:l     truncated where individual masses drop below 1e-12, then
//                 renormalized
//   geometric:p   P(k) = p (1-p)^k, k >= 0, same truncation
//   uniform:a..b  uniform on the integers a..b
//   point:k       point mass
// Throws std::invalid_argument with a usage hint on anything else.
Pmf ParseLaw(std::string_view spec, const LawOptions& options = {});

// "value<TAB>probability" per line; blank lines and '#' comments ignored.
// Throws ParseError with the offending line.
Pmf ReadPmf(std::istream& in, const std::string& source_name);
// "x<TAB>y<TAB>probability" per line, same conventions.
JointPmf ReadJointPmf(std::istream& in, const std::string& source_name);

}  // namespace degcorr

#endif  // DEGCORR_LAWS_H_
