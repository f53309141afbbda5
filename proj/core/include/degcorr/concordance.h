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
#ifndef DEGCORR_CONCORDANCE_H_
#define DEGCORR_CONCORDANCE_H_

#include <cstdint>
#include <span>

namespace degcorr {

// Pairs {i, j}, i < j, with (x_i - x_j)(y_i - y_j) > 0 (concordant) and < 0
// (discordant). Pairs tied in either coordinate count in neither.
struct ConcordanceCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;

  friend bool operator==(const ConcordanceCounts&, const ConcordanceCounts&) = default;
};

// O(m log m): sort by (x, y), count discordant pairs as inversions of y by
// merge sort, and recover the concordant count from the tie-group sizes.
// Throws std::invalid_argument on a length mismatch.
ConcordanceCounts CountConcordance(std::span<const std::int64_t> x,
                                   std::span<const std::int64_t> y);

// O(m^2) reference implementation.
ConcordanceCounts CountConcordanceNaive(std::span<const std::int64_t> x,
                                        std::span<const std::int64_t> y);

}  // namespace degcorr

#endif  // DEGCORR_CONCORDANCE_H_
