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
#ifndef DEGCORR_DEGREE_TYPE_H_
#define DEGCORR_DEGREE_TYPE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace degcorr {

enum class DegreeType : std::uint8_t { kOut, kIn };

enum class EdgeSide : std::uint8_t { kSource, kTarget };

constexpr std::string_view Name(DegreeType t) { return t == DegreeType::kOut ? "out" : "in"; }

// Which degree is read at each end of an edge: `source` indexes the degree
// type at the tail, `target` the one at the head.
struct DegreeTypePair {
  DegreeType source = DegreeType::kOut;
  DegreeType target = DegreeType::kIn;

  friend constexpr bool operator==(DegreeTypePair, DegreeTypePair) = default;
  friend constexpr auto operator<=>(DegreeTypePair a, DegreeTypePair b) {
    return a.Index() <=> b.Index();
  }

  // "out-in", "in-out", "out-out", "in-in".
  std::string Name() const {
    return std::string(degcorr::Name(source)) + "-" + std::string(degcorr::Name(target));
  }

  // Position in All().
  constexpr int Index() const {
    if (source == DegreeType::kOut) return target == DegreeType::kIn ? 0 : 2;
    return target == DegreeType::kOut ? 1 : 3;
  }

  static std::optional<DegreeTypePair> Parse(std::string_view name) {
    for (DegreeTypePair p : All()) {
      if (p.Name() == name) return p;
    }
    return std::nullopt;
  }

  // Canonical order: out-in, in-out, out-out, in-in.
  static constexpr std::array<DegreeTypePair, 4> All() {
    return {{{DegreeType::kOut, DegreeType::kIn},
             {DegreeType::kIn, DegreeType::kOut},
             {DegreeType::kOut, DegreeType::kOut},
             {DegreeType::kIn, DegreeType::kIn}}};
  }
};

}  // namespace degcorr

#endif  // DEGCORR_DEGREE_TYPE_H_
