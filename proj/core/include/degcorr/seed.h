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
#ifndef DEGCORR_SEED_H_
#define DEGCORR_SEED_H_

#include <cstdint>
#include <initializer_list>

namespace degcorr {

// SplitMix64 finalizer applied to `x + 0x9e3779b97f4a7c15`.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed derivation used everywhere a seed fans out:
//
//   h = SplitMix64(master); for each part p: h = SplitMix64(h ^ p)
//
// The sequence is order sensitive, so (size_index, replica_index, purpose)
// tuples never collide structurally. Pinned by tests; changing it changes
// every generated artifact.
constexpr std::uint64_t DeriveSeed(std::uint64_t master,
                                   std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = SplitMix64(master);
  for (std::uint64_t p : parts) h = SplitMix64(h ^ p);
  return h;
}

// Purpose tags mixed into derived seeds.
enum class SeedPurpose : std::uint64_t {
  kBiDegree = 1,
  kPairing = 2,
  kSourceNoise = 3,
  kTargetNoise = 4,
  kTieBreakReplica = 5,
  kSample = 6,
  kGraph = 7,
};

constexpr std::uint64_t Tag(SeedPurpose p) {
  return static_cast<std::uint64_t>(p);
}

}  // namespace degcorr

#endif  // DEGCORR_SEED_H_
