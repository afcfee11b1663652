// Copyright 2026 The pcc Authors.
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

#include <cstdint>

namespace pcc::rng {

// All randomness in this library flows through SplitMix64 (Steele, Lea,
// Flood, "Fast splittable pseudorandom number generators", OOPSLA 2014; the
// standard public-domain constants).  SplitMix64 is counter-based: the k-th
// output of a stream is a pure function of (seed, k), so any work item --
// a vertex pair, a sweep trial, a Lanczos restart -- can derive its own
// value or sub-stream without sequencing.  That is what makes sampling and
// sweeps reproducible independent of traversal order or thread count.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 output (finalization) function: a 64-bit avalanche bijection.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// The k-th output of the SplitMix64 stream started at `seed` (0-indexed).
/// Random access into the stream; `at(seed, k)` equals the (k+1)-th call to
/// `SplitMix64(seed).next()`.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed + (k + 1) * kGolden);
}

/// Derives an independent sub-seed for a named lane (hidden partition,
/// edge coins, solver, per-trial, ...).  Never collides with `at` counters
/// of the parent stream because the parent seed is mixed first.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t lane) {
  return at(mix64(seed ^ 0x5CC61E11B2D01E5ULL), lane);
}

/// Maps a 64-bit word to a double in [0, 1) using the top 53 bits.
constexpr double to_unit(std::uint64_t u) {
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Stream lanes used across the library.  Fixed so that file formats and
// sweep CSVs are stable across versions.
inline constexpr std::uint64_t kLaneHidden = 1;
inline constexpr std::uint64_t kLaneEdges = 2;
inline constexpr std::uint64_t kLaneSolver = 3;
inline constexpr std::uint64_t kLaneCertify = 4;
inline constexpr std::uint64_t kLaneSweepCellBase = 1000;

/// Stateful view of the SplitMix64 sequence; `next()` walks the same
/// sequence `at(seed, k)` indexes.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return to_unit(next()); }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return u % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace pcc::rng
