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

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/partition.hpp"
#include "pcc/rng.hpp"

namespace pcc {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Hard cap on the vertex count.  With n <= 2^30 every integer quantity in
// the library (quadratic forms, dual diagonals, degrees) is bounded by
// n^2 + n < 2^61 and fits an int64 with no overflow path.
inline constexpr std::int64_t kMaxVertices = std::int64_t{1} << 30;

/// Distribution parameters of the two-community stochastic block model:
/// n vertices split into two hidden clusters of n/2; a pair inside a
/// cluster is an edge with probability p, a pair across clusters with
/// probability q, all pairs independent.  Requires 0 <= q < p <= 1.
struct SbmParams {
  std::int64_t n = 0;
  double p = 0.0;
  double q = 0.0;
  /// Set when constructed on the log scale: p = alpha*ln(n)/n,
  /// q = beta*ln(n)/n (natural log).
  std::optional<double> alpha;
  std::optional<double> beta;
};

namespace detail {

inline void validate_n(std::int64_t n) {
  if (n % 2 != 0) throw OddN("n must be even");
  if (n < 4) throw OutOfRange("n must be at least 4");
  if (n > kMaxVertices) throw OutOfRange("n exceeds the supported maximum");
}

inline void validate_params(const SbmParams& params) {
  validate_n(params.n);
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw OutOfRange("p must lie in [0, 1]");
  }
  if (!(params.q >= 0.0 && params.q <= 1.0)) {
    throw OutOfRange("q must lie in [0, 1]");
  }
  if (!(params.q < params.p)) {
    throw Degenerate("q must be strictly below p");
  }
}

}  // namespace detail

/// Validated parameters with explicit edge probabilities.
inline SbmParams make_params(std::int64_t n, double p, double q) {
  SbmParams params{n, p, q, std::nullopt, std::nullopt};
  detail::validate_params(params);
  return params;
}

/// Validated parameters on the log scale: p = alpha*ln(n)/n and
/// q = beta*ln(n)/n.  A probability above 1 is an error, not a clamp.
inline SbmParams make_params_logscale(std::int64_t n, double alpha,
                                      double beta) {
  detail::validate_n(n);
  const double scale = std::log(static_cast<double>(n)) / static_cast<double>(n);
  SbmParams params{n, alpha * scale, beta * scale, alpha, beta};
  detail::validate_params(params);
  return params;
}

/// One sampled graph together with the planted partition and the seed that
/// produced it.  `hidden` and `params` are absent when the instance was
/// loaded from a file that does not carry them.
struct Instance {
  std::int64_t n = 0;
  std::vector<Edge> edges;  // i < j, sorted lexicographically, no duplicates
  std::optional<Partition> hidden;
  std::uint64_t seed = 0;
  std::optional<SbmParams> params;
};

namespace detail {

// Coin counter for the unordered pair (i, j), i < j.  Unique for
// n <= kMaxVertices.
constexpr std::uint64_t pair_key(Vertex i, Vertex j) {
  return (static_cast<std::uint64_t>(i) << 31) |
         static_cast<std::uint64_t>(j);
}

}  // namespace detail

/// Samples an instance.  The hidden partition is a uniformly random
/// balanced labeling; every unordered pair is an independent coin derived
/// from (seed, i, j), so the result is a pure function of (params, seed)
/// regardless of traversal or threading.
inline Instance sample_instance(const SbmParams& params, std::uint64_t seed) {
  detail::validate_params(params);
  const std::int64_t n = params.n;

  // Pick n/2 vertices for the +1 side by a partial Fisher-Yates shuffle.
  rng::SplitMix64 pick(rng::derive(seed, rng::kLaneHidden));
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (std::int64_t k = 0; k < n / 2; ++k) {
    const std::int64_t r =
        k + static_cast<std::int64_t>(pick.next_below(
                static_cast<std::uint64_t>(n - k)));
    std::swap(order[static_cast<std::size_t>(k)],
              order[static_cast<std::size_t>(r)]);
  }
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n), -1);
  for (std::int64_t k = 0; k < n / 2; ++k) {
    labels[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = 1;
  }

  Instance inst;
  inst.n = n;
  inst.seed = seed;
  inst.params = params;

  if (params.p > 0.0 || params.q > 0.0) {
    const std::uint64_t edge_seed = rng::derive(seed, rng::kLaneEdges);
    const double pairs =
        static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    const double expected = pairs * (params.p + params.q) / 2.0;
    inst.edges.reserve(static_cast<std::size_t>(
        expected + 6.0 * std::sqrt(expected + 1.0) + 16.0));
    for (Vertex i = 0; i < n; ++i) {
      const std::int32_t li = labels[static_cast<std::size_t>(i)];
      for (Vertex j = i + 1; j < n; ++j) {
        const double prob =
            li == labels[static_cast<std::size_t>(j)] ? params.p : params.q;
        const std::uint64_t u = rng::at(edge_seed, detail::pair_key(i, j));
        if (rng::to_unit(u) < prob) inst.edges.emplace_back(i, j);
      }
    }
  }

  inst.hidden = Partition(std::move(labels));
  return inst;
}

}  // namespace pcc
