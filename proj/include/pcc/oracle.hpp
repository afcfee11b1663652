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

// Brute-force ground truth for small instances.  Everything here is exact
// integer arithmetic over explicit enumerations; it exists to keep the
// fast paths honest.

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/linops.hpp"
#include "pcc/partition.hpp"

namespace pcc {

inline constexpr std::int64_t kBruteForceMaxN = 24;
inline constexpr std::int64_t kExhaustiveIdentityMaxN = 14;

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const SignedAdjacency& B) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(B.n()), 0);
  for (std::int64_t i = 0; i < B.n(); ++i) {
    for (Vertex j : B.neighbors(i)) {
      adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    }
  }
  return adj;
}

// Edges cut by the vertex set S (as a bitmask): each cross edge is counted
// exactly once, from its endpoint inside S.
inline std::int64_t cut_edges(const std::vector<std::uint32_t>& adj,
                              std::uint32_t set, std::uint32_t full) {
  std::int64_t cut = 0;
  std::uint32_t rest = set;
  while (rest != 0) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    cut += std::popcount(adj[static_cast<std::size_t>(i)] & full & ~set);
  }
  return cut;
}

// Next bitmask with the same popcount (Gosper's hack).
inline std::uint32_t next_combination(std::uint32_t v) {
  const std::uint32_t c = v & (0u - v);
  const std::uint32_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

inline Partition partition_from_mask(std::uint32_t mask, std::int64_t n) {
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] =
        (mask >> i) & 1u ? 1 : -1;
  }
  return Partition(std::move(labels));
}

}  // namespace detail

struct BruteForceResult {
  std::int64_t n = 0;
  std::int64_t opt_value = 0;
  /// All maximizing bisections as +1-side bitmasks; vertex 0 is fixed on
  /// the +1 side, which quotients the global-sign symmetry.
  std::vector<std::uint32_t> optima_masks;

  std::int64_t num_optima() const {
    return static_cast<std::int64_t>(optima_masks.size());
  }

  std::vector<Partition> optima() const {
    std::vector<Partition> out;
    out.reserve(optima_masks.size());
    for (std::uint32_t mask : optima_masks) {
      out.push_back(detail::partition_from_mask(mask, n));
    }
    return out;
  }
};

/// Enumerates every balanced +/-1 labeling with the first entry fixed to
/// +1 and returns the maximum of x^T B x together with all maximizers.
inline BruteForceResult brute_force_bisection(
    const SignedAdjacency& B, std::int64_t max_n = kBruteForceMaxN) {
  const std::int64_t n = B.n();
  if (n > max_n || n > kBruteForceMaxN) {
    throw TooLarge("brute force enumeration guard");
  }
  if (n % 2 != 0) throw OddN("bisection needs even n");

  const std::vector<std::uint32_t> adj = detail::adjacency_masks(B);
  const std::uint32_t full =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1u;
  const std::int64_t m = B.num_edges();

  BruteForceResult result;
  result.n = n;
  result.opt_value = std::numeric_limits<std::int64_t>::min();

  // Choose n/2 - 1 companions of vertex 0 among the other n - 1 vertices.
  const int bits = static_cast<int>(n) - 1;
  const int choose = static_cast<int>(n) / 2 - 1;
  std::uint32_t sub = choose == 0 ? 0u : (std::uint32_t{1} << choose) - 1u;
  const std::uint32_t limit = std::uint32_t{1} << bits;
  while (true) {
    const std::uint32_t mask = (sub << 1) | 1u;
    // For balanced x: x^T B x = n + 4 (m - 2 cut).
    const std::int64_t value =
        n + 4 * (m - 2 * detail::cut_edges(adj, mask, full));
    if (value > result.opt_value) {
      result.opt_value = value;
      result.optima_masks.clear();
    }
    if (value == result.opt_value) result.optima_masks.push_back(mask);
    if (choose == 0) break;
    sub = detail::next_combination(sub);
    if (sub >= limit) break;
  }
  return result;
}

/// Verifies, for ALL x in {+/-1}^n, the exact integer identity
///
///   quad(x_nat) - quad(x) = x^T (D - B) x
///
/// with D built from x_nat, including the intermediate form whose
/// sum_i D_ii (1 - x_i^2) term must vanish entrywise.  The left side is
/// evaluated by edge counting and the right side by entrywise matvecs, so
/// the two routes share no code path.
inline bool exhaustive_identity_check(
    const SignedAdjacency& B, const DualDiagonal& d, const Partition& x_nat,
    std::int64_t max_n = kExhaustiveIdentityMaxN) {
  const std::int64_t n = B.n();
  if (n > max_n || n > kExhaustiveIdentityMaxN) {
    throw TooLarge("exhaustive identity guard");
  }
  if (d.size() != n || x_nat.size() != n) {
    throw DimensionMismatch("exhaustive_identity_check: dimensions");
  }

  const std::vector<std::uint32_t> adj = detail::adjacency_masks(B);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1u;
  const std::int64_t m = B.num_edges();
  const std::int64_t quad_nat = quad_form(B, x_nat);

  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    // LHS via edge counting: quad(x) = 4(m - 2 cut) - s^2 + n.
    const std::int64_t pop = std::popcount(mask);
    const std::int64_t s = 2 * pop - n;
    const std::int64_t quad_x =
        4 * (m - 2 * detail::cut_edges(adj, mask, full)) - s * s + n;
    const std::int64_t lhs = quad_nat - quad_x;

    // RHS entrywise: sum_i x_i (d_i x_i - (Bx)_i).
    std::int64_t rhs = 0;
    std::int64_t vanish = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t xi = (mask >> i) & 1u ? 1 : -1;
      const std::int64_t nbr_sum =
          2 * std::popcount(adj[static_cast<std::size_t>(i)] & mask) -
          B.degree(i);
      const std::int64_t bx_i = 2 * nbr_sum - s + xi;
      rhs += xi * (d.d[static_cast<std::size_t>(i)] * xi - bx_i);
      vanish += d.d[static_cast<std::size_t>(i)] * (1 - xi * xi);
    }
    if (vanish != 0) return false;
    if (lhs != rhs + vanish) return false;
  }
  return true;
}

inline bool exhaustive_identity_check(
    const SignedAdjacency& B, const Partition& x_nat,
    std::int64_t max_n = kExhaustiveIdentityMaxN) {
  return exhaustive_identity_check(B, build_dual_diagonal(B, x_nat), x_nat,
                                   max_n);
}

/// True iff x is the unique maximizer (up to global sign) found by the
/// brute-force enumeration.  Unbalanced labelings are never witnesses.
inline bool uniqueness_witness(const SignedAdjacency& B, const Partition& x,
                               std::int64_t max_n = kBruteForceMaxN) {
  const std::int64_t n = B.n();
  if (n > max_n || n > kBruteForceMaxN) {
    throw TooLarge("brute force enumeration guard");
  }
  if (x.size() != n) throw DimensionMismatch("uniqueness_witness: size");
  if (!x.is_balanced()) return false;

  const Partition canon = x.canonical();
  std::uint32_t mask = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (canon[i] == 1) mask |= std::uint32_t{1} << i;
  }
  const BruteForceResult bf = brute_force_bisection(B, max_n);
  return bf.optima_masks.size() == 1 && bf.optima_masks[0] == mask;
}

}  // namespace pcc
