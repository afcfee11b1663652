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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/lanczos.hpp"
#include "pcc/linops.hpp"
#include "pcc/partition.hpp"

namespace pcc {

struct SolverConfig {
  int lanczos_iters = 300;
  int refine_passes = 50;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

namespace detail {

inline void validate_solver_config(const SolverConfig& cfg) {
  if (cfg.lanczos_iters < 1) throw OutOfRange("lanczos_iters must be >= 1");
  if (cfg.refine_passes < 0) throw OutOfRange("refine_passes must be >= 0");
  if (!(cfg.tol > 0.0)) throw OutOfRange("tol must be positive");
}

}  // namespace detail

struct SpectralInfo {
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double ritz_value = 0.0;
  int start_redraws = 0;
};

/// Leading eigenvector of B restricted to the complement of the all-ones
/// direction, rounded by sign and repaired to a balanced labeling.
///
/// Rounding: v_i >= 0 maps to +1 (zeros round up).  Repair: while one side
/// is larger, the surplus vertices with the smallest |v_i| on that side
/// (ties broken by lower index) are moved across, perturbing the spectral
/// signal as little as possible.  Deterministic given cfg.seed.
inline std::pair<Partition, SpectralInfo> spectral_candidate(
    const SignedAdjacency& B, const SolverConfig& cfg) {
  detail::validate_solver_config(cfg);
  const std::int64_t n = B.n();
  if (n % 2 != 0) throw OddN("spectral_candidate requires even n");

  const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  LanczosOptions opts;
  opts.max_iters = cfg.lanczos_iters;
  opts.rel_tol = cfg.tol;
  opts.seed = rng::derive(cfg.seed, rng::kLaneSolver);
  opts.end = SpectrumEnd::Largest;
  opts.want_vector = true;
  LanczosOutcome lcz = lanczos_extreme(
      n,
      [&](std::span<const double> in, std::span<double> out) {
        std::vector<double> y = b_matvec(B, in);
        std::copy(y.begin(), y.end(), out.begin());
      },
      std::span<const std::vector<double>>(&ones, 1), opts);

  SpectralInfo info;
  info.iterations = lcz.iterations;
  info.residual = lcz.residual;
  info.converged = lcz.converged;
  info.ritz_value = lcz.ritz;
  info.start_redraws = lcz.start_redraws;

  const std::vector<double>& v = lcz.vector;
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
  std::int64_t plus = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const bool up = v[static_cast<std::size_t>(i)] >= 0.0;
    labels[static_cast<std::size_t>(i)] = up ? 1 : -1;
    if (up) ++plus;
  }

  const std::int64_t surplus = plus - n / 2;
  if (surplus != 0) {
    const std::int32_t from = surplus > 0 ? 1 : -1;
    std::vector<std::int64_t> side;
    for (std::int64_t i = 0; i < n; ++i) {
      if (labels[static_cast<std::size_t>(i)] == from) side.push_back(i);
    }
    std::stable_sort(side.begin(), side.end(),
                     [&](std::int64_t a, std::int64_t b) {
                       return std::abs(v[static_cast<std::size_t>(a)]) <
                              std::abs(v[static_cast<std::size_t>(b)]);
                     });
    const std::int64_t moves = std::abs(surplus);
    for (std::int64_t k = 0; k < moves; ++k) {
      labels[static_cast<std::size_t>(side[static_cast<std::size_t>(k)])] =
          -from;
    }
  }
  return {Partition(std::move(labels)), info};
}

struct RefineInfo {
  int swaps = 0;
  std::int64_t objective = 0;
};

/// Greedy pair-swap local search: repeatedly applies the (+1, -1) swap with
/// the largest exact gain in x^T B x while a strictly positive gain exists,
/// up to cfg.refine_passes swaps.  Balance is preserved and the objective
/// never decreases.
///
/// For a swap moving i from the +1 side and j from the -1 side the gain is
///   -4 (Bx)_i + 4 (Bx)_j + 8 - 16 A_ij,
/// so each pass scans the -1 side in decreasing (Bx)_j order and needs only
/// the best non-neighbor and the best neighbor of every i: O(m + n log n).
inline std::pair<Partition, RefineInfo> refine(const SignedAdjacency& B,
                                               const Partition& x,
                                               const SolverConfig& cfg) {
  detail::validate_solver_config(cfg);
  const std::int64_t n = B.n();
  if (x.size() != n) throw DimensionMismatch("refine: partition size != n");
  if (!x.is_balanced()) throw Unbalanced("refine requires a balanced input");

  std::vector<std::int32_t> labels(x.labels());
  std::vector<std::int64_t> g = b_matvec(B, x);  // g = Bx, maintained exactly
  RefineInfo info;
  info.objective = quad_form(B, x);

  std::vector<char> is_neighbor(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> minus_sorted;
  minus_sorted.reserve(static_cast<std::size_t>(n) / 2);

  for (int pass = 0; pass < cfg.refine_passes; ++pass) {
    minus_sorted.clear();
    for (std::int64_t j = 0; j < n; ++j) {
      if (labels[static_cast<std::size_t>(j)] == -1) minus_sorted.push_back(j);
    }
    std::sort(minus_sorted.begin(), minus_sorted.end(),
              [&](std::int64_t a, std::int64_t b) {
                const std::int64_t ga = g[static_cast<std::size_t>(a)];
                const std::int64_t gb = g[static_cast<std::size_t>(b)];
                return ga != gb ? ga > gb : a < b;
              });

    std::int64_t best_gain = 0;
    std::int64_t best_i = -1, best_j = -1;
    const auto consider = [&](std::int64_t gain, std::int64_t i,
                              std::int64_t j) {
      if (gain > best_gain ||
          (gain == best_gain && best_i >= 0 &&
           (i < best_i || (i == best_i && j < best_j)))) {
        best_gain = gain;
        best_i = i;
        best_j = j;
      }
    };

    for (std::int64_t i = 0; i < n; ++i) {
      if (labels[static_cast<std::size_t>(i)] != 1) continue;
      const std::int64_t base = -4 * g[static_cast<std::size_t>(i)] + 8;
      for (Vertex j : B.neighbors(i)) is_neighbor[static_cast<std::size_t>(j)] = 1;
      // Best -1-side neighbor of i (edge term -16).
      for (Vertex j : B.neighbors(i)) {
        if (labels[static_cast<std::size_t>(j)] == -1) {
          consider(base + 4 * g[static_cast<std::size_t>(j)] - 16, i, j);
        }
      }
      // Best -1-side non-neighbor of i: first unmarked in sorted order.
      for (std::int64_t j : minus_sorted) {
        if (!is_neighbor[static_cast<std::size_t>(j)]) {
          consider(base + 4 * g[static_cast<std::size_t>(j)], i, j);
          break;
        }
      }
      for (Vertex j : B.neighbors(i)) is_neighbor[static_cast<std::size_t>(j)] = 0;
    }

    if (best_gain <= 0) break;

    // Apply the swap and update g = Bx incrementally.
    labels[static_cast<std::size_t>(best_i)] = -1;
    labels[static_cast<std::size_t>(best_j)] = 1;
    for (Vertex k : B.neighbors(best_i)) g[static_cast<std::size_t>(k)] -= 4;
    for (Vertex k : B.neighbors(best_j)) g[static_cast<std::size_t>(k)] += 4;
    g[static_cast<std::size_t>(best_i)] -= 2;
    g[static_cast<std::size_t>(best_j)] += 2;
    info.objective += best_gain;
    ++info.swaps;
  }

  Partition out(std::move(labels));
  return {std::move(out), info};
}

struct SolveResult {
  Partition x;
  SpectralInfo spectral;
  RefineInfo refinement;
  std::int64_t objective = 0;
};

/// Full candidate recovery: spectral rounding followed by greedy swap
/// refinement.  Balanced output, deterministic given cfg.seed; a global
/// sign flip of the result is immaterial.
inline SolveResult solve(const SignedAdjacency& B, const SolverConfig& cfg) {
  auto [x0, spectral] = spectral_candidate(B, cfg);
  auto [x1, ref] = refine(B, x0, cfg);
  SolveResult out{std::move(x1), spectral, ref, ref.objective};
  return out;
}

}  // namespace pcc
